#include "tropitor/torelli.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tropitor {

void TropicalCurve::validate() const {
    if (!graph.is_stable()) throw StructuralError("curve's combinatorial type is not stable");
    for (int e = 0; e < graph.num_edges(); ++e) {
        Rat l = lengths.at(graph.edge_name(e));
        if (l <= 0) throw StructuralError("edge '" + graph.edge_name(e) + "' needs a positive length");
    }
}

RatVec TropicalCurve::length_vector() const {
    RatVec out(graph.num_edges());
    for (int e = 0; e < graph.num_edges(); ++e) out[e] = lengths.at(graph.edge_name(e));
    return out;
}

QuadForm torelli_point(const TropicalCurve& c) {
    c.validate();
    Orientation o = default_orientation(c.graph);
    return jacobian(c.graph, o, h1_basis(c.graph, o), c.lengths);
}

CellImage torelli_cell_image(const WeightedGraph& g) {
    if (!g.is_stable()) throw StructuralError("cell image expects a stable graph");
    Matroid simple = cographic_matroid(g).simplify().matroid;
    int dim = simple.ground_size();
    return {std::move(simple), dim};
}

MetricClass metric_class(const TropicalCurve& c) {
    c.validate();
    std::vector<int> old_to_new, class_rep;
    WeightedGraph rep = c.graph.three_edge_connectivization(&old_to_new, &class_rep);
    // aggregate lengths over C1-sets; separating edges vanish
    MetricClass out;
    out.representative = rep;
    for (int e = 0; e < rep.num_edges(); ++e) out.lengths.lengths[rep.edge_name(e)] = 0;
    for (int e = 0; e < c.graph.num_edges(); ++e) {
        int keeper = class_rep[e];
        if (keeper < 0) continue; // separating edge
        int new_index = old_to_new[keeper];
        out.lengths.lengths[rep.edge_name(new_index)] += c.lengths.at(c.graph.edge_name(e));
    }
    out.matroid = graphic_matroid(rep);
    out.element_lengths.resize(rep.num_edges());
    for (int e = 0; e < rep.num_edges(); ++e)
        out.element_lengths[e] = out.lengths.at(rep.edge_name(e));

    // invariant token: matroid fingerprint plus the sorted (profile, length)
    // pairs; classes that match under a length-compatible isomorphism agree
    std::vector<std::vector<int>> profile(rep.num_edges());
    for (GroundSubset circ : out.matroid.circuits()) {
        int sz = popcount(circ);
        for (int e = 0; e < rep.num_edges(); ++e)
            if (circ & (1u << e)) profile[e].push_back(sz);
    }
    std::vector<std::string> parts;
    for (int e = 0; e < rep.num_edges(); ++e) {
        std::sort(profile[e].begin(), profile[e].end());
        std::ostringstream p;
        p << rat_str(out.element_lengths[e]) << "@";
        for (int s : profile[e]) p << s << ".";
        parts.push_back(p.str());
    }
    std::sort(parts.begin(), parts.end());
    std::ostringstream tok;
    tok << out.matroid.iso_fingerprint() << "#";
    for (const auto& p : parts) tok << p << "|";
    out.token = tok.str();
    return out;
}

namespace {

// Length-compatible matroid isomorphism by folding the values into the
// element profiles of a brute search.
std::optional<std::vector<int>> matroid_iso_with_values(const Matroid& m1, const std::vector<Rat>& v1,
                                                        const Matroid& m2, const std::vector<Rat>& v2) {
    int n = m1.ground_size();
    if (n != m2.ground_size() || m1.rank() != m2.rank() ||
        m1.bases().size() != m2.bases().size())
        return std::nullopt;
    std::set<GroundSubset> circ2(m2.circuits().begin(), m2.circuits().end());
    if (m1.circuits().size() != circ2.size()) return std::nullopt;

    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    GroundSubset mapped = 0;
    auto rec = [&](auto&& self, int e) -> bool {
        if (e == n) return true;
        for (int img = 0; img < n; ++img) {
            if (used[img] || v1[e] != v2[img]) continue;
            map[e] = img;
            used[img] = true;
            mapped |= (1u << e);
            bool ok = true;
            for (GroundSubset c : m1.circuits()) {
                if ((c & mapped) != c || !(c & (1u << e))) continue;
                GroundSubset imgc = 0;
                for (int x = 0; x < n; ++x)
                    if (c & (1u << x)) imgc |= (1u << map[x]);
                if (!circ2.count(imgc)) { ok = false; break; }
            }
            if (ok && self(self, e + 1)) return true;
            mapped &= ~(1u << e);
            used[img] = false;
            map[e] = -1;
        }
        return false;
    };
    if (rec(rec, 0)) return map;
    return std::nullopt;
}

} // namespace

SameJacobianResult same_jacobian(const TropicalCurve& c1, const TropicalCurve& c2) {
    if (c1.genus() != c2.genus()) throw StructuralError("curves have different genus");
    MetricClass k1 = metric_class(c1), k2 = metric_class(c2);
    SameJacobianResult res;
    if (k1.token != k2.token) {
        res.same = false;
        res.detail = "class invariants differ";
        return res;
    }
    auto match = matroid_iso_with_values(k1.matroid, k1.element_lengths, k2.matroid, k2.element_lengths);
    if (match) {
        res.same = true;
        res.matching = match;
        res.detail = "length-compatible matroid isomorphism found";
    } else {
        res.same = false;
        res.detail = "equal invariants but no length-compatible isomorphism";
    }
    return res;
}

SchottkyResult schottky_membership(const Matroid& simple_matroid, int genus_cap) {
    if (!simple_matroid.is_simple()) throw StructuralError("schottky test expects a simple matroid");
    if (genus_cap > 4) throw CapacityError("schottky search capped at genus 4");
    SchottkyResult out;
    for (const WeightedGraph& g : three_edge_connected_graphs_up_to_genus(genus_cap)) {
        Matroid m = cographic_matroid(g);
        if (m.ground_size() != simple_matroid.ground_size()) continue;
        if (matroid_isomorphic(m, simple_matroid)) {
            out.in_image = true;
            out.realizing = g;
            return out;
        }
    }
    return out;
}

SchottkyResult schottky_membership(const QuadForm& q, const TUMatrix& a, int genus_cap) {
    // q must lie in the cone of a: solve a diag(l) a^t = q exactly
    const IntMatrix& m = a.matrix();
    int g = m.rows(), n = m.cols();
    if (q.dim() != g) throw StructuralError("form dimension does not match the matrix");
    std::vector<std::pair<int, int>> eqs;
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j) eqs.push_back({i, j});
    RatMatrix sys(static_cast<int>(eqs.size()), n);
    RatVec rhs(eqs.size());
    for (size_t r = 0; r < eqs.size(); ++r) {
        auto [i, j] = eqs[r];
        for (int c = 0; c < n; ++c) sys(static_cast<int>(r), c) = Rat(m(i, c) * m(j, c));
        rhs[r] = q.matrix()(i, j);
    }
    auto l = solve(sys, rhs);
    if (!l) throw StructuralError("form does not lie in the cone of the given matrix");
    Matroid simple = vector_matroid(a).simplify().matroid;
    return schottky_membership(simple, genus_cap);
}

PlanarImageResult planar_image_test(const WeightedGraph& g) {
    PlanarImageResult out;
    out.planar = g.is_planar();
    Matroid simple = cographic_matroid(g).simplify().matroid;
    out.cographic_graphic = is_graphic(simple).has_value();
    if (out.planar != out.cographic_graphic)
        throw StructuralError("planarity and cographic-graphicness disagree on " +
                              g.canonical_form().token);
    return out;
}

IntVec oriented_cycle_vector(const WeightedGraph& g, const Orientation& o, EdgeSubset cycle) {
    IntVec z(g.num_edges(), Int(0));
    // walk the 2-regular subgraph with consistent direction
    std::vector<int> members;
    for (int e = 0; e < g.num_edges(); ++e)
        if (cycle & (1u << e)) members.push_back(e);
    if (members.empty()) return z;
    std::vector<bool> visited(g.num_edges(), false);
    int first = members.front();
    auto [s0, t0] = o.st[first];
    z[first] = 1;
    visited[first] = true;
    int at = t0;
    while (at != s0 || std::any_of(members.begin(), members.end(), [&](int e) { return !visited[e]; })) {
        bool advanced = false;
        for (int e : members) {
            if (visited[e]) continue;
            auto [s, t] = o.st[e];
            if (s == at) {
                z[e] = 1;
                at = t;
            } else if (t == at) {
                z[e] = -1;
                at = s;
            } else {
                continue;
            }
            visited[e] = true;
            advanced = true;
            break;
        }
        if (!advanced) throw StructuralError("edge subset is not a single cycle");
    }
    return z;
}

LengthAssignment reconstruct_lengths(const QuadForm& q, const WeightedGraph& g,
                                     const Orientation& o, const IntegerChainBasis& b) {
    if (q.dim() != b.size())
        throw StructuralError("form dimension does not match the basis size");
    std::vector<EdgeSubset> cyc = g.cycles();
    std::vector<IntVec> oriented;
    for (EdgeSubset c : cyc) oriented.push_back(oriented_cycle_vector(g, o, c));

    auto coords_int = [&](const IntVec& z) {
        auto x = cycle_coordinates(b, z);
        if (!x) throw StructuralError("cycle outside the span of the basis");
        IntVec out(x->size());
        for (size_t i = 0; i < x->size(); ++i) {
            if (denominator((*x)[i]) != 1) throw StructuralError("basis is not a lattice basis");
            out[i] = numerator((*x)[i]);
        }
        return out;
    };

    LengthAssignment out;
    for (int e = 0; e < g.num_edges(); ++e) {
        bool found = false;
        for (size_t i = 0; i < cyc.size() && !found; ++i) {
            if (!(cyc[i] & (1u << e))) continue;
            for (size_t j = 0; j < cyc.size() && !found; ++j) {
                if (i == j || !(cyc[j] & (1u << e))) continue;
                if ((cyc[i] & cyc[j]) != (1u << e)) continue; // supports meet exactly in e
                IntVec z1 = oriented[i], z2 = oriented[j];
                if (z1[e] * z2[e] < 0)
                    for (Int& x : z2) x = -x; // align traversal through e
                Rat value = 0;
                IntVec x1 = coords_int(z1), x2 = coords_int(z2);
                for (int r = 0; r < q.dim(); ++r)
                    for (int c = 0; c < q.dim(); ++c)
                        if (x1[r] != 0 && x2[c] != 0) value += q.matrix()(r, c) * Rat(x1[r] * x2[c]);
                out.lengths[g.edge_name(e)] = value;
                found = true;
            }
        }
        if (!found)
            throw StructuralError("no cycle pair meets exactly in edge '" + g.edge_name(e) +
                                  "'; the graph is not 3-edge-connected");
    }
    // the reconstruction must reproduce the form exactly
    QuadForm check = jacobian(g, o, b, out);
    if (!(check == q))
        throw StructuralError("reconstructed lengths do not reproduce the form");
    return out;
}

} // namespace tropitor
