#include "tropitor/moduli.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace tropitor {

// ---------------------------------------------------------------------------
// CellComplex basics

std::vector<int> CellComplex::maximal_cells() const {
    std::vector<bool> has_super(cells.size(), false);
    for (const CoverRelation& c : covers) has_super[c.sub] = true;
    std::vector<int> out;
    for (size_t i = 0; i < cells.size(); ++i)
        if (!has_super[i]) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> CellComplex::cells_of_dim(int d) const {
    std::vector<int> out;
    for (const Cell& c : cells)
        if (c.dim == d) out.push_back(c.id);
    return out;
}

int CellComplex::max_dim() const {
    int d = 0;
    for (const Cell& c : cells) d = std::max(d, c.dim);
    return d;
}

bool CellComplex::less_equal(int sub, int super) const {
    if (sub == super) return true;
    std::vector<bool> seen(cells.size(), false);
    std::queue<int> q;
    q.push(sub);
    seen[sub] = true;
    while (!q.empty()) {
        int cur = q.front();
        q.pop();
        for (const CoverRelation& c : covers) {
            if (c.sub != cur || seen[c.super]) continue;
            if (c.super == super) return true;
            seen[c.super] = true;
            q.push(c.super);
        }
    }
    return false;
}

std::vector<int> CellComplex::covering_supers(int sub) const {
    std::set<int> out;
    for (const CoverRelation& c : covers)
        if (c.sub == sub) out.insert(c.super);
    return std::vector<int>(out.begin(), out.end());
}

// ---------------------------------------------------------------------------
// multigraph generation by degree-constrained edge multisets

namespace {

bool spansConnected(int nv, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(nv);
    for (auto& [a, b] : edges)
        if (a != b) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
    std::vector<bool> seen(nv, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int cnt = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = true;
                ++cnt;
                stack.push_back(v);
            }
    }
    return cnt == nv;
}

// Backtracking over edge multiplicities per vertex-pair slot (lexicographic,
// loops included). degree_cap bounds every vertex degree; min_degree is
// enforced as soon as a vertex can no longer gain edges.
std::vector<WeightedGraph> generate_multigraphs(int nv, int ne, int degree_cap, int min_degree) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < nv; ++i)
        for (int j = i; j < nv; ++j) slots.push_back({i, j});

    std::vector<int> deg(nv, 0);
    std::vector<int> mult(slots.size(), 0);
    std::vector<WeightedGraph> out;
    std::set<std::string> seen;

    auto rec = [&](auto&& self, size_t slot, int placed) -> void {
        if (placed == ne) {
            for (int v = 0; v < nv; ++v)
                if (deg[v] < min_degree || deg[v] > degree_cap) return;
            std::vector<std::pair<int, int>> edges;
            for (size_t s = 0; s < slots.size(); ++s)
                for (int k = 0; k < mult[s]; ++k) edges.push_back(slots[s]);
            if (!spansConnected(nv, edges)) return;
            WeightedGraph g(std::vector<int>(nv, 0), edges);
            if (seen.insert(g.canonical_form().token).second) out.push_back(std::move(g));
            return;
        }
        if (slot == slots.size()) return;
        auto [a, b] = slots[slot];
        // vertices below the current slot's first endpoint are finalized
        if (slot > 0 && slots[slot - 1].first < a) {
            for (int v = 0; v < a; ++v)
                if (deg[v] < min_degree) return;
        }
        // remaining degree demand must fit into the remaining edge ends
        long long demand = 0;
        for (int v = 0; v < nv; ++v) demand += std::max(0, min_degree - deg[v]);
        if (demand > 2LL * (ne - placed)) return;

        int inc = (a == b) ? 2 : 1;
        int room = std::min(ne - placed, (degree_cap - deg[a]) / inc);
        if (a != b) room = std::min(room, degree_cap - deg[b]);
        for (int k = 0; k <= std::max(room, 0); ++k) {
            deg[a] += inc * k;
            if (a != b) deg[b] += k;
            mult[slot] = k;
            self(self, slot + 1, placed + k);
            deg[a] -= inc * k;
            if (a != b) deg[b] -= k;
            mult[slot] = 0;
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end(), [](const WeightedGraph& x, const WeightedGraph& y) {
        return x.canonical_form().token < y.canonical_form().token;
    });
    return out;
}

} // namespace

std::vector<WeightedGraph> generate_multigraphs_exact_degree(int nv, int ne, int degree) {
    if (2 * ne != nv * degree) return {};
    return generate_multigraphs(nv, ne, degree, degree);
}

std::vector<WeightedGraph> generate_multigraphs_min_degree3(int nv, int ne) {
    if (nv == 1) {
        if (ne == 0) return {single_vertex(0)};
        return {wedge_of_loops(ne, 0)};
    }
    if (2 * ne < 3 * nv) return {};
    return generate_multigraphs(nv, ne, 2 * ne, 3);
}

std::vector<WeightedGraph> three_edge_connected_graphs_up_to_genus(int g) {
    std::vector<WeightedGraph> out;
    std::set<std::string> seen;
    for (int genus = 0; genus <= g; ++genus) {
        int max_nv = std::max(1, 2 * genus - 2);
        for (int nv = 1; nv <= max_nv; ++nv) {
            int ne = nv + genus - 1;
            if (ne < 0) continue;
            for (WeightedGraph& cand : generate_multigraphs_min_degree3(nv, ne)) {
                if (!cand.is_3_edge_connected()) continue;
                if (seen.insert(cand.canonical_form().token).second) out.push_back(std::move(cand));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// curve complex

namespace {

WeightedGraph canonical_representative(const WeightedGraph& g) {
    const CanonicalForm& cf = g.canonical_form();
    return WeightedGraph(cf.weights, cf.edges);
}

} // namespace

CellComplex enumerate_tropical_cells(int g) {
    if (g < 2 || g > 4) throw CapacityError("curve complexes are built for 2 <= g <= 4");
    CellComplex x;
    std::map<std::string, int> by_token;

    auto add_cell = [&](const WeightedGraph& graph) {
        WeightedGraph rep = canonical_representative(graph);
        const std::string& tok = rep.canonical_form().token;
        auto it = by_token.find(tok);
        if (it != by_token.end()) return it->second;
        Cell c;
        c.kind = CellKind::Curve;
        c.id = static_cast<int>(x.cells.size());
        c.dim = rep.num_edges();
        c.stabilizer = rep.automorphism_edge_action();
        c.token = tok;
        c.graph = std::move(rep);
        by_token[tok] = c.id;
        x.cells.push_back(std::move(c));
        return x.cells.back().id;
    };

    std::vector<WeightedGraph> maximal = generate_multigraphs_exact_degree(2 * g - 2, 3 * g - 3, 3);
    std::queue<int> todo;
    for (const WeightedGraph& m : maximal) todo.push(add_cell(m));

    std::set<std::pair<int, int>> cover_seen;
    std::set<int> processed;
    while (!todo.empty()) {
        int super_id = todo.front();
        todo.pop();
        if (!processed.insert(super_id).second) continue;
        WeightedGraph super_graph = x.cells[super_id].graph; // copy: cells vector may grow
        for (int e = 0; e < super_graph.num_edges(); ++e) {
            std::vector<int> contraction_map;
            WeightedGraph contracted = super_graph.contract_edge(e, &contraction_map);
            if (!contracted.is_stable()) continue; // contractions of stable graphs stay stable
            int sub_id = add_cell(contracted);
            if (processed.find(sub_id) == processed.end()) todo.push(sub_id);
            if (cover_seen.count({sub_id, super_id})) continue;
            cover_seen.insert({sub_id, super_id});
            // face map: sub's canonical edge p corresponds to super's edge
            // orig(f) where contracted's edge f has canonical position p
            const CanonicalForm& cf = contracted.canonical_form();
            RatMatrix map(super_graph.num_edges(), contracted.num_edges());
            for (int f = 0; f < contracted.num_edges(); ++f) {
                int orig = -1;
                for (int s = 0; s < super_graph.num_edges(); ++s)
                    if (contraction_map[s] == f) { orig = s; break; }
                map(orig, cf.edge_map[f]) = 1;
            }
            x.covers.push_back({sub_id, super_id, std::move(map)});
        }
    }
    return x;
}

StructureReport verify_purity_and_codim1(const CellComplex& x, int g) {
    StructureReport rep;
    int top = 3 * g - 3;

    // (a) maximal cells are exactly the 3-regular weight-zero cells of top dim
    for (int id : x.maximal_cells()) {
        const Cell& c = x.cells[id];
        bool cubic = c.graph.total_weight() == 0;
        for (int v = 0; v < c.graph.num_vertices() && cubic; ++v) cubic = c.graph.valence(v) == 3;
        if (!cubic) rep.fail("maximal cell " + c.token + " is not 3-regular with zero weights");
        if (c.dim != top) rep.fail("maximal cell " + c.token + " has dimension " + std::to_string(c.dim));
    }
    for (const Cell& c : x.cells) {
        bool cubic = c.graph.total_weight() == 0;
        for (int v = 0; v < c.graph.num_vertices() && cubic; ++v) cubic = c.graph.valence(v) == 3;
        if (cubic && !x.covering_supers(c.id).empty())
            rep.fail("3-regular cell " + c.token + " is not maximal");
    }

    // (b) codimension-one classification
    for (int id : x.cells_of_dim(top - 1)) {
        const Cell& c = x.cells[id];
        const WeightedGraph& gr = c.graph;
        bool type_a = gr.total_weight() == 0;
        if (type_a) {
            int val4 = 0, val3 = 0;
            for (int v = 0; v < gr.num_vertices(); ++v) {
                if (gr.valence(v) == 4) ++val4;
                else if (gr.valence(v) == 3) ++val3;
            }
            if (!(val4 == 1 && val4 + val3 == gr.num_vertices()))
                rep.fail("codim-1 weight-zero cell " + c.token + " is not of type (a)");
        } else {
            int marked = 0, cubic0 = 0;
            for (int v = 0; v < gr.num_vertices(); ++v) {
                if (gr.weight(v) == 1 && gr.valence(v) == 1) ++marked;
                else if (gr.weight(v) == 0 && gr.valence(v) == 3) ++cubic0;
            }
            if (!(marked == 1 && marked + cubic0 == gr.num_vertices()))
                rep.fail("codim-1 weighted cell " + c.token + " is not of type (b)");
            type_a = false;
        }
        // (c) covering maximal-cell counts
        std::vector<int> sup = x.covering_supers(id);
        int nmax = 0;
        for (int s : sup)
            if (x.cells[s].dim == top) ++nmax;
        if (type_a ? (nmax < 1 || nmax > 3) : (nmax != 1))
            rep.fail("codim-1 cell " + c.token + " covered by " + std::to_string(nmax) + " maximal cells");
    }

    // (d) connected through codimension one
    std::vector<int> maximal = x.maximal_cells();
    std::map<int, int> index;
    for (size_t i = 0; i < maximal.size(); ++i) index[maximal[i]] = static_cast<int>(i);
    std::vector<std::set<int>> adj(maximal.size());
    for (int id : x.cells_of_dim(top - 1)) {
        std::vector<int> sup = x.covering_supers(id);
        for (int a : sup)
            for (int b : sup)
                if (a != b && index.count(a) && index.count(b)) adj[index[a]].insert(index[b]);
    }
    if (!maximal.empty()) {
        std::vector<bool> seen(maximal.size(), false);
        std::queue<int> q;
        q.push(0);
        seen[0] = true;
        size_t cnt = 1;
        while (!q.empty()) {
            int cur = q.front();
            q.pop();
            for (int nb : adj[cur])
                if (!seen[nb]) {
                    seen[nb] = true;
                    ++cnt;
                    q.push(nb);
                }
        }
        if (cnt != maximal.size())
            rep.fail("maximal cells are not connected through codimension one");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// matroid complexes

namespace {

struct MatroidCellSource {
    Matroid matroid;
    std::string label;
};

CellComplex build_matroid_complex(std::vector<MatroidCellSource> sources) {
    CellComplex x;
    // dedup by isomorphism, fingerprint-bucketed
    for (MatroidCellSource& src : sources) {
        bool dup = false;
        for (const Cell& c : x.cells)
            if (c.matroid.ground_size() == src.matroid.ground_size() &&
                matroid_isomorphic(c.matroid, src.matroid)) {
                dup = true;
                break;
            }
        if (dup) continue;
        Cell c;
        c.kind = CellKind::MatroidClass;
        c.id = static_cast<int>(x.cells.size());
        c.dim = src.matroid.ground_size();
        c.matroid = std::move(src.matroid);
        c.token = "m" + std::to_string(c.id) + ";" + c.matroid.iso_fingerprint();
        x.cells.push_back(std::move(c));
    }
    // full face relation by deletion + simplification, then transitive reduction
    int n = static_cast<int>(x.cells.size());
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    struct FaceData {
        GroundSubset deleted;
        std::vector<int> kept;   // survivors (original indices of super ground)
        std::vector<int> iso;    // sub element -> index into simplified ground
    };
    std::map<std::pair<int, int>, FaceData> face_data;
    for (int sub = 0; sub < n; ++sub)
        for (int super = 0; super < n; ++super) {
            if (sub == super) {
                leq[sub][super] = true;
                continue;
            }
            if (x.cells[sub].dim >= x.cells[super].dim) continue;
            const Matroid& big = x.cells[super].matroid;
            bool found = false;
            for (GroundSubset del = 0; del < (1u << big.ground_size()) && !found; ++del) {
                if (popcount(del) > big.ground_size()) continue;
                Matroid reduced = big.deleted(del);
                Matroid::Simplification simp = reduced.simplify();
                if (simp.matroid.ground_size() != x.cells[sub].dim) continue;
                auto iso = matroid_isomorphic(x.cells[sub].matroid, simp.matroid);
                if (!iso) continue;
                // survivors of deletion, then survivors of simplification
                std::vector<int> after_delete;
                for (int e = 0; e < big.ground_size(); ++e)
                    if (!(del & (1u << e))) after_delete.push_back(e);
                std::vector<int> kept;
                for (int idx : simp.kept) kept.push_back(after_delete[idx]);
                face_data[{sub, super}] = FaceData{del, kept, *iso};
                found = true;
            }
            leq[sub][super] = found;
        }
    // covers: leq minus longer routes
    for (int sub = 0; sub < n; ++sub)
        for (int super = 0; super < n; ++super) {
            if (sub == super || !leq[sub][super]) continue;
            bool direct = true;
            for (int mid = 0; mid < n && direct; ++mid)
                if (mid != sub && mid != super && leq[sub][mid] && leq[mid][super]) direct = false;
            if (!direct) continue;
            const FaceData& fd = face_data[{sub, super}];
            RatMatrix map(x.cells[super].dim, x.cells[sub].dim);
            for (int e = 0; e < x.cells[sub].dim; ++e) map(fd.kept[fd.iso[e]], e) = 1;
            x.covers.push_back({sub, super, std::move(map)});
        }
    return x;
}

} // namespace

CellComplex enumerate_cographic_cells(int g) {
    if (g > 4) throw CapacityError("cographic complexes are built for g <= 4");
    std::vector<MatroidCellSource> sources;
    for (const WeightedGraph& gr : three_edge_connected_graphs_up_to_genus(g)) {
        Matroid m = cographic_matroid(gr);
        sources.push_back({std::move(m), gr.canonical_form().token});
    }
    return build_matroid_complex(std::move(sources));
}

CellComplex enumerate_graphic_cells(int g) {
    if (g > 4) throw CapacityError("graphic complexes are built for g <= 4");
    std::vector<MatroidCellSource> sources;
    for (int nv = 1; nv <= g + 1; ++nv) {
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < nv; ++i)
            for (int j = i + 1; j < nv; ++j) slots.push_back({i, j});
        for (uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (size_t s = 0; s < slots.size(); ++s)
                if (mask & (1u << s)) edges.push_back(slots[s]);
            if (!spansConnected(nv, edges)) continue;
            WeightedGraph gr(std::vector<int>(nv, 0), edges);
            sources.push_back({graphic_matroid(gr), gr.canonical_form().token});
        }
    }
    return build_matroid_complex(std::move(sources));
}

CellComplex enumerate_gr_cogr_cells(int g) {
    CellComplex cogr = enumerate_cographic_cells(g);
    CellComplex gr = enumerate_graphic_cells(g);
    std::vector<MatroidCellSource> sources;
    for (const Cell& c : cogr.cells) {
        bool also_graphic = false;
        for (const Cell& d : gr.cells)
            if (c.matroid.ground_size() == d.matroid.ground_size() &&
                matroid_isomorphic(c.matroid, d.matroid)) {
                also_graphic = true;
                break;
            }
        if (also_graphic) sources.push_back({c.matroid, c.token});
    }
    return build_matroid_complex(std::move(sources));
}

std::vector<Matroid> deletion_closure(const Matroid& m) {
    std::vector<Matroid> out;
    std::queue<Matroid> todo;
    todo.push(m.simplify().matroid);
    auto known = [&](const Matroid& cand) {
        for (const Matroid& k : out)
            if (k.ground_size() == cand.ground_size() && matroid_isomorphic(k, cand)) return true;
        return false;
    };
    while (!todo.empty()) {
        Matroid cur = todo.front();
        todo.pop();
        if (known(cur)) continue;
        out.push_back(cur);
        for (int e = 0; e < cur.ground_size(); ++e) {
            Matroid next = cur.deleted(1u << e).simplify().matroid;
            if (!known(next)) todo.push(next);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// stacky-fan axioms

namespace {

RatMatrix permutation_matrix(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    RatMatrix p(n, n);
    for (int i = 0; i < n; ++i) p(perm[i], i) = 1;
    return p;
}

const std::vector<std::vector<int>>& cell_stabilizer(const CellComplex& x, int id,
                                                     std::map<int, std::vector<std::vector<int>>>& cache) {
    auto it = cache.find(id);
    if (it != cache.end()) return it->second;
    const Cell& c = x.cells[id];
    std::vector<std::vector<int>> stab =
        c.kind == CellKind::Curve ? c.stabilizer : matroid_automorphisms(c.matroid);
    if (stab.empty()) {
        std::vector<int> idn(c.dim);
        std::iota(idn.begin(), idn.end(), 0);
        stab.push_back(idn);
    }
    return cache.emplace(id, std::move(stab)).first->second;
}

} // namespace

StructureReport validate_stacky_axioms(const CellComplex& x) {
    StructureReport rep;

    std::set<std::string> tokens;
    for (const Cell& c : x.cells)
        if (!tokens.insert(c.token).second) rep.fail("duplicate cell token " + c.token);

    for (size_t i = 0; i < x.covers.size(); ++i) {
        const CoverRelation& cov = x.covers[i];
        const RatMatrix& m = cov.map;
        if (m.rows() != x.cells[cov.super].dim || m.cols() != x.cells[cov.sub].dim) {
            rep.fail("face map " + std::to_string(i) + " has wrong shape");
            continue;
        }
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c)
                if (denominator(m(r, c)) != 1)
                    rep.fail("face map " + std::to_string(i) + " is not integral at (" +
                             std::to_string(r) + "," + std::to_string(c) + ")");
        // coordinate inclusion after projection: each column selects one
        // coordinate, each coordinate is selected at most once
        std::vector<int> hits(m.rows(), 0);
        for (int c = 0; c < m.cols(); ++c) {
            int ones = 0;
            for (int r = 0; r < m.rows(); ++r) {
                if (m(r, c) == 0) continue;
                if (m(r, c) != 1) {
                    rep.fail("face map " + std::to_string(i) + " has a non-indicator column");
                    continue;
                }
                ++ones;
                ++hits[r];
            }
            if (ones != 1) rep.fail("face map " + std::to_string(i) + " column " + std::to_string(c) +
                                    " is not a coordinate indicator");
        }
        for (int r = 0; r < m.rows(); ++r)
            if (hits[r] > 1) rep.fail("face map " + std::to_string(i) + " collapses two coordinates");
        if (x.cells[cov.sub].dim >= x.cells[cov.super].dim)
            rep.fail("cover " + std::to_string(i) + " does not increase dimension");
    }
    if (!rep.ok) return rep;

    // composition coherence mod stabilizers on all 2-chains
    std::map<int, std::vector<std::vector<int>>> stab_cache;
    std::map<std::pair<int, int>, std::vector<RatMatrix>> routes;
    for (const CoverRelation& c1 : x.covers)
        for (const CoverRelation& c2 : x.covers)
            if (c1.super == c2.sub)
                routes[{c1.sub, c2.super}].push_back(c2.map * c1.map);
    for (auto& [pair, maps] : routes) {
        auto [sub, super] = pair;
        const auto& stab_top = cell_stabilizer(x, super, stab_cache);
        const auto& stab_bot = cell_stabilizer(x, sub, stab_cache);
        for (size_t i = 1; i < maps.size(); ++i) {
            bool match = false;
            for (const auto& sigma : stab_top) {
                RatMatrix left = permutation_matrix(sigma) * maps[0];
                for (const auto& tau : stab_bot) {
                    if (left * permutation_matrix(tau) == maps[i]) { match = true; break; }
                }
                if (match) break;
            }
            if (!match) {
                rep.fail("face-map composites from cell " + std::to_string(sub) + " to cell " +
                         std::to_string(super) + " disagree beyond stabilizers");
                break;
            }
        }
    }
    return rep;
}

} // namespace tropitor
