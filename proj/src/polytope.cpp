#include "tropitor/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace tropitor {

namespace {

RatVec matvec(const RatMatrix& m, const RatVec& v) {
    RatVec out(m.rows(), Rat(0));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0 && v[c] != 0) out[r] += m(r, c) * v[c];
    return out;
}

} // namespace

bool RationalPolytope::same_vertex_set(const RationalPolytope& other) const {
    return ambient == other.ambient && vertices == other.vertices;
}

bool RationalPolytope::contains(const RatVec& x) const {
    for (const Halfspace& h : halfspaces)
        if (dot(h.normal, x) > h.rhs) return false;
    // inside the span: x must be a combination of the span basis
    if (dim() < ambient) {
        RatMatrix s(ambient, dim());
        for (int c = 0; c < dim(); ++c)
            for (int r = 0; r < ambient; ++r) s(r, c) = span_basis[c][r];
        if (!solve(s, x)) return false;
        // solve() gives one solution; consistency was checked inside
        RatMatrix aug(ambient, dim() + 1);
        for (int r = 0; r < ambient; ++r) {
            for (int c = 0; c < dim(); ++c) aug(r, c) = s(r, c);
            aug(r, dim()) = x[r];
        }
        if (rank(aug) != rank(s)) return false;
    }
    return true;
}

void RationalPolytope::verify() const {
    for (const RatVec& v : vertices)
        for (const Halfspace& h : halfspaces)
            if (dot(h.normal, v) > h.rhs) throw StructuralError("vertex violates a halfspace");
    int d = dim();
    for (size_t i = 0; i < halfspaces.size(); ++i) {
        int tight = 0;
        for (const RatVec& v : vertices)
            if (dot(halfspaces[i].normal, v) == halfspaces[i].rhs) ++tight;
        if (tight < d) {
            std::ostringstream msg;
            msg << "halfspace " << i << " tight at " << tight << " vertices, expected >= " << d;
            throw StructuralError(msg.str());
        }
    }
}

bool RationalPolytope::centrally_symmetric() const {
    std::set<RatVec> set(vertices.begin(), vertices.end());
    for (const RatVec& v : vertices) {
        RatVec neg(v.size());
        for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        if (!set.count(neg)) return false;
    }
    return true;
}

RationalPolytope polytope_from_halfspaces(int ambient,
                                          const std::vector<RationalPolytope::Halfspace>& hs,
                                          const RatMatrix& span) {
    int d = span.cols();
    if (static_cast<int>(hs.size()) > 40) throw CapacityError("vertex enumeration capped at 40 halfspaces");

    // restrict: normal^t (span y) <= rhs
    std::vector<RatVec> rnormals;
    RatVec rrhs;
    for (const auto& h : hs) {
        RatVec n(d, Rat(0));
        for (int c = 0; c < d; ++c)
            for (int r = 0; r < ambient; ++r) n[c] += h.normal[r] * span(r, c);
        rnormals.push_back(n);
        rrhs.push_back(h.rhs);
    }

    int m = static_cast<int>(hs.size());
    std::set<RatVec> verts_reduced;
    std::vector<int> sel(d);
    // all d-subsets of halfspaces, solve for the tight point, keep feasible ones
    auto rec = [&](auto&& self, int start, int k) -> void {
        if (k == d) {
            RatMatrix a(d, d);
            RatVec b(d);
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < d; ++j) a(i, j) = rnormals[sel[i]][j];
                b[i] = rrhs[sel[i]];
            }
            if (rank(a) != d) return;
            auto x = solve(a, b);
            if (!x) return;
            for (int i = 0; i < m; ++i)
                if (dot(rnormals[i], *x) > rrhs[i]) return;
            verts_reduced.insert(*x);
            return;
        }
        for (int i = start; i <= m - (d - k); ++i) {
            sel[k] = i;
            self(self, i + 1, k + 1);
        }
    };
    if (d > 0) rec(rec, 0, 0);
    else verts_reduced.insert(RatVec{});

    RationalPolytope out;
    out.ambient = ambient;
    for (int c = 0; c < d; ++c) out.span_basis.push_back(span.col(c));
    for (const RatVec& y : verts_reduced) out.vertices.push_back(matvec(span, y));
    std::sort(out.vertices.begin(), out.vertices.end());

    // keep only facet-defining halfspaces: tight at >= d vertices; dedup by
    // normalized (normal, rhs) in reduced coordinates
    std::set<std::vector<Rat>> seen;
    std::vector<RatVec> rverts(verts_reduced.begin(), verts_reduced.end());
    for (int i = 0; i < m; ++i) {
        int tight = 0;
        for (const RatVec& y : rverts)
            if (dot(rnormals[i], y) == rrhs[i]) ++tight;
        if (tight < std::max(d, 1)) continue;
        std::vector<Rat> key = rnormals[i];
        key.push_back(rrhs[i]);
        // scale so the first nonzero entry is +-1
        Rat lead = 0;
        for (const Rat& q : key)
            if (q != 0) { lead = abs(q); break; }
        if (lead != 0)
            for (Rat& q : key) q /= lead;
        if (!seen.insert(key).second) continue;
        out.halfspaces.push_back(hs[i]);
    }
    return out;
}

RationalPolytope zonotope(const TUMatrix& tu) {
    const IntMatrix& a = tu.matrix();
    int g = a.rows();
    std::vector<RationalPolytope::Halfspace> hs;
    for (int c = 0; c < a.cols(); ++c) {
        RatVec n(g, Rat(0));
        bool zero = true;
        for (int r = 0; r < g; ++r) {
            n[r] = Rat(a(r, c));
            if (a(r, c) != 0) zero = false;
        }
        if (zero) continue; // zero columns are ignored
        hs.push_back({n, Rat(1, 2)});
        RatVec neg(g);
        for (int r = 0; r < g; ++r) neg[r] = -n[r];
        hs.push_back({neg, Rat(1, 2)});
    }
    // natural linear span: the column space of a
    RatMatrix ar = to_rat_matrix(a);
    std::vector<int> pivots = pivot_columns(ar);
    RatMatrix span(g, static_cast<int>(pivots.size()));
    for (size_t c = 0; c < pivots.size(); ++c)
        for (int r = 0; r < g; ++r) span(r, static_cast<int>(c)) = Rat(a(r, pivots[c]));
    return polytope_from_halfspaces(g, hs, span);
}

namespace {

RationalPolytope::Halfspace lattice_constraint(const QuadForm& q, const IntVec& v) {
    // Q(x) <= Q(v - x)  <=>  2 v^t Q x <= Q(v)
    int g = q.dim();
    RatVec n(g, Rat(0));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) n[i] += 2 * q.matrix()(i, j) * Rat(v[j]);
    return {n, q(v)};
}

} // namespace

RationalPolytope voronoi_polytope(const QuadForm& q) {
    int g = q.dim();
    if (g > 3) throw CapacityError("voronoi_polytope capped at dimension 3");
    if (!q.positive_definite())
        throw StructuralError("voronoi_polytope needs a positive definite form (or a reducer)");
    if (g == 0) {
        RationalPolytope out;
        out.ambient = 0;
        out.vertices.push_back(RatVec{});
        return out;
    }

    std::set<IntVec> used;
    std::vector<RationalPolytope::Halfspace> hs;
    auto add = [&](const IntVec& v) {
        if (used.insert(v).second) hs.push_back(lattice_constraint(q, v));
    };
    // initial candidates: the small box (always contains +-e_i, so bounded)
    {
        IntVec v(g, Int(0));
        auto gen = [&](auto&& self, int i) -> void {
            if (i == g) {
                if (std::any_of(v.begin(), v.end(), [](const Int& x) { return x != 0; })) add(v);
                return;
            }
            for (Int x = -2; x <= 2; ++x) {
                v[i] = x;
                self(self, i + 1);
            }
        };
        gen(gen, 0);
    }

    RatMatrix span = RatMatrix::identity(g);
    while (true) {
        RationalPolytope p = polytope_from_halfspaces(g, hs, span);
        // certify every vertex: no lattice vector may be strictly closer
        bool clean = true;
        for (const RatVec& x : p.vertices) {
            Rat qx = q(x);
            // enumerate v with Q(v - x) <= Q(x): box around x
            auto inv = inverse(q.matrix());
            std::vector<Int> lo(g), hi(g);
            for (int i = 0; i < g; ++i) {
                Int w = ceil_sqrt(qx * (*inv)(i, i));
                // center x_i rounded outward
                Int cf = numerator(x[i]) / denominator(x[i]);
                lo[i] = cf - w - 1;
                hi[i] = cf + w + 1;
            }
            IntVec v(g);
            bool violated = false;
            auto scan = [&](auto&& self, int i) -> void {
                if (violated) return;
                if (i == g) {
                    if (std::all_of(v.begin(), v.end(), [](const Int& z) { return z == 0; })) return;
                    RatVec diff(g);
                    for (int t = 0; t < g; ++t) diff[t] = Rat(v[t]) - x[t];
                    if (q(diff) < qx) {
                        add(v);
                        violated = true;
                    }
                    return;
                }
                for (Int z = lo[i]; z <= hi[i] && !violated; ++z) {
                    v[i] = z;
                    self(self, i + 1);
                }
            };
            scan(scan, 0);
            if (violated) clean = false;
        }
        if (clean) {
            p.verify();
            return p;
        }
    }
}

RationalPolytope voronoi_polytope(const QuadForm& q, const IntMatrix& reducer) {
    int g = q.dim();
    if (!is_unimodular(reducer)) throw StructuralError("reducer must be unimodular");
    RatMatrix conj = to_rat_matrix(reducer) * q.matrix() * to_rat_matrix(reducer.transpose());
    int r = q.rank();
    std::vector<int> head(r);
    std::iota(head.begin(), head.end(), 0);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            if ((i >= r || j >= r) && conj(i, j) != 0)
                throw StructuralError("reducer does not split off the null space");
    QuadForm definite(conj.submatrix(head, head));
    RationalPolytope inner = voronoi_polytope(definite);

    // x in Vor(q)  <=>  reducer^{-t} x in Vor(diag(definite,0)); carry the
    // canonical slice back through reducer^t
    RationalPolytope out;
    out.ambient = g;
    RatMatrix ht = to_rat_matrix(reducer.transpose());
    for (const RatVec& y : inner.vertices) {
        RatVec lifted(g, Rat(0));
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < r; ++j) lifted[i] += ht(i, j) * y[j];
        out.vertices.push_back(lifted);
    }
    std::sort(out.vertices.begin(), out.vertices.end());
    for (const auto& h : inner.halfspaces) {
        // normal n on y = first r coordinates of reducer^{-t} x
        RatMatrix hinv_t = *inverse(ht);
        RatVec n(g, Rat(0));
        for (int i = 0; i < g; ++i)
            for (int j = 0; j < r; ++j) n[i] += h.normal[j] * hinv_t(j, i);
        out.halfspaces.push_back({n, h.rhs});
    }
    for (int c = 0; c < r; ++c) {
        RatVec b(g, Rat(0));
        for (int i = 0; i < g; ++i) b[i] = ht(i, c);
        out.span_basis.push_back(b);
    }
    return out;
}

} // namespace tropitor
