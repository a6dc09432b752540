#include "tropitor/homology.hpp"

#include <queue>

namespace tropitor {

Orientation default_orientation(const WeightedGraph& g) {
    Orientation o;
    o.st = g.edges();
    return o;
}

IntMatrix IntegerChainBasis::as_matrix() const {
    int rows = size();
    int cols = rows ? static_cast<int>(vectors[0].size()) : 0;
    IntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = vectors[r][c];
    return m;
}

static void check_orientation(const WeightedGraph& g, const Orientation& o) {
    if (static_cast<int>(o.st.size()) != g.num_edges())
        throw StructuralError("orientation does not match the edge count");
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [s, t] = o.st[e];
        auto [a, b] = g.edge(e);
        if (!((s == a && t == b) || (s == b && t == a)))
            throw StructuralError("orientation disagrees with endpoints of edge " + g.edge_name(e));
    }
}

BoundaryMaps boundary_matrices(const WeightedGraph& g, const Orientation& o) {
    check_orientation(g, o);
    BoundaryMaps maps{IntMatrix(g.num_vertices(), g.num_edges()),
                      IntMatrix(g.num_edges(), g.num_vertices())};
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [s, t] = o.st[e];
        if (s == t) continue; // loops vanish
        maps.boundary(t, e) += 1;
        maps.boundary(s, e) -= 1;
        maps.coboundary(e, t) += 1;
        maps.coboundary(e, s) -= 1;
    }
    return maps;
}

IntegerChainBasis h1_basis(const WeightedGraph& g, const Orientation& o) {
    check_orientation(g, o);
    int nv = g.num_vertices(), ne = g.num_edges();
    // BFS tree from vertex 0, neighbors scanned in edge-index order
    std::vector<int> parent_edge(nv, -1);
    std::vector<bool> seen(nv, false), in_tree(ne, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int e = 0; e < ne; ++e) {
            auto [a, b] = g.edge(e);
            int other = -1;
            if (a == u) other = b;
            else if (b == u) other = a;
            else continue;
            if (seen[other]) continue;
            seen[other] = true;
            in_tree[e] = true;
            parent_edge[other] = e;
            q.push(other);
        }
    }
    // signed tree path from vertex x up to the root, as edge coefficients
    auto path_to_root = [&](int x) {
        IntVec coeff(ne, Int(0));
        int cur = x;
        while (parent_edge[cur] >= 0) {
            int e = parent_edge[cur];
            auto [s, t] = o.st[e];
            // walking from child to parent
            int child = cur;
            int par = (g.edge(e).first == cur) ? g.edge(e).second : g.edge(e).first;
            coeff[e] += (t == child && s == par) ? -1 : 1;
            cur = par;
        }
        return coeff;
    };

    IntegerChainBasis basis;
    for (int e = 0; e < ne; ++e) {
        if (in_tree[e]) continue;
        auto [s, t] = o.st[e];
        IntVec z(ne, Int(0));
        z[e] = 1; // orientation follows the non-tree edge
        if (s != t) {
            IntVec from_t = path_to_root(t);
            IntVec from_s = path_to_root(s);
            // cycle: e from s to t, then tree path t -> root -> s
            for (int f = 0; f < ne; ++f) z[f] += from_t[f] - from_s[f];
        }
        basis.vectors.push_back(std::move(z));
    }
    return basis;
}

bool is_h1_lattice_basis(const WeightedGraph& g, const Orientation& o, const IntegerChainBasis& b) {
    if (b.size() != g.first_betti()) return false;
    BoundaryMaps maps = boundary_matrices(g, o);
    // each vector in ker(boundary), exactly
    for (const IntVec& z : b.vectors) {
        for (int v = 0; v < g.num_vertices(); ++v) {
            Int s = 0;
            for (int e = 0; e < g.num_edges(); ++e) s += maps.boundary(v, e) * z[e];
            if (s != 0) return false;
        }
    }
    // expressing each vector in the fundamental basis must give a unimodular
    // transform; fundamental-cycle coordinates are read off non-tree edges
    IntegerChainBasis fund = h1_basis(g, o);
    int gg = b.size();
    if (gg == 0) return true;
    // transform T with T(i,j) = coefficient of fund_j in b_i must be unimodular
    IntMatrix t(gg, gg);
    for (int i = 0; i < gg; ++i) {
        auto coords = cycle_coordinates(fund, b.vectors[i]);
        if (!coords) return false;
        for (int j = 0; j < gg; ++j) {
            if (denominator((*coords)[j]) != 1) return false;
            t(i, j) = numerator((*coords)[j]);
        }
    }
    return is_unimodular(t);
}

IntMatrix cographic_matrix(const WeightedGraph& g, const Orientation& o, const IntegerChainBasis& b) {
    if (!is_h1_lattice_basis(g, o, b))
        throw StructuralError("vectors are not a lattice basis of ker(boundary)");
    return b.as_matrix();
}

IntMatrix graphic_matrix(const WeightedGraph& g, const Orientation& o) {
    BoundaryMaps maps = boundary_matrices(g, o);
    IntMatrix a(g.num_vertices() - 1, g.num_edges());
    for (int v = 0; v + 1 < g.num_vertices(); ++v)
        for (int e = 0; e < g.num_edges(); ++e) a(v, e) = maps.boundary(v, e);
    return a;
}

IntegerChainBasis basis_from_signed_edge_lists(const WeightedGraph& g,
                                               const std::vector<std::vector<std::string>>& lists) {
    IntegerChainBasis b;
    for (const auto& list : lists) {
        IntVec z(g.num_edges(), Int(0));
        for (const std::string& item : list) {
            bool neg = !item.empty() && item[0] == '-';
            std::string name = neg ? item.substr(1) : item;
            int e = g.edge_index(name);
            z[e] += neg ? -1 : 1;
        }
        b.vectors.push_back(std::move(z));
    }
    return b;
}

std::optional<RatVec> cycle_coordinates(const IntegerChainBasis& b, const IntVec& z) {
    if (b.size() == 0) return std::nullopt;
    int ne = static_cast<int>(z.size());
    RatMatrix bt(ne, b.size());
    for (int i = 0; i < b.size(); ++i)
        for (int e = 0; e < ne; ++e) bt(e, i) = Rat(b.vectors[i][e]);
    RatVec rhs(ne);
    for (int e = 0; e < ne; ++e) rhs[e] = Rat(z[e]);
    auto x = solve(bt, rhs);
    if (!x) return std::nullopt;
    // solve() returns a least-structure solution; verify it reproduces z
    for (int e = 0; e < ne; ++e) {
        Rat s = 0;
        for (int i = 0; i < b.size(); ++i) s += bt(e, i) * (*x)[i];
        if (s != rhs[e]) return std::nullopt;
    }
    return x;
}

} // namespace tropitor
