#include "tropitor/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace tropitor {

namespace {

bool components_connected(int nv, const std::vector<std::pair<int, int>>& edges,
                          const std::vector<bool>& keep_vertex,
                          const std::vector<bool>& keep_edge) {
    int start = -1, kept = 0;
    for (int v = 0; v < nv; ++v)
        if (keep_vertex[v]) { ++kept; if (start < 0) start = v; }
    if (kept == 0) return false;
    std::vector<bool> seen(nv, false);
    std::queue<int> q;
    q.push(start);
    seen[start] = true;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (size_t e = 0; e < edges.size(); ++e) {
            if (!keep_edge[e]) continue;
            auto [a, b] = edges[e];
            int other = -1;
            if (a == u) other = b;
            else if (b == u) other = a;
            else continue;
            if (!keep_vertex[other] || seen[other]) continue;
            seen[other] = true;
            ++reached;
            q.push(other);
        }
    }
    return reached == kept;
}

} // namespace

WeightedGraph::WeightedGraph(std::vector<int> weights, std::vector<std::pair<int, int>> edges,
                             std::vector<std::string> edge_names)
    : weights_(std::move(weights)), edges_(std::move(edges)), edge_names_(std::move(edge_names)) {
    int nv = num_vertices(), ne = num_edges();
    if (nv == 0) throw StructuralError("graph needs at least one vertex");
    if (ne > 31) throw CapacityError("more than 31 edges exceeds the desk-scale cap");
    for (int w : weights_)
        if (w < 0) throw StructuralError("negative vertex weight");
    for (auto& [a, b] : edges_) {
        if (a < 0 || a >= nv || b < 0 || b >= nv) throw StructuralError("edge endpoint out of range");
        if (a > b) std::swap(a, b);
    }
    if (edge_names_.empty()) {
        for (int e = 0; e < ne; ++e) edge_names_.push_back("e" + std::to_string(e + 1));
    }
    if (static_cast<int>(edge_names_.size()) != ne) throw StructuralError("edge name count mismatch");
    if (!connected_check()) throw StructuralError("graph must be connected");
}

bool WeightedGraph::connected_check() const {
    std::vector<bool> kv(num_vertices(), true), ke(num_edges(), true);
    return components_connected(num_vertices(), edges_, kv, ke);
}

int WeightedGraph::edge_index(const std::string& name) const {
    for (int e = 0; e < num_edges(); ++e)
        if (edge_names_[e] == name) return e;
    throw InputError("unknown edge id '" + name + "'");
}

int WeightedGraph::valence(int v) const {
    int d = 0;
    for (auto& [a, b] : edges_) {
        if (a == v) ++d;
        if (b == v) ++d; // loop counted twice
    }
    return d;
}

int WeightedGraph::total_weight() const {
    return std::accumulate(weights_.begin(), weights_.end(), 0);
}

bool WeightedGraph::is_stable() const {
    for (int v = 0; v < num_vertices(); ++v)
        if (weights_[v] == 0 && valence(v) < 3) return false;
    return true;
}

// ---------------------------------------------------------------------------
// canonical form

const CanonicalForm& WeightedGraph::canonical_form() const {
    if (canon_) return *canon_;
    int nv = num_vertices();

    // initial vertex classes by (weight, valence, loop count), refined by
    // neighbor-class multisets until stable
    std::vector<std::vector<int>> key(nv);
    for (int v = 0; v < nv; ++v) {
        int loops = 0;
        for (int e = 0; e < num_edges(); ++e)
            if (is_loop(e) && edges_[e].first == v) ++loops;
        key[v] = {weights_[v], valence(v), loops};
    }
    std::vector<int> cls(nv, 0);
    auto reclass = [&]() {
        std::vector<std::pair<std::vector<int>, int>> order;
        for (int v = 0; v < nv; ++v) order.push_back({key[v], v});
        std::sort(order.begin(), order.end());
        std::vector<int> nc(nv);
        int c = 0;
        for (size_t i = 0; i < order.size(); ++i) {
            if (i > 0 && order[i].first != order[i - 1].first) ++c;
            nc[order[i].second] = c;
        }
        return nc;
    };
    cls = reclass();
    for (int round = 0; round < nv; ++round) {
        for (int v = 0; v < nv; ++v) {
            std::vector<int> nb;
            for (int e = 0; e < num_edges(); ++e) {
                auto [a, b] = edges_[e];
                if (a == v && b != v) nb.push_back(cls[b]);
                else if (b == v && a != v) nb.push_back(cls[a]);
            }
            std::sort(nb.begin(), nb.end());
            key[v] = {weights_[v], valence(v)};
            key[v].push_back(cls[v]);
            key[v].insert(key[v].end(), nb.begin(), nb.end());
        }
        std::vector<int> nc = reclass();
        if (nc == cls) break;
        cls = nc;
    }

    // vertices grouped by class, classes already in key order
    std::vector<std::vector<int>> groups;
    {
        int maxc = *std::max_element(cls.begin(), cls.end());
        groups.assign(maxc + 1, {});
        for (int v = 0; v < nv; ++v) groups[cls[v]].push_back(v);
    }

    // search all labelings consistent with the class order, keep the minimum
    // (weights, sorted edge list) encoding
    std::vector<int> order;               // new position -> old vertex
    std::vector<int> best_order;
    std::vector<std::pair<int, int>> best_edges;
    std::vector<int> pos(nv, -1);
    auto encode = [&]() {
        std::vector<std::pair<int, int>> enc(num_edges());
        for (int e = 0; e < num_edges(); ++e) {
            int a = pos[edges_[e].first], b = pos[edges_[e].second];
            enc[e] = {std::min(a, b), std::max(a, b)};
        }
        std::sort(enc.begin(), enc.end());
        return enc;
    };
    auto rec = [&](auto&& self, size_t gi) -> void {
        if (gi == groups.size()) {
            auto enc = encode();
            if (best_order.empty() || enc < best_edges) {
                best_edges = enc;
                best_order = order;
            }
            return;
        }
        std::vector<int> g = groups[gi];
        std::sort(g.begin(), g.end());
        // all orderings within a class
        do {
            for (int v : g) { pos[v] = static_cast<int>(order.size()); order.push_back(v); }
            self(self, gi + 1);
            for (int v : g) { pos[v] = -1; order.pop_back(); }
        } while (std::next_permutation(g.begin(), g.end()));
    };
    rec(rec, 0);

    CanonicalForm cf;
    cf.edges = best_edges;
    cf.weights.resize(nv);
    cf.vertex_map.resize(nv);
    for (int i = 0; i < nv; ++i) {
        cf.weights[i] = weights_[best_order[i]];
        cf.vertex_map[best_order[i]] = i;
    }
    // canonical edge positions; parallel-class ties broken by original index
    std::vector<std::pair<std::pair<int, int>, int>> tagged;
    for (int e = 0; e < num_edges(); ++e) {
        int a = cf.vertex_map[edges_[e].first], b = cf.vertex_map[edges_[e].second];
        tagged.push_back({{std::min(a, b), std::max(a, b)}, e});
    }
    std::sort(tagged.begin(), tagged.end());
    cf.edge_map.resize(num_edges());
    for (size_t i = 0; i < tagged.size(); ++i) cf.edge_map[tagged[i].second] = static_cast<int>(i);

    std::ostringstream tok;
    tok << "v" << nv << ";w";
    for (int i = 0; i < nv; ++i) tok << (i ? "," : "") << cf.weights[i];
    tok << ";e";
    for (size_t i = 0; i < cf.edges.size(); ++i)
        tok << (i ? "," : "") << cf.edges[i].first << "-" << cf.edges[i].second;
    cf.token = tok.str();
    canon_ = std::move(cf);
    return *canon_;
}

bool isomorphic_bruteforce(const WeightedGraph& g1, const WeightedGraph& g2) {
    int nv = g1.num_vertices();
    if (nv != g2.num_vertices() || g1.num_edges() != g2.num_edges()) return false;
    std::vector<std::map<std::pair<int, int>, int>> adj(2);
    for (int e = 0; e < g1.num_edges(); ++e) adj[0][g1.edge(e)]++;
    for (int e = 0; e < g2.num_edges(); ++e) adj[1][g2.edge(e)]++;
    std::vector<int> perm(nv);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int v = 0; v < nv && ok; ++v) ok = g1.weight(v) == g2.weight(perm[v]);
        if (!ok) continue;
        std::map<std::pair<int, int>, int> mapped;
        for (int e = 0; e < g1.num_edges(); ++e) {
            auto [a, b] = g1.edge(e);
            int x = perm[a], y = perm[b];
            mapped[{std::min(x, y), std::max(x, y)}]++;
        }
        if (mapped == adj[1]) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// ---------------------------------------------------------------------------
// contraction / deletion

WeightedGraph WeightedGraph::contract_edge(int e, std::vector<int>* edge_map_out) const {
    if (e < 0 || e >= num_edges()) throw InputError("unknown edge index " + std::to_string(e));
    std::vector<int> w = weights_;
    std::vector<std::pair<int, int>> es;
    std::vector<std::string> names;
    std::vector<int> emap(num_edges(), -1);
    auto [u, v] = edges_[e];
    if (u == v) {
        w[u] += 1; // loop contraction: weight bump
        for (int f = 0; f < num_edges(); ++f) {
            if (f == e) continue;
            emap[f] = static_cast<int>(es.size());
            es.push_back(edges_[f]);
            names.push_back(edge_names_[f]);
        }
        if (edge_map_out) *edge_map_out = emap;
        WeightedGraph out(w, es, names);
        return out;
    }
    // merge v into u, shift labels above v down
    w[u] += w[v];
    w.erase(w.begin() + v);
    auto relabel = [&](int x) {
        if (x == v) return u;
        return x > v ? x - 1 : x;
    };
    for (int f = 0; f < num_edges(); ++f) {
        if (f == e) continue;
        emap[f] = static_cast<int>(es.size());
        int a = relabel(edges_[f].first), b = relabel(edges_[f].second);
        es.push_back({std::min(a, b), std::max(a, b)});
        names.push_back(edge_names_[f]);
    }
    if (edge_map_out) *edge_map_out = emap;
    return WeightedGraph(w, es, names);
}

WeightedGraph WeightedGraph::contract_edges(EdgeSubset s, std::vector<int>* edge_map_out) const {
    WeightedGraph cur = *this;
    std::vector<int> total(num_edges());
    std::iota(total.begin(), total.end(), 0);
    for (int e = 0; e < num_edges(); ++e) {
        if (!(s & (1u << e))) continue;
        int ce = total[e];
        if (ce < 0) continue;
        std::vector<int> step;
        cur = cur.contract_edge(ce, &step);
        for (int f = 0; f < num_edges(); ++f)
            if (total[f] >= 0) total[f] = step[total[f]];
    }
    if (edge_map_out) *edge_map_out = total;
    return cur;
}

WeightedGraph WeightedGraph::delete_edges(EdgeSubset s, std::vector<int>* edge_map_out) const {
    std::vector<std::pair<int, int>> es;
    std::vector<std::string> names;
    std::vector<int> emap(num_edges(), -1);
    for (int f = 0; f < num_edges(); ++f) {
        if (s & (1u << f)) continue;
        emap[f] = static_cast<int>(es.size());
        es.push_back(edges_[f]);
        names.push_back(edge_names_[f]);
    }
    if (edge_map_out) *edge_map_out = emap;
    return WeightedGraph(weights_, es, names); // throws if deletion disconnects
}

std::vector<WeightedGraph> WeightedGraph::one_edge_specializations() const {
    std::vector<WeightedGraph> out;
    std::set<std::string> seen;
    for (int e = 0; e < num_edges(); ++e) {
        WeightedGraph c = contract_edge(e);
        if (!c.is_stable()) continue;
        if (seen.insert(c.canonical_form().token).second) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const WeightedGraph& a, const WeightedGraph& b) {
        return a.canonical_form().token < b.canonical_form().token;
    });
    return out;
}

// ---------------------------------------------------------------------------
// automorphisms

std::vector<std::vector<int>> WeightedGraph::automorphism_edge_action() const {
    int nv = num_vertices(), ne = num_edges();
    std::vector<std::vector<int>> adj(nv, std::vector<int>(nv, 0));
    for (auto& [a, b] : edges_) adj[a][b]++, adj[b][a] += (a == b ? 0 : 1);
    // edges grouped by endpoint pair
    std::map<std::pair<int, int>, std::vector<int>> classes;
    for (int e = 0; e < ne; ++e) classes[edges_[e]].push_back(e);

    std::set<std::vector<int>> result;
    std::vector<int> psi(nv, -1);
    std::vector<bool> used(nv, false);

    auto emit_for_psi = [&]() {
        // compose every product of bijections between matched edge classes
        std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
        for (auto& [uv, src] : classes) {
            int a = psi[uv.first], b = psi[uv.second];
            auto it = classes.find({std::min(a, b), std::max(a, b)});
            if (it == classes.end() || it->second.size() != src.size()) return;
            pairs.push_back({src, it->second});
        }
        std::vector<int> phi(ne, -1);
        auto rec = [&](auto&& self, size_t k) -> void {
            if (k == pairs.size()) { result.insert(phi); return; }
            std::vector<int> target = pairs[k].second;
            std::sort(target.begin(), target.end());
            do {
                for (size_t i = 0; i < target.size(); ++i) phi[pairs[k].first[i]] = target[i];
                self(self, k + 1);
            } while (std::next_permutation(target.begin(), target.end()));
        };
        rec(rec, 0);
    };

    auto rec = [&](auto&& self, int v) -> void {
        if (v == nv) { emit_for_psi(); return; }
        for (int img = 0; img < nv; ++img) {
            if (used[img] || weights_[img] != weights_[v]) continue;
            bool ok = adj[img][img] == adj[v][v];
            for (int u = 0; u < v && ok; ++u) ok = adj[psi[u]][img] == adj[u][v];
            if (!ok) continue;
            psi[v] = img;
            used[img] = true;
            self(self, v + 1);
            used[img] = false;
            psi[v] = -1;
        }
    };
    rec(rec, 0);
    return std::vector<std::vector<int>>(result.begin(), result.end());
}

// ---------------------------------------------------------------------------
// connectivity, cycles, bonds

std::vector<EdgeSubset> WeightedGraph::cycles() const {
    int ne = num_edges();
    if (ne > 20) throw CapacityError("cycle enumeration capped at 20 edges");
    std::vector<EdgeSubset> out;
    for (EdgeSubset s = 1; s < (1u << ne); ++s) {
        // every touched vertex must have degree exactly 2 within s
        std::vector<int> deg(num_vertices(), 0);
        for (int e = 0; e < ne; ++e)
            if (s & (1u << e)) {
                deg[edges_[e].first]++;
                deg[edges_[e].second]++;
            }
        bool ok = true;
        for (int v = 0; v < num_vertices() && ok; ++v)
            if (deg[v] != 0 && deg[v] != 2) ok = false;
        if (!ok) continue;
        std::vector<bool> kv(num_vertices()), ke(num_edges());
        for (int v = 0; v < num_vertices(); ++v) kv[v] = deg[v] > 0;
        for (int e = 0; e < ne; ++e) ke[e] = (s >> e) & 1u;
        if (components_connected(num_vertices(), edges_, kv, ke)) out.push_back(s);
    }
    return out;
}

std::vector<EdgeSubset> WeightedGraph::bonds() const {
    int nv = num_vertices(), ne = num_edges();
    if (nv > 20) throw CapacityError("bond enumeration capped at 20 vertices");
    std::set<EdgeSubset> out;
    for (uint32_t side = 1; side < (1u << (nv - 1)); ++side) {
        // vertex 0 always on the complement side; both sides connected
        std::vector<bool> v1(nv), v2(nv);
        for (int v = 0; v < nv; ++v) {
            v1[v] = v > 0 && ((side >> (v - 1)) & 1u);
            v2[v] = !v1[v];
        }
        std::vector<bool> inside1(ne), inside2(ne);
        EdgeSubset cut = 0;
        for (int e = 0; e < ne; ++e) {
            bool a = v1[edges_[e].first], b = v1[edges_[e].second];
            if (a != b) cut |= (1u << e);
            inside1[e] = a && b;
            inside2[e] = !a && !b;
        }
        if (cut == 0) continue;
        if (components_connected(nv, edges_, v1, inside1) &&
            components_connected(nv, edges_, v2, inside2))
            out.insert(cut);
    }
    return std::vector<EdgeSubset>(out.begin(), out.end());
}

bool WeightedGraph::is_separating_edge(int e) const {
    if (is_loop(e)) return false;
    std::vector<bool> kv(num_vertices(), true), ke(num_edges(), true);
    ke[e] = false;
    return !components_connected(num_vertices(), edges_, kv, ke);
}

std::vector<EdgeSubset> WeightedGraph::c1_sets() const {
    std::vector<EdgeSubset> cyc = cycles();
    std::map<std::vector<int>, EdgeSubset> classes;
    for (int e = 0; e < num_edges(); ++e) {
        std::vector<int> fp;
        for (size_t i = 0; i < cyc.size(); ++i)
            if (cyc[i] & (1u << e)) fp.push_back(static_cast<int>(i));
        if (fp.empty()) continue; // separating edge
        classes[fp] |= (1u << e);
    }
    std::vector<EdgeSubset> out;
    for (auto& [fp, mask] : classes) out.push_back(mask);
    std::sort(out.begin(), out.end());
    return out;
}

bool WeightedGraph::is_3_edge_connected() const {
    for (int e = 0; e < num_edges(); ++e)
        if (is_separating_edge(e)) return false;
    for (EdgeSubset s : c1_sets())
        if (popcount(s) != 1) return false;
    return true;
}

ConnectivityStats WeightedGraph::connectivity_stats() const {
    ConnectivityStats st;
    int nv = num_vertices();

    // girth: shortest cycle
    auto cyc = cycles();
    if (cyc.empty()) st.girth = ExtInt::infinity();
    else {
        int best = num_edges() + 1;
        for (EdgeSubset s : cyc) best = std::min(best, popcount(s));
        st.girth = ExtInt::finite(best);
    }

    if (nv == 1) {
        st.vertex_connectivity = ExtInt::infinity();
        st.edge_connectivity = ExtInt::infinity();
        return st;
    }

    // edge connectivity: minimum cut over vertex bipartitions
    int lambda = num_edges() + 1;
    for (uint32_t side = 1; side < (1u << (nv - 1)); ++side) {
        int cut = 0;
        auto in1 = [&](int v) { return v > 0 && ((side >> (v - 1)) & 1u); };
        for (auto& [a, b] : edges_)
            if (in1(a) != in1(b)) ++cut;
        lambda = std::min(lambda, cut);
    }
    st.edge_connectivity = ExtInt::finite(lambda);

    // vertex connectivity: smallest separating vertex set, else nv - 1
    for (int k = 1; k <= nv - 2; ++k) {
        std::vector<int> sel(k);
        std::iota(sel.begin(), sel.end(), 0);
        bool found = false;
        while (true) {
            std::vector<bool> kv(nv, true), ke(num_edges(), true);
            for (int i : sel) kv[i] = false;
            for (int e = 0; e < num_edges(); ++e)
                ke[e] = kv[edges_[e].first] && kv[edges_[e].second];
            if (!components_connected(nv, edges_, kv, ke)) { found = true; break; }
            int i = k - 1;
            while (i >= 0 && sel[i] == nv - k + i) --i;
            if (i < 0) break;
            ++sel[i];
            for (int j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
        }
        if (found) {
            st.vertex_connectivity = ExtInt::finite(k);
            return st;
        }
    }
    st.vertex_connectivity = ExtInt::finite(nv - 1);
    return st;
}

// ---------------------------------------------------------------------------
// simplification / 3-edge-connectivization

WeightedGraph WeightedGraph::simplification() const {
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> es;
    std::vector<std::string> names;
    for (int e = 0; e < num_edges(); ++e) {
        if (is_loop(e)) continue;
        if (seen.insert(edges_[e]).second) {
            es.push_back(edges_[e]);
            names.push_back(edge_names_[e]);
        }
    }
    return WeightedGraph(weights_, es, names);
}

WeightedGraph WeightedGraph::three_edge_connectivization(std::vector<int>* old_to_new,
                                                         std::vector<int>* class_rep_out) const {
    std::vector<int> rep(num_edges(), -1);
    EdgeSubset contract = 0;
    for (int e = 0; e < num_edges(); ++e)
        if (is_separating_edge(e)) contract |= (1u << e);
    for (EdgeSubset cls : c1_sets()) {
        int keep = -1;
        for (int e = 0; e < num_edges(); ++e)
            if (cls & (1u << e)) { keep = e; break; } // lowest index survives
        for (int e = 0; e < num_edges(); ++e)
            if (cls & (1u << e)) {
                rep[e] = keep;
                if (e != keep) contract |= (1u << e);
            }
    }
    std::vector<int> emap;
    WeightedGraph out = contract_edges(contract, &emap);
    if (old_to_new) *old_to_new = emap;
    if (class_rep_out) *class_rep_out = rep;
    return out;
}

// ---------------------------------------------------------------------------
// planarity via forbidden minors on the simplification

namespace {

struct SimpleGraph {
    int nv = 0;
    std::vector<std::pair<int, int>> edges; // a < b, no duplicates

    std::string token() const {
        // cheap canonical token for memoization: degree-sorted is not enough,
        // so reuse WeightedGraph's canonical labeling
        WeightedGraph g(std::vector<int>(nv, 0), edges);
        return g.canonical_form().token;
    }
    int degree(int v) const {
        int d = 0;
        for (auto& [a, b] : edges) d += (a == v) + (b == v);
        return d;
    }
    bool adjacent(int u, int v) const {
        for (auto& [a, b] : edges)
            if ((a == u && b == v) || (a == v && b == u)) return true;
        return false;
    }
    SimpleGraph contract(int e) const {
        auto [u, v] = edges[e];
        SimpleGraph out;
        out.nv = nv - 1;
        std::set<std::pair<int, int>> es;
        auto relabel = [&](int x) {
            if (x == v) return u > v ? u - 1 : u;
            return x > v ? x - 1 : x;
        };
        for (size_t f = 0; f < edges.size(); ++f) {
            if (f == static_cast<size_t>(e)) continue;
            int a = relabel(edges[f].first), b = relabel(edges[f].second);
            if (a == b) continue;
            es.insert({std::min(a, b), std::max(a, b)});
        }
        out.edges.assign(es.begin(), es.end());
        return out;
    }
};

bool contains_subgraph(const SimpleGraph& g, const SimpleGraph& h) {
    std::vector<int> img(h.nv, -1);
    std::vector<bool> used(g.nv, false);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == h.nv) return true;
        for (int cand = 0; cand < g.nv; ++cand) {
            if (used[cand] || g.degree(cand) < h.degree(v)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (h.adjacent(u, v) && !g.adjacent(img[u], cand)) ok = false;
            if (!ok) continue;
            img[v] = cand;
            used[cand] = true;
            if (self(self, v + 1)) return true;
            used[cand] = false;
            img[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

bool has_minor(const SimpleGraph& g, const SimpleGraph& h, std::map<std::string, bool>& memo) {
    if (g.nv < h.nv || static_cast<int>(g.edges.size()) < static_cast<int>(h.edges.size()))
        return false;
    std::string tok = g.token();
    auto it = memo.find(tok);
    if (it != memo.end()) return it->second;
    bool ans = contains_subgraph(g, h);
    for (size_t e = 0; !ans && e < g.edges.size(); ++e)
        ans = has_minor(g.contract(static_cast<int>(e)), h, memo);
    memo[tok] = ans;
    return ans;
}

SimpleGraph make_k5() {
    SimpleGraph k5;
    k5.nv = 5;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) k5.edges.push_back({i, j});
    return k5;
}

SimpleGraph make_k33() {
    SimpleGraph k;
    k.nv = 6;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) k.edges.push_back({i, j});
    return k;
}

} // namespace

bool WeightedGraph::is_planar() const {
    // loops and parallel edges never matter
    WeightedGraph s = simplification();
    SimpleGraph g;
    g.nv = s.num_vertices();
    g.edges = s.edges();
    if (g.nv <= 4) return true;
    if (static_cast<int>(g.edges.size()) > 3 * g.nv - 6) return false;
    static const SimpleGraph k5 = make_k5();
    static const SimpleGraph k33 = make_k33();
    std::map<std::string, bool> memo;
    if (static_cast<int>(g.edges.size()) >= 9 && has_minor(g, k33, memo)) return false;
    memo.clear();
    if (static_cast<int>(g.edges.size()) >= 10 && has_minor(g, k5, memo)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// stock graphs

WeightedGraph theta_graph() {
    return WeightedGraph({0, 0}, {{0, 1}, {0, 1}, {0, 1}});
}

WeightedGraph dumbbell_graph() {
    // loop e1 at vertex 0, bridge e2, loop e3 at vertex 1
    return WeightedGraph({0, 0}, {{0, 0}, {0, 1}, {1, 1}});
}

WeightedGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({i, j});
    return WeightedGraph(std::vector<int>(n, 0), es);
}

WeightedGraph complete_bipartite_graph(int a, int b) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.push_back({i, a + j});
    return WeightedGraph(std::vector<int>(a + b, 0), es);
}

WeightedGraph petersen_graph() {
    // outer 5-cycle 0..4, inner pentagram 5..9, spokes i -> i+5
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) es.push_back({i, (i + 1) % 5});
    for (int i = 0; i < 5; ++i) es.push_back({i, i + 5});
    for (int i = 0; i < 5; ++i) es.push_back({5 + i, 5 + (i + 2) % 5});
    return WeightedGraph(std::vector<int>(10, 0), es);
}

WeightedGraph wedge_of_loops(int k, int weight) {
    std::vector<std::pair<int, int>> es(k, {0, 0});
    return WeightedGraph({weight}, es);
}

WeightedGraph single_vertex(int weight) { return WeightedGraph({weight}, {}); }

} // namespace tropitor
