#include "tropitor/matroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace tropitor {

namespace {

std::vector<std::string> default_names(int n, const char* prefix) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i + 1));
    return names;
}

// enumerates k-subsets of {0..n-1}, calling f(selection); f returns false to stop
template <typename F>
void for_each_subset(int n, int k, F&& f) {
    if (k > n || k < 0) return;
    std::vector<int> sel(k);
    std::iota(sel.begin(), sel.end(), 0);
    while (true) {
        if (!f(sel)) return;
        int i = k - 1;
        while (i >= 0 && sel[i] == n - k + i) --i;
        if (i < 0) return;
        ++sel[i];
        for (int j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
    }
}

constexpr size_t kExchangePairCap = 4'000'000;

} // namespace

Matroid matroid_from_trusted_bases(int ground_size, std::vector<GroundSubset> bases,
                                   std::vector<std::string> names) {
    Matroid m;
    m.n_ = ground_size;
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    m.bases_ = std::move(bases);
    m.rank_ = m.bases_.empty() ? 0 : popcount(m.bases_[0]);
    m.names_ = names.empty() ? default_names(ground_size, "e") : std::move(names);
    return m;
}

Matroid Matroid::from_bases(int ground_size, std::vector<GroundSubset> bases,
                            std::vector<std::string> names) {
    if (ground_size < 0 || ground_size > 20) throw CapacityError("ground set capped at 20 elements");
    if (bases.empty()) throw StructuralError("a matroid needs at least one basis");
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    int rank = popcount(bases[0]);
    for (GroundSubset b : bases) {
        if (b >= (1u << ground_size)) throw StructuralError("basis mentions an element outside the ground set");
        if (popcount(b) != rank)
            throw StructuralError("bases have different cardinalities: " + std::to_string(rank) +
                                  " vs " + std::to_string(popcount(b)));
    }
    std::unordered_set<GroundSubset> basis_set(bases.begin(), bases.end());
    // exchange axiom, witness-reporting; deterministic prefix when the pair
    // count exceeds the desk-scale cap
    size_t checked = 0;
    for (size_t i = 0; i < bases.size() && checked < kExchangePairCap; ++i) {
        for (size_t j = 0; j < bases.size() && checked < kExchangePairCap; ++j) {
            if (i == j) continue;
            ++checked;
            GroundSubset b1 = bases[i], b2 = bases[j];
            GroundSubset only1 = b1 & ~b2, only2 = b2 & ~b1;
            for (int x = 0; x < ground_size; ++x) {
                if (!(only1 & (1u << x))) continue;
                bool found = false;
                for (int y = 0; y < ground_size && !found; ++y) {
                    if (!(only2 & (1u << y))) continue;
                    found = basis_set.count((b1 & ~(1u << x)) | (1u << y)) > 0;
                }
                if (!found) {
                    std::ostringstream msg;
                    msg << "exchange axiom fails for bases " << b1 << " and " << b2
                        << " at element index " << x;
                    throw StructuralError(msg.str());
                }
            }
        }
    }
    return matroid_from_trusted_bases(ground_size, std::move(bases), std::move(names));
}

int Matroid::element_index(const std::string& name) const {
    for (int i = 0; i < n_; ++i)
        if (names_[i] == name) return i;
    throw InputError("unknown matroid element '" + name + "'");
}

void Matroid::ensure_indep() const {
    if (indep_) return;
    std::vector<char> ind(1u << n_, 0);
    // downward closure from bases
    std::vector<GroundSubset> stack(bases_.begin(), bases_.end());
    for (GroundSubset b : bases_) ind[b] = 1;
    while (!stack.empty()) {
        GroundSubset s = stack.back();
        stack.pop_back();
        for (int e = 0; e < n_; ++e) {
            if (!(s & (1u << e))) continue;
            GroundSubset t = s & ~(1u << e);
            if (!ind[t]) {
                ind[t] = 1;
                stack.push_back(t);
            }
        }
    }
    indep_ = std::move(ind);
}

bool Matroid::is_independent(GroundSubset s) const {
    ensure_indep();
    return (*indep_)[s] != 0;
}

bool Matroid::is_basis(GroundSubset s) const {
    return std::binary_search(bases_.begin(), bases_.end(), s);
}

const std::vector<GroundSubset>& Matroid::circuits() const {
    if (circuits_) return *circuits_;
    ensure_indep();
    std::vector<GroundSubset> out;
    for (GroundSubset s = 1; s < (1u << n_); ++s) {
        if ((*indep_)[s]) continue;
        bool minimal = true;
        for (int e = 0; e < n_ && minimal; ++e)
            if (s & (1u << e)) minimal = (*indep_)[s & ~(1u << e)] != 0;
        if (minimal) out.push_back(s);
    }
    circuits_ = std::move(out);
    return *circuits_;
}

bool Matroid::is_loop(int e) const { return !is_independent(1u << e); }

bool Matroid::is_simple() const {
    for (GroundSubset c : circuits())
        if (popcount(c) <= 2) return false;
    return true;
}

Matroid Matroid::dual() const {
    GroundSubset full = (n_ == 32) ? ~0u : ((1u << n_) - 1);
    std::vector<GroundSubset> db;
    db.reserve(bases_.size());
    for (GroundSubset b : bases_) db.push_back(full & ~b);
    return matroid_from_trusted_bases(n_, std::move(db), names_);
}

Matroid Matroid::deleted(GroundSubset i) const {
    ensure_indep();
    std::vector<int> keep;
    for (int e = 0; e < n_; ++e)
        if (!(i & (1u << e))) keep.push_back(e);
    int m = static_cast<int>(keep.size());
    // independent subsets of the complement, re-indexed
    int best = -1;
    std::vector<GroundSubset> best_sets;
    for (GroundSubset s = 0; s < (1u << m); ++s) {
        GroundSubset orig = 0;
        for (int j = 0; j < m; ++j)
            if (s & (1u << j)) orig |= (1u << keep[j]);
        if (!(*indep_)[orig]) continue;
        int sz = popcount(s);
        if (sz > best) {
            best = sz;
            best_sets.clear();
        }
        if (sz == best) best_sets.push_back(s);
    }
    std::vector<std::string> names;
    for (int j : keep) names.push_back(names_[j]);
    return matroid_from_trusted_bases(m, std::move(best_sets), std::move(names));
}

Matroid::Simplification Matroid::simplify() const {
    Simplification out;
    out.class_of.assign(n_, -1);
    std::vector<int> nonloops;
    for (int e = 0; e < n_; ++e)
        if (!is_loop(e)) nonloops.push_back(e);
    // parallel classes among non-loops; lowest index represents
    for (int e : nonloops) {
        if (out.class_of[e] != -1) continue;
        out.class_of[e] = e;
        out.kept.push_back(e);
        for (int f : nonloops) {
            if (f <= e || out.class_of[f] != -1) continue;
            if (!is_independent((1u << e) | (1u << f))) out.class_of[f] = e;
        }
    }
    GroundSubset drop = 0;
    for (int e = 0; e < n_; ++e)
        if (out.class_of[e] != e) drop |= (1u << e); // loops and non-representatives
    out.matroid = deleted(drop);
    return out;
}

bool Matroid::equal_on_common_ground(const Matroid& other) const {
    return n_ == other.n_ && bases_ == other.bases_;
}

const std::string& Matroid::iso_fingerprint() const {
    if (fingerprint_) return *fingerprint_;
    const auto& circ = circuits();
    // per-element profile: multiset of circuit sizes through it
    std::vector<std::vector<int>> profile(n_);
    for (GroundSubset c : circ) {
        int sz = popcount(c);
        for (int e = 0; e < n_; ++e)
            if (c & (1u << e)) profile[e].push_back(sz);
    }
    std::vector<std::string> parts;
    for (int e = 0; e < n_; ++e) {
        std::sort(profile[e].begin(), profile[e].end());
        std::ostringstream p;
        for (int s : profile[e]) p << s << ".";
        parts.push_back(p.str());
    }
    std::sort(parts.begin(), parts.end());
    std::ostringstream fp;
    fp << "n" << n_ << ";r" << rank_ << ";b" << bases_.size() << ";c" << circ.size() << ";";
    for (const auto& p : parts) fp << p << "|";
    fingerprint_ = fp.str();
    return *fingerprint_;
}

// ---------------------------------------------------------------------------

namespace {

bool spans_connected(int nv, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(nv);
    for (auto& [a, b] : edges) {
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

} // namespace

Matroid graphic_matroid(const WeightedGraph& g) {
    int nv = g.num_vertices(), ne = g.num_edges();
    std::vector<GroundSubset> trees;
    // bases are the spanning trees: nv-1 loop-free edges connecting everything
    for_each_subset(ne, nv - 1, [&](const std::vector<int>& sel) {
        std::vector<std::pair<int, int>> picked;
        for (int e : sel) {
            if (g.is_loop(e)) return true;
            picked.push_back(g.edge(e));
        }
        if (spans_connected(nv, picked)) {
            GroundSubset mask = 0;
            for (int e : sel) mask |= (1u << e);
            trees.push_back(mask);
        }
        return true;
    });
    return matroid_from_trusted_bases(ne, std::move(trees), g.edge_names());
}

Matroid cographic_matroid(const WeightedGraph& g) { return graphic_matroid(g).dual(); }

Matroid uniform_matroid(int rank, int n) {
    std::vector<GroundSubset> bases;
    for_each_subset(n, rank, [&](const std::vector<int>& sel) {
        GroundSubset m = 0;
        for (int e : sel) m |= (1u << e);
        bases.push_back(m);
        return true;
    });
    if (rank == 0) bases.push_back(0);
    return matroid_from_trusted_bases(n, std::move(bases));
}

// ---------------------------------------------------------------------------

std::optional<TUWitness> tu_violation(const IntMatrix& a) {
    int m = a.rows(), n = a.cols();
    std::optional<TUWitness> witness;
    for (int k = 1; k <= std::min(m, n) && !witness; ++k) {
        for_each_subset(m, k, [&](const std::vector<int>& rows) {
            bool stop = false;
            for_each_subset(n, k, [&](const std::vector<int>& cols) {
                Int d = det_bareiss(a.submatrix(rows, cols));
                if (d > 1 || d < -1) {
                    witness = TUWitness{rows, cols, d};
                    stop = true;
                    return false;
                }
                return true;
            });
            return !stop;
        });
    }
    return witness;
}

TUMatrix::TUMatrix(IntMatrix a) : a_(std::move(a)) {
    if (auto w = tu_violation(a_)) {
        std::ostringstream msg;
        msg << "matrix is not totally unimodular: " << w->rows.size() << "x" << w->rows.size()
            << " submatrix with determinant " << w->det;
        throw StructuralError(msg.str());
    }
}

Matroid vector_matroid(const IntMatrix& a, std::vector<std::string> names) {
    int n = a.cols();
    int r = rank(a);
    std::vector<GroundSubset> bases;
    std::vector<int> all_rows(a.rows());
    std::iota(all_rows.begin(), all_rows.end(), 0);
    for_each_subset(n, r, [&](const std::vector<int>& cols) {
        if (rank(a.submatrix(all_rows, cols)) == r) {
            GroundSubset m = 0;
            for (int c : cols) m |= (1u << c);
            bases.push_back(m);
        }
        return true;
    });
    if (r == 0) bases.push_back(0);
    return matroid_from_trusted_bases(n, std::move(bases),
                                      names.empty() ? default_names(n, "c") : std::move(names));
}

// ---------------------------------------------------------------------------

namespace {

// Backtracking search for basis-preserving bijections; stops after the first
// hit unless collect_all is set.
std::vector<std::vector<int>> matroid_iso_search(const Matroid& m1, const Matroid& m2,
                                                 bool collect_all) {
    int n = m1.ground_size();
    if (n != m2.ground_size() || m1.rank() != m2.rank() ||
        m1.bases().size() != m2.bases().size() ||
        m1.circuits().size() != m2.circuits().size())
        return {};
    if (m1.iso_fingerprint() != m2.iso_fingerprint()) return {};

    // per-element circuit-size profiles for pruning
    auto profiles = [](const Matroid& m) {
        std::vector<std::vector<int>> p(m.ground_size());
        for (GroundSubset c : m.circuits()) {
            int sz = popcount(c);
            for (int e = 0; e < m.ground_size(); ++e)
                if (c & (1u << e)) p[e].push_back(sz);
        }
        for (auto& v : p) std::sort(v.begin(), v.end());
        return p;
    };
    std::vector<std::vector<int>> p1 = profiles(m1), p2 = profiles(m2);

    std::unordered_set<GroundSubset> circ2(m2.circuits().begin(), m2.circuits().end());
    const auto& circ1 = m1.circuits();

    // assign rarest-profile elements first
    std::map<std::vector<int>, int> freq;
    for (const auto& p : p1) freq[p]++;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (freq[p1[a]] != freq[p1[b]]) return freq[p1[a]] < freq[p1[b]];
        return a < b;
    });

    std::vector<std::vector<int>> found;
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    GroundSubset mapped_domain = 0;

    auto rec = [&](auto&& self, int idx) -> bool {
        if (idx == n) {
            found.push_back(map);
            return !collect_all;
        }
        int e = order[idx];
        for (int img = 0; img < n; ++img) {
            if (used[img] || p1[e] != p2[img]) continue;
            map[e] = img;
            used[img] = true;
            mapped_domain |= (1u << e);
            bool ok = true;
            // every circuit fully inside the mapped domain must land on a circuit
            for (GroundSubset c : circ1) {
                if ((c & mapped_domain) != c || !(c & (1u << e))) continue;
                GroundSubset imgc = 0;
                for (int x = 0; x < n; ++x)
                    if (c & (1u << x)) imgc |= (1u << map[x]);
                if (!circ2.count(imgc)) { ok = false; break; }
            }
            if (ok && self(self, idx + 1)) return true;
            mapped_domain &= ~(1u << e);
            used[img] = false;
            map[e] = -1;
        }
        return false;
    };
    rec(rec, 0);
    return found;
}

} // namespace

std::optional<std::vector<int>> matroid_isomorphic(const Matroid& m1, const Matroid& m2) {
    std::vector<std::vector<int>> hits = matroid_iso_search(m1, m2, false);
    if (hits.empty()) return std::nullopt;
    return hits.front();
}

std::vector<std::vector<int>> matroid_automorphisms(const Matroid& m) {
    std::vector<std::vector<int>> all = matroid_iso_search(m, m, true);
    std::sort(all.begin(), all.end());
    return all;
}

// ---------------------------------------------------------------------------

std::optional<std::vector<int>> are_2_isomorphic(const WeightedGraph& g1, const WeightedGraph& g2) {
    if (g1.num_edges() != g2.num_edges()) return std::nullopt;
    return matroid_isomorphic(graphic_matroid(g1), graphic_matroid(g2));
}

// ---------------------------------------------------------------------------

std::optional<WeightedGraph> is_graphic(const Matroid& m) {
    if (!m.is_simple()) throw StructuralError("is_graphic expects a simple matroid");
    int n = m.ground_size();
    if (n > 10) throw CapacityError("is_graphic is capped at 10 elements");
    int nv = m.rank() + 1; // a connected graph realizing rank r has r+1 vertices
    if (n == 0) return single_vertex(0);
    int slots = nv * (nv - 1) / 2;
    if (n > slots) return std::nullopt;
    // crude work estimate: C(slots, n)
    double work = 1;
    for (int i = 0; i < n; ++i) work *= static_cast<double>(slots - i) / (i + 1);
    if (work > 2e6) throw CapacityError("is_graphic search space too large");

    std::vector<std::pair<int, int>> all_pairs;
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j) all_pairs.push_back({i, j});

    std::optional<WeightedGraph> found;
    for_each_subset(slots, n, [&](const std::vector<int>& sel) {
        std::vector<std::pair<int, int>> edges;
        for (int s : sel) edges.push_back(all_pairs[s]);
        if (!spans_connected(nv, edges)) return true;
        WeightedGraph g(std::vector<int>(nv, 0), edges);
        if (matroid_isomorphic(graphic_matroid(g), m)) {
            found = g;
            return false;
        }
        return true;
    });
    return found;
}

} // namespace tropitor
