#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropitor/errors.hpp"

namespace tropitor {

// Subset of edge indices as a bitmask; desk scale caps edges at 31.
using EdgeSubset = uint32_t;

inline int popcount(EdgeSubset s) { return __builtin_popcount(s); }

struct SymbolicInfinity {};
// k / lambda / girth values: finite or the paper's +infinity convention.
struct ExtInt {
    bool infinite = false;
    int value = 0;

    static ExtInt infinity() { return {true, 0}; }
    static ExtInt finite(int v) { return {false, v}; }
    bool operator==(const ExtInt&) const = default;
    std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

struct ConnectivityStats {
    ExtInt vertex_connectivity;
    ExtInt edge_connectivity;
    ExtInt girth;
};

// Canonical relabeling certificate of a weighted multigraph.
struct CanonicalForm {
    std::vector<int> weights;                 // canonical vertex weights
    std::vector<std::pair<int, int>> edges;   // canonical sorted edge list
    std::vector<int> vertex_map;              // original vertex -> canonical label
    std::vector<int> edge_map;                // original edge -> canonical position
    std::string token;

    bool operator==(const CanonicalForm& o) const {
        return weights == o.weights && edges == o.edges;
    }
};

// Finite connected multigraph with non-negative vertex weights. Loops are
// stored as equal endpoints. Values are immutable after construction; all
// "mutating" operations return new graphs.
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(std::vector<int> weights, std::vector<std::pair<int, int>> edges,
                  std::vector<std::string> edge_names = {});

    int num_vertices() const { return static_cast<int>(weights_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int weight(int v) const { return weights_[v]; }
    const std::vector<int>& weights() const { return weights_; }
    const std::pair<int, int>& edge(int e) const { return edges_[e]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::string& edge_name(int e) const { return edge_names_[e]; }
    const std::vector<std::string>& edge_names() const { return edge_names_; }
    int edge_index(const std::string& name) const; // throws InputError when unknown
    bool is_loop(int e) const { return edges_[e].first == edges_[e].second; }

    int valence(int v) const;
    int total_weight() const;
    int first_betti() const { return 1 - num_vertices() + num_edges(); }
    // g(Gamma,w) = b1 + |w|
    int genus() const { return first_betti() + total_weight(); }
    bool is_stable() const;

    const CanonicalForm& canonical_form() const;
    bool isomorphic_to(const WeightedGraph& other) const {
        return canonical_form() == other.canonical_form();
    }

    // Loop contraction bumps the weight; non-loop contraction merges the
    // endpoint weights. Genus is preserved. Also reports where each surviving
    // edge went (old index -> new index, -1 for the contracted edge).
    WeightedGraph contract_edge(int e, std::vector<int>* edge_map_out = nullptr) const;
    WeightedGraph delete_edges(EdgeSubset s, std::vector<int>* edge_map_out = nullptr) const;
    WeightedGraph contract_edges(EdgeSubset s, std::vector<int>* edge_map_out = nullptr) const;

    std::vector<WeightedGraph> one_edge_specializations() const;

    // Image of Aut(Gamma,w) in the symmetric group on edges.
    std::vector<std::vector<int>> automorphism_edge_action() const;

    ConnectivityStats connectivity_stats() const;

    // All simple cycles (connected 2-regular subgraphs) and all bonds
    // (minimal cuts with connected sides), as edge subsets.
    std::vector<EdgeSubset> cycles() const;
    std::vector<EdgeSubset> bonds() const;

    bool is_separating_edge(int e) const; // bridge
    // Partition of non-separating edges into classes lying on the same cycles.
    std::vector<EdgeSubset> c1_sets() const;
    bool is_3_edge_connected() const;

    WeightedGraph simplification() const;
    // One representative of the 3-edge-connectivization class; keeps the
    // lowest-index edge of each C1-set. kept_edges_out maps old edge index to
    // the kept-edge old index of its C1-set (-1 for separating edges); this is
    // what length aggregation needs downstream.
    WeightedGraph three_edge_connectivization(std::vector<int>* old_to_new = nullptr,
                                              std::vector<int>* class_rep_out = nullptr) const;

    bool is_planar() const;

    bool connected_check() const;

private:
    std::vector<int> weights_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::string> edge_names_;
    mutable std::optional<CanonicalForm> canon_;
};

// Edge bijection from g1 to g2 matching cycle families (2-isomorphism), found
// via graphic-matroid isomorphism. Returned as a vector: edge of g1 -> edge of g2.
std::optional<std::vector<int>> are_2_isomorphic(const WeightedGraph& g1, const WeightedGraph& g2);

// Test oracle: plain search over weight-preserving vertex bijections.
bool isomorphic_bruteforce(const WeightedGraph& g1, const WeightedGraph& g2);

// Named small graphs used across tests and fixtures.
WeightedGraph theta_graph();
WeightedGraph dumbbell_graph();
WeightedGraph complete_graph(int n);
WeightedGraph complete_bipartite_graph(int a, int b);
WeightedGraph petersen_graph();
WeightedGraph wedge_of_loops(int k, int weight = 0);
WeightedGraph single_vertex(int weight);

} // namespace tropitor
