#pragma once

#include <string>
#include <vector>

#include "tropitor/graph.hpp"
#include "tropitor/matrix.hpp"

namespace tropitor {

// Per-edge (source, target) assignment consistent with the endpoint pairs.
struct Orientation {
    std::vector<std::pair<int, int>> st; // st[e] = (s(e), t(e))
};

// Default orientation: each edge runs from its first stored endpoint to the
// second (loops have s = t).
Orientation default_orientation(const WeightedGraph& g);

// Ordered integer vectors in Z^{#E}; a lattice basis of ker(boundary) for H1.
struct IntegerChainBasis {
    std::vector<IntVec> vectors;

    int size() const { return static_cast<int>(vectors.size()); }
    IntMatrix as_matrix() const; // rows = vectors
};

struct BoundaryMaps {
    IntMatrix boundary; // #V x #E, column e = t(e) - s(e)
    IntMatrix coboundary; // #E x #V, adjoint of boundary
};

BoundaryMaps boundary_matrices(const WeightedGraph& g, const Orientation& o);

// Fundamental cycles of the BFS spanning tree rooted at vertex 0, ordered by
// non-tree edge index; entries in {-1,0,1}; basis size = first Betti number.
IntegerChainBasis h1_basis(const WeightedGraph& g, const Orientation& o);

// Validates that the vectors form a lattice basis of H1(Gamma,Z).
bool is_h1_lattice_basis(const WeightedGraph& g, const Orientation& o, const IntegerChainBasis& b);

// Rows are the basis vectors' edge coordinates: the g x #E matrix A*(Gamma)
// whose vector matroid is the cographic matroid. Throws StructuralError when
// b is not an H1 lattice basis.
IntMatrix cographic_matrix(const WeightedGraph& g, const Orientation& o, const IntegerChainBasis& b);

// Rows are delta(v_0), ..., delta(v_{#V-2}): the (#V-1) x #E matrix A(Gamma)
// whose vector matroid is the graphic matroid.
IntMatrix graphic_matrix(const WeightedGraph& g, const Orientation& o);

// Parses cycles given as signed edge-name lists, e.g. {"e5","e9","-e13"}.
IntegerChainBasis basis_from_signed_edge_lists(const WeightedGraph& g,
                                               const std::vector<std::vector<std::string>>& lists);

// Coordinates of a cycle vector z (in Z^{#E}) with respect to basis b; fails
// when z is outside the span.
std::optional<RatVec> cycle_coordinates(const IntegerChainBasis& b, const IntVec& z);

} // namespace tropitor
