#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropitor/homology.hpp"
#include "tropitor/matroid.hpp"
#include "tropitor/moduli.hpp"
#include "tropitor/quadform.hpp"

namespace tropitor {

// Stable weighted graph with positive rational edge lengths.
struct TropicalCurve {
    WeightedGraph graph;
    LengthAssignment lengths;

    void validate() const; // stability, positivity, one length per edge
    int genus() const { return graph.genus(); }
    RatVec length_vector() const; // lengths in edge order
};

// 3-edge-connectivization class of a metric graph: a representative together
// with aggregated lengths; its graphic matroid and a class-invariant token.
struct MetricClass {
    WeightedGraph representative;
    LengthAssignment lengths;
    Matroid matroid;       // M(representative)
    std::vector<Rat> element_lengths; // aligned with the matroid ground set
    std::string token;     // isomorphism-invariant fingerprint
};

// Jacobian Gram matrix in the default (BFS fundamental cycle) basis, plus a
// zero block of size |w|.
QuadForm torelli_point(const TropicalCurve& c);

struct CellImage {
    Matroid matroid; // simplification of the cographic matroid
    int dim;         // = ground size
};
CellImage torelli_cell_image(const WeightedGraph& g);

MetricClass metric_class(const TropicalCurve& c);

struct SameJacobianResult {
    bool same = false;
    // matching between representative matroid elements (by ground index) when same
    std::optional<std::vector<int>> matching;
    std::string detail;
};
// Equality of Jacobians, decided through 3-edge-connectivization classes with
// a length-compatible matroid isomorphism as certificate.
SameJacobianResult same_jacobian(const TropicalCurve& c1, const TropicalCurve& c2);

struct SchottkyResult {
    bool in_image = false;
    std::optional<WeightedGraph> realizing; // 3-edge-connected graph with M*(G) ~ m
};
// Is the simple matroid a cographic class realized by a graph of genus <= cap?
SchottkyResult schottky_membership(const Matroid& simple_matroid, int genus_cap);
// Quadratic-form entry point: q must equal q_from_tu(a, l) for some
// non-negative l (checked exactly); membership is then decided for M~[a].
SchottkyResult schottky_membership(const QuadForm& q, const TUMatrix& a, int genus_cap);

struct PlanarImageResult {
    bool planar = false;         // forbidden-minor route
    bool cographic_graphic = false; // is_graphic(simplified cographic matroid) route
};
// Both routes must agree; disagreement throws StructuralError.
PlanarImageResult planar_image_test(const WeightedGraph& g);

// Recovers the length of every edge from the Jacobian by pairing two cycles
// meeting exactly in that edge; verifies the result reproduces q exactly.
LengthAssignment reconstruct_lengths(const QuadForm& q, const WeightedGraph& g,
                                     const Orientation& o, const IntegerChainBasis& b);

// Signed indicator vector of a cycle (consistent traversal orientation).
IntVec oriented_cycle_vector(const WeightedGraph& g, const Orientation& o, EdgeSubset cycle);

} // namespace tropitor
