#pragma once

#include <optional>
#include <vector>

#include "tropitor/matroid.hpp"
#include "tropitor/quadform.hpp"

namespace tropitor {

// Bounded rational polytope, possibly lower-dimensional inside its ambient
// space. Vertices and facet halfspaces are mutually certified; the halfspaces
// cut the affine span (they do not encode the span itself).
struct RationalPolytope {
    struct Halfspace {
        RatVec normal;
        Rat rhs; // normal . x <= rhs
    };

    int ambient = 0;
    std::vector<RatVec> vertices;      // canonically sorted
    std::vector<Halfspace> halfspaces; // facet-defining within the span
    std::vector<RatVec> span_basis;    // basis of the linear span

    int dim() const { return static_cast<int>(span_basis.size()); }
    bool same_vertex_set(const RationalPolytope& other) const;
    bool contains(const RatVec& x) const; // all halfspaces + affine span
    // mutual certification: vertices satisfy all halfspaces, each halfspace is
    // tight on at least dim() vertices, and each vertex is basic
    void verify() const; // throws StructuralError with a witness description
    bool centrally_symmetric() const;
};

// Intersects halfspaces restricted to a linear subspace (columns of span) and
// enumerates vertices exactly. The restriction must be bounded.
RationalPolytope polytope_from_halfspaces(int ambient,
                                          const std::vector<RationalPolytope::Halfspace>& hs,
                                          const RatMatrix& span);

// Z_A: slabs -1/2 <= v_i(x) <= 1/2 for the nonzero columns v_i of A,
// intersected with the column span of A (its natural linear span).
RationalPolytope zonotope(const TUMatrix& a);

// Dirichlet-Voronoi polytope of a positive definite form, g <= 3. The
// computation is self-certifying: every vertex of the candidate polytope is
// verified against the full lattice by exact closest-vector enumeration,
// and violated constraints are added until none remain.
RationalPolytope voronoi_polytope(const QuadForm& q);

// Semi-definite variant via a supplied unimodular reducer h with
// h q h^t = diag(q', 0): the polytope is computed for q' and carried back.
RationalPolytope voronoi_polytope(const QuadForm& q, const IntMatrix& reducer);

} // namespace tropitor
