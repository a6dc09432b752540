#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropitor/homology.hpp"
#include "tropitor/matrix.hpp"
#include "tropitor/matroid.hpp"

namespace tropitor {

// Positive semi-definite quadratic form with exact rational entries. The
// stored matrix is the Gram matrix of the associated symmetric bilinear
// pairing: Q(x) = x^t m x.
class QuadForm {
public:
    QuadForm() = default;
    explicit QuadForm(RatMatrix m); // checks symmetry and PSD (all principal minors >= 0)

    int dim() const { return m_.rows(); }
    const RatMatrix& matrix() const { return m_; }
    Rat operator()(const IntVec& v) const;             // Q(v)
    Rat operator()(const RatVec& v) const;
    Rat pairing(const IntVec& a, const IntVec& b) const; // bilinear a^t m b

    int rank() const;
    RatMatrix null_space_basis() const; // columns; rational by construction
    bool positive_definite() const { return rank() == dim(); }

    bool operator==(const QuadForm& o) const { return m_ == o.m_; }

private:
    RatMatrix m_;
};

// Edge-id -> positive rational length. The closure variant admits zeros.
struct LengthAssignment {
    std::map<std::string, Rat> lengths;
    bool allow_zero = false;

    Rat at(const std::string& edge) const;
    void validate() const; // positivity (or non-negativity when allow_zero)
};

// Jacobian Gram matrix with entries kept as linear forms in the edge lengths:
// entry (i,j) = sum_e coeff[i][j][e] * l(e). Evaluating at a length
// assignment gives the rational QuadForm.
struct SymbolicQuadForm {
    int dim = 0;
    std::vector<std::string> edge_names;
    std::vector<std::vector<IntVec>> coeff; // [i][j] -> per-edge integer coefficients

    QuadForm evaluate(const LengthAssignment& l) const;
    // Entries rendered like "l1+l2", "-l13/2", "0"; divisor scales everything.
    std::string entry_string(int i, int j, const Int& divisor = Int(1)) const;
};

// Gram matrix of Eq-style Jacobian: block sum over H1 (in basis b) plus a zero
// block of size |w|. Requires a stable curve; rank equals g(Gamma).
SymbolicQuadForm jacobian_symbolic(const WeightedGraph& g, const Orientation& o,
                                   const IntegerChainBasis& b);
QuadForm jacobian(const WeightedGraph& g, const Orientation& o, const IntegerChainBasis& b,
                  const LengthAssignment& l);

// Q_{A,l}(x) = ||A^t x||_l, i.e. Gram = A diag(l) A^t with l indexed by columns.
QuadForm q_from_tu(const TUMatrix& a, const RatVec& l);

// Open principal cone: negative off-diagonal entries, positive row sums.
bool in_principal_cone(const QuadForm& q);

// Unimodular reduction splitting off the null space: h q h^t = diag(q', 0)
// with q' positive definite.
struct SemidefReduction {
    IntMatrix h;        // in GL_g(Z)
    QuadForm definite;  // the rank x rank positive definite block
};
SemidefReduction reduce_semidefinite(const QuadForm& q);

enum class EquivCertainty { Equivalent, Inequivalent, Undetermined };

struct EquivResult {
    EquivCertainty certainty = EquivCertainty::Undetermined;
    std::optional<IntMatrix> witness; // h with h q1 h^t = q2
    std::string reason;
};

// Bounded search for h in GL_g(Z) with h q1 h^t = q2 (entries |h_ij| <=
// bound), plus invariant-based inequivalence certification (rank, determinant
// of the definite part, represented-value multisets, and exact binary-form
// reduction when the definite rank is <= 2). Absence of a witness alone never
// certifies inequivalence.
EquivResult arith_equiv_bruteforce(const QuadForm& q1, const QuadForm& q2, int bound);

// Lattice vectors v with Q(v) <= bound (Q positive definite), 0 excluded.
std::vector<IntVec> vectors_up_to(const QuadForm& q, const Rat& bound);

// Multiset of represented values of the definite part up to an invariant
// threshold; equal multisets are necessary for arithmetic equivalence.
std::vector<Rat> represented_values(const QuadForm& q);

} // namespace tropitor
