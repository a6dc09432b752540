#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropitor/graph.hpp"
#include "tropitor/matrix.hpp"

namespace tropitor {

using GroundSubset = uint32_t;

// Matroid given by its bases over a small ground set (<= 20 elements).
class Matroid {
public:
    Matroid() = default;

    // Validated construction; checks non-emptiness, uniform cardinality and
    // the basis exchange axiom (full check up to `exchange_check_cap` basis
    // pairs, deterministic subsample beyond). Reports a witness on failure.
    static Matroid from_bases(int ground_size, std::vector<GroundSubset> bases,
                              std::vector<std::string> names = {});

    int ground_size() const { return n_; }
    int rank() const { return rank_; }
    const std::vector<GroundSubset>& bases() const { return bases_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int i) const { return names_[i]; }
    int element_index(const std::string& name) const;

    const std::vector<GroundSubset>& circuits() const; // minimal dependent sets
    bool is_independent(GroundSubset s) const;
    bool is_basis(GroundSubset s) const;

    bool is_loop(int e) const;      // {e} is a circuit
    bool is_simple() const;

    Matroid dual() const;
    Matroid deleted(GroundSubset i) const;

    struct Simplification {
        Matroid matroid;
        std::vector<int> class_of;   // original element -> surviving representative, -1 for loops
        std::vector<int> kept;       // surviving original indices in order
    };
    Simplification simplify() const;

    // Equality as labeled matroids on the same ground size (bases as sets).
    bool equal_on_common_ground(const Matroid& other) const;

    // Invariant fingerprint preserved by isomorphism, used for pruning and
    // cheap inequality tests.
    const std::string& iso_fingerprint() const;

private:
    int n_ = 0;
    int rank_ = 0;
    std::vector<GroundSubset> bases_; // sorted
    std::vector<std::string> names_;
    mutable std::optional<std::vector<GroundSubset>> circuits_;
    mutable std::optional<std::vector<char>> indep_;
    mutable std::optional<std::string> fingerprint_;

    void ensure_indep() const;
    friend Matroid matroid_from_trusted_bases(int, std::vector<GroundSubset>, std::vector<std::string>);
};

// Internal constructor for matroids known valid by construction.
Matroid matroid_from_trusted_bases(int ground_size, std::vector<GroundSubset> bases,
                                   std::vector<std::string> names = {});

// Graphic matroid M(Gamma): circuits are the cycles; bases are spanning trees.
Matroid graphic_matroid(const WeightedGraph& g);
// Cographic matroid M*(Gamma): circuits are the bonds; bases are co-trees.
Matroid cographic_matroid(const WeightedGraph& g);

Matroid uniform_matroid(int rank, int n);

struct TUWitness {
    std::vector<int> rows, cols;
    Int det;
};

// Exhaustive total-unimodularity check over all square submatrices,
// fraction-free determinants, smallest witness first.
std::optional<TUWitness> tu_violation(const IntMatrix& a);
inline bool is_totally_unimodular(const IntMatrix& a) { return !tu_violation(a).has_value(); }

// Certified totally unimodular matrix.
class TUMatrix {
public:
    explicit TUMatrix(IntMatrix a);
    const IntMatrix& matrix() const { return a_; }
    int rows() const { return a_.rows(); }
    int cols() const { return a_.cols(); }

private:
    IntMatrix a_;
};

// Vector matroid of the columns of a (over Q).
Matroid vector_matroid(const IntMatrix& a, std::vector<std::string> names = {});
inline Matroid vector_matroid(const TUMatrix& a, std::vector<std::string> names = {}) {
    return vector_matroid(a.matrix(), std::move(names));
}

// Ground-set bijection carrying bases to bases (circuit-profile pruned
// backtracking); mapping[i] = image of element i.
std::optional<std::vector<int>> matroid_isomorphic(const Matroid& m1, const Matroid& m2);

// All ground-set bijections fixing the set of bases.
std::vector<std::vector<int>> matroid_automorphisms(const Matroid& m);

// Exhaustive search for a connected simple graph whose graphic matroid is
// isomorphic to m (m must be simple). Desk-scale capacity guarded.
std::optional<WeightedGraph> is_graphic(const Matroid& m);

} // namespace tropitor
