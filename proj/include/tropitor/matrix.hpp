#pragma once

#include <cassert>
#include <initializer_list>
#include <optional>
#include <vector>

#include "tropitor/rational.hpp"

namespace tropitor {

// Small dense matrix. Everything in this project is desk scale, so the
// representation favors clarity over locality.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, T fill = T(0))
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
        data_.reserve(static_cast<size_t>(rows_) * cols_);
        for (const auto& row : init) {
            assert(static_cast<int>(row.size()) == cols_);
            for (const auto& v : row) data_.push_back(v);
        }
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const T& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    bool operator==(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }
    bool operator!=(const Matrix& other) const { return !(*this == other); }
    bool operator<(const Matrix& other) const {
        if (rows_ != other.rows_) return rows_ < other.rows_;
        if (cols_ != other.cols_) return cols_ < other.cols_;
        return data_ < other.data_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix operator*(const Matrix& other) const {
        assert(cols_ == other.rows_);
        Matrix p(rows_, other.cols_);
        for (int r = 0; r < rows_; ++r)
            for (int k = 0; k < cols_; ++k) {
                const T& a = (*this)(r, k);
                if (a == T(0)) continue;
                for (int c = 0; c < other.cols_; ++c) p(r, c) += a * other(k, c);
            }
        return p;
    }

    std::vector<T> row(int r) const {
        std::vector<T> out(cols_);
        for (int c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
        return out;
    }
    std::vector<T> col(int c) const {
        std::vector<T> out(rows_);
        for (int r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    Matrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
        Matrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t c = 0; c < cols.size(); ++c) s(static_cast<int>(r), static_cast<int>(c)) = (*this)(rows[r], cols[c]);
        return s;
    }

private:
    int rows_, cols_;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

IntMatrix to_int_matrix(const RatMatrix& m); // throws InputError on non-integers
RatMatrix to_rat_matrix(const IntMatrix& m);

// Fraction-free (Bareiss) determinant of a square integer matrix.
Int det_bareiss(const IntMatrix& a);

// Naive Laplace expansion; test oracle for det_bareiss.
Int det_laplace(const IntMatrix& a);

Rat det_rational(const RatMatrix& a);

int rank(const RatMatrix& a);
int rank(const IntMatrix& a);

// Indices of a maximal linearly independent subset of columns (leftmost pivots).
std::vector<int> pivot_columns(const RatMatrix& a);

// Rational kernel basis of a (vectors x with a*x = 0), as matrix columns.
RatMatrix kernel_basis(const RatMatrix& a);

// Solves a*x = b; empty optional when inconsistent. When the system is
// underdetermined returns one solution (free variables set to 0).
std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b);

std::optional<RatMatrix> inverse(const RatMatrix& a);

// Scales a rational vector to a primitive integer vector (gcd 1, first
// nonzero entry positive).
IntVec primitive_integer_vector(const RatVec& v);

// Smith normal form: u*a*v = d with u, v unimodular and d diagonal,
// d(i,i) | d(i+1,i+1).
struct SmithResult {
    IntMatrix u, d, v;
};
SmithResult smith_normal_form(const IntMatrix& a);

bool is_unimodular(const IntMatrix& a);

} // namespace tropitor
