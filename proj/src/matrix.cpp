#include "tropitor/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace tropitor {

IntMatrix to_int_matrix(const RatMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            if (denominator(m(r, c)) != 1) throw InputError("matrix entry is not an integer");
            out(r, c) = numerator(m(r, c));
        }
    return out;
}

RatMatrix to_rat_matrix(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) out(r, c) = Rat(m(r, c));
    return out;
}

Int det_bareiss(const IntMatrix& a) {
    assert(a.rows() == a.cols());
    int n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (m(r, k) != 0) { piv = r; break; }
            if (piv < 0) return 0;
            for (int c = k; c < n; ++c) std::swap(m(k, c), m(piv, c));
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r)
            for (int c = k + 1; c < n; ++c)
                m(r, c) = (m(r, c) * m(k, k) - m(r, k) * m(k, c)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

Int det_laplace(const IntMatrix& a) {
    assert(a.rows() == a.cols());
    int n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a(0, 0);
    Int d = 0;
    std::vector<int> rows(n - 1);
    std::iota(rows.begin(), rows.end(), 1);
    std::vector<int> cols;
    for (int p = 0; p < n; ++p) {
        if (a(0, p) == 0) continue;
        cols.clear();
        for (int c = 0; c < n; ++c)
            if (c != p) cols.push_back(c);
        Int term = a(0, p) * det_laplace(a.submatrix(rows, cols));
        d += (p % 2 == 0) ? term : -term;
    }
    return d;
}

Rat det_rational(const RatMatrix& a) {
    assert(a.rows() == a.cols());
    int n = a.rows();
    RatMatrix m = a;
    Rat d = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r)
            if (m(r, k) != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != k) {
            for (int c = k; c < n; ++c) std::swap(m(k, c), m(piv, c));
            d = -d;
        }
        d *= m(k, k);
        Rat inv = Rat(1) / m(k, k);
        for (int r = k + 1; r < n; ++r) {
            if (m(r, k) == 0) continue;
            Rat f = m(r, k) * inv;
            for (int c = k; c < n; ++c) m(r, c) -= f * m(k, c);
        }
    }
    return d;
}

namespace {

// Row echelon over Q; returns pivot column per step.
std::vector<int> echelon(RatMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
        Rat inv = Rat(1) / m(r, c);
        for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

int rank(const RatMatrix& a) {
    RatMatrix m = a;
    return static_cast<int>(echelon(m).size());
}

int rank(const IntMatrix& a) { return rank(to_rat_matrix(a)); }

std::vector<int> pivot_columns(const RatMatrix& a) {
    RatMatrix m = a;
    return echelon(m);
}

RatMatrix kernel_basis(const RatMatrix& a) {
    RatMatrix m = a;
    std::vector<int> pivots = echelon(m);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    int k = a.cols() - static_cast<int>(pivots.size());
    RatMatrix basis(a.cols(), k);
    int col = 0;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis(free, col) = 1;
        for (size_t p = 0; p < pivots.size(); ++p) basis(pivots[p], col) = -m(static_cast<int>(p), free);
        ++col;
    }
    return basis;
}

std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b) {
    assert(static_cast<int>(b.size()) == a.rows());
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    std::vector<int> pivots = echelon(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt; // 0 = 1 row
    RatVec x(a.cols(), Rat(0));
    for (size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = aug(static_cast<int>(p), a.cols());
    return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
    assert(a.rows() == a.cols());
    int n = a.rows();
    RatMatrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n + r) = 1;
    }
    std::vector<int> pivots = echelon(aug);
    if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
    RatMatrix inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
    return inv;
}

IntVec primitive_integer_vector(const RatVec& v) {
    Int lcm = 1;
    for (const Rat& q : v) lcm = boost::multiprecision::lcm(lcm, denominator(q));
    IntVec w(v.size());
    Int g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        w[i] = numerator(v[i]) * (lcm / denominator(v[i]));
        g = boost::multiprecision::gcd(g, w[i]);
    }
    if (g == 0) return w;
    int lead = -1;
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0) { lead = static_cast<int>(i); break; }
    if (lead >= 0 && w[lead] < 0) g = -g;
    for (Int& x : w) x /= g;
    return w;
}

SmithResult smith_normal_form(const IntMatrix& a) {
    int m = a.rows(), n = a.cols();
    SmithResult res{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    IntMatrix& d = res.d;
    auto row_op = [&](int r1, int r2, const Int& f) { // r1 -= f*r2 in d, same in u
        for (int c = 0; c < n; ++c) d(r1, c) -= f * d(r2, c);
        for (int c = 0; c < m; ++c) res.u(r1, c) -= f * res.u(r2, c);
    };
    auto col_op = [&](int c1, int c2, const Int& f) {
        for (int r = 0; r < m; ++r) d(r, c1) -= f * d(r, c2);
        for (int r = 0; r < n; ++r) res.v(r, c1) -= f * res.v(r, c2);
    };
    auto row_swap = [&](int r1, int r2) {
        for (int c = 0; c < n; ++c) std::swap(d(r1, c), d(r2, c));
        for (int c = 0; c < m; ++c) std::swap(res.u(r1, c), res.u(r2, c));
    };
    auto col_swap = [&](int c1, int c2) {
        for (int r = 0; r < m; ++r) std::swap(d(r, c1), d(r, c2));
        for (int r = 0; r < n; ++r) std::swap(res.v(r, c1), res.v(r, c2));
    };

    int t = 0;
    while (t < m && t < n) {
        // locate a nonzero pivot with smallest absolute value
        int pr = -1, pc = -1;
        for (int r = t; r < m; ++r)
            for (int c = t; c < n; ++c)
                if (d(r, c) != 0 && (pr < 0 || abs(d(r, c)) < abs(d(pr, pc)))) { pr = r; pc = c; }
        if (pr < 0) break;
        row_swap(t, pr);
        col_swap(t, pc);
        bool again = true;
        while (again) {
            again = false;
            for (int r = t + 1; r < m; ++r) {
                if (d(r, t) == 0) continue;
                Int f = d(r, t) / d(t, t);
                row_op(r, t, f);
                if (d(r, t) != 0) { row_swap(t, r); again = true; }
            }
            for (int c = t + 1; c < n; ++c) {
                if (d(t, c) == 0) continue;
                Int f = d(t, c) / d(t, t);
                col_op(c, t, f);
                if (d(t, c) != 0) { col_swap(t, c); again = true; }
            }
        }
        // divisibility: fold any non-divisible entry into the pivot position
        bool fixed = true;
        for (int r = t + 1; r < m && fixed; ++r)
            for (int c = t + 1; c < n && fixed; ++c)
                if (d(r, c) % d(t, t) != 0) {
                    row_op(t, r, Int(-1)); // add row r to row t, restart elimination
                    fixed = false;
                }
        if (!fixed) continue;
        if (d(t, t) < 0) {
            for (int c = 0; c < n; ++c) d(t, c) = -d(t, c);
            for (int c = 0; c < m; ++c) res.u(t, c) = -res.u(t, c);
        }
        ++t;
    }
    return res;
}

bool is_unimodular(const IntMatrix& a) {
    if (a.rows() != a.cols()) return false;
    Int d = det_bareiss(a);
    return d == 1 || d == -1;
}

} // namespace tropitor
