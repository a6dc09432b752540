#include "tropitor/quadform.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tropitor {

namespace {

Rat eval_quadratic(const RatMatrix& m, const RatVec& v) {
    Rat s = 0;
    for (int i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (int j = 0; j < m.cols(); ++j) s += m(i, j) * v[i] * v[j];
    }
    return s;
}

} // namespace

QuadForm::QuadForm(RatMatrix m) : m_(std::move(m)) {
    int g = m_.rows();
    if (m_.cols() != g) throw StructuralError("quadratic form matrix must be square");
    if (g > 12) throw CapacityError("quadratic forms capped at dimension 12");
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j)
            if (m_(i, j) != m_(j, i)) throw StructuralError("quadratic form matrix must be symmetric");
    // PSD certificate: every principal minor is non-negative
    for (uint32_t s = 1; s < (1u << g); ++s) {
        std::vector<int> idx;
        for (int i = 0; i < g; ++i)
            if (s & (1u << i)) idx.push_back(i);
        if (det_rational(m_.submatrix(idx, idx)) < 0)
            throw StructuralError("matrix is not positive semi-definite");
    }
}

Rat QuadForm::operator()(const IntVec& v) const {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return eval_quadratic(m_, r);
}

Rat QuadForm::operator()(const RatVec& v) const { return eval_quadratic(m_, v); }

Rat QuadForm::pairing(const IntVec& a, const IntVec& b) const {
    Rat s = 0;
    for (int i = 0; i < dim(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < dim(); ++j) s += m_(i, j) * Rat(a[i]) * Rat(b[j]);
    }
    return s;
}

int QuadForm::rank() const { return tropitor::rank(m_); }

RatMatrix QuadForm::null_space_basis() const { return kernel_basis(m_); }

// ---------------------------------------------------------------------------

Rat LengthAssignment::at(const std::string& edge) const {
    auto it = lengths.find(edge);
    if (it == lengths.end()) throw InputError("no length for edge '" + edge + "'");
    return it->second;
}

void LengthAssignment::validate() const {
    for (auto& [name, v] : lengths) {
        if (v < 0 || (!allow_zero && v == 0))
            throw StructuralError("length of edge '" + name + "' must be positive");
    }
}

// ---------------------------------------------------------------------------

QuadForm SymbolicQuadForm::evaluate(const LengthAssignment& l) const {
    l.validate();
    RatMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (size_t e = 0; e < edge_names.size(); ++e)
                if (coeff[i][j][e] != 0) m(i, j) += Rat(coeff[i][j][e]) * l.at(edge_names[e]);
    return QuadForm(std::move(m));
}

std::string SymbolicQuadForm::entry_string(int i, int j, const Int& divisor) const {
    const IntVec& c = coeff[i][j];
    Int g = divisor;
    for (const Int& x : c) g = boost::multiprecision::gcd(g, x);
    if (g == 0) return "0";
    Int d = divisor / g;
    std::ostringstream num;
    int terms = 0;
    for (size_t e = 0; e < c.size(); ++e) {
        Int k = c[e] / g;
        if (k == 0) continue;
        if (k > 0 && terms) num << "+";
        if (k == -1) num << "-";
        else if (k != 1) num << k.str() << "*";
        num << edge_names[e];
        ++terms;
    }
    if (terms == 0) return "0";
    if (d == 1 || d == -1) return (d == -1 ? "-(" + num.str() + ")" : num.str());
    if (terms == 1) return num.str() + "/" + d.str();
    return "(" + num.str() + ")/" + d.str();
}

SymbolicQuadForm jacobian_symbolic(const WeightedGraph& g, const Orientation& o,
                                   const IntegerChainBasis& b) {
    if (!g.is_stable()) throw StructuralError("jacobian expects a stable curve");
    if (!is_h1_lattice_basis(g, o, b))
        throw StructuralError("basis does not match the graph's first homology lattice");
    int betti = g.first_betti();
    int dim = betti + g.total_weight();
    SymbolicQuadForm out;
    out.dim = dim;
    out.edge_names = g.edge_names();
    out.coeff.assign(dim, std::vector<IntVec>(dim, IntVec(g.num_edges(), Int(0))));
    for (int i = 0; i < betti; ++i)
        for (int j = 0; j < betti; ++j)
            for (int e = 0; e < g.num_edges(); ++e)
                out.coeff[i][j][e] = b.vectors[i][e] * b.vectors[j][e];
    return out; // weight block stays zero
}

QuadForm jacobian(const WeightedGraph& g, const Orientation& o, const IntegerChainBasis& b,
                  const LengthAssignment& l) {
    return jacobian_symbolic(g, o, b).evaluate(l);
}

QuadForm q_from_tu(const TUMatrix& a, const RatVec& l) {
    const IntMatrix& m = a.matrix();
    if (static_cast<int>(l.size()) != m.cols())
        throw StructuralError("length vector does not match the column count");
    for (const Rat& x : l)
        if (x < 0) throw StructuralError("column lengths must be non-negative");
    int g = m.rows();
    RatMatrix q(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            for (int c = 0; c < m.cols(); ++c)
                if (m(i, c) != 0 && m(j, c) != 0) q(i, j) += Rat(m(i, c) * m(j, c)) * l[c];
    return QuadForm(std::move(q));
}

bool in_principal_cone(const QuadForm& q) {
    const RatMatrix& m = q.matrix();
    for (int i = 0; i < q.dim(); ++i) {
        Rat row_sum = 0;
        for (int j = 0; j < q.dim(); ++j) {
            if (i != j && m(i, j) >= 0) return false;
            row_sum += m(i, j);
        }
        if (row_sum <= 0) return false;
    }
    return q.dim() > 0;
}

// ---------------------------------------------------------------------------

SemidefReduction reduce_semidefinite(const QuadForm& q) {
    int g = q.dim();
    // scale to an integer matrix; kernel and unimodular transforms are shared
    Int scale = 1;
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            scale = boost::multiprecision::lcm(scale, denominator(q.matrix()(i, j)));
    IntMatrix qi(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) qi(i, j) = numerator(q.matrix()(i, j)) * (scale / denominator(q.matrix()(i, j)));
    SmithResult snf = smith_normal_form(qi);
    // columns of v at zero diagonal positions span the saturated kernel; the
    // Smith pivots sit first, so v^t q v = diag(definite, 0)
    IntMatrix h = snf.v.transpose();
    RatMatrix conj = to_rat_matrix(h) * q.matrix() * to_rat_matrix(h.transpose());
    int r = q.rank();
    std::vector<int> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    RatMatrix block = conj.submatrix(idx, idx);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            if ((i >= r || j >= r) && conj(i, j) != 0)
                throw StructuralError("semidefinite reduction failed to isolate the null space");
    SemidefReduction out{h, QuadForm(block)};
    return out;
}

std::vector<IntVec> vectors_up_to(const QuadForm& q, const Rat& bound) {
    int g = q.dim();
    if (!q.positive_definite()) throw StructuralError("vectors_up_to needs a positive definite form");
    if (bound < 0) return {};
    auto inv = inverse(q.matrix());
    std::vector<Int> width(g);
    double volume = 1;
    for (int i = 0; i < g; ++i) {
        width[i] = ceil_sqrt(bound * (*inv)(i, i));
        volume *= 2 * width[i].convert_to<double>() + 1;
    }
    if (volume > 2e7) throw CapacityError("lattice enumeration box too large");
    std::vector<IntVec> out;
    IntVec v(g);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == g) {
            bool zero = std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
            if (!zero && q(v) <= bound) out.push_back(v);
            return;
        }
        for (Int x = -width[i]; x <= width[i]; ++x) {
            v[i] = x;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

namespace {

// last successive minimum: smallest t with rank{v : Q(v) <= t} = dim
Rat last_successive_minimum(const QuadForm& q) {
    int g = q.dim();
    Rat t = q.matrix()(0, 0);
    for (int i = 1; i < g; ++i) t = std::max(t, q.matrix()(i, i));
    // the diagonal vectors e_i already span, so t works; shrink to the exact value
    std::vector<IntVec> vs = vectors_up_to(q, t);
    std::sort(vs.begin(), vs.end(), [&](const IntVec& a, const IntVec& b) { return q(a) < q(b); });
    RatMatrix span(g, 0);
    int r = 0;
    RatMatrix acc(g, static_cast<int>(vs.size()));
    int used = 0;
    for (const IntVec& v : vs) {
        for (int i = 0; i < g; ++i) acc(i, used) = Rat(v[i]);
        ++used;
        std::vector<int> rows(g), cols(used);
        std::iota(rows.begin(), rows.end(), 0);
        std::iota(cols.begin(), cols.end(), 0);
        int nr = rank(acc.submatrix(rows, cols));
        if (nr > r) {
            r = nr;
            if (r == g) return q(v);
        }
    }
    return t;
}

} // namespace

std::vector<Rat> represented_values(const QuadForm& q) {
    SemidefReduction red = reduce_semidefinite(q);
    const QuadForm& d = red.definite;
    if (d.dim() == 0) return {};
    Rat threshold = 2 * last_successive_minimum(d);
    std::vector<Rat> vals;
    for (const IntVec& v : vectors_up_to(d, threshold)) vals.push_back(d(v));
    std::sort(vals.begin(), vals.end());
    return vals;
}

// ---------------------------------------------------------------------------
// exact GL_2(Z) decision for positive definite binary forms

namespace {

struct BinaryForm {
    Int a, b, c; // [[a,b],[b,c]]
};

Int floor_div(const Int& a, const Int& b) { // b > 0
    Int q = a / b, r = a % b;
    if (r != 0 && a < 0) --q;
    return q;
}

// Gauss-Lagrange reduction, tracking h with h q h^t = reduced.
// Normal form: 2|b| <= a <= c, with b >= 0 when a == c or 2b == -a.
std::pair<BinaryForm, IntMatrix> reduce_binary(BinaryForm f) {
    IntMatrix h = IntMatrix::identity(2);
    auto apply = [&](const IntMatrix& t) { h = t * h; };
    while (true) {
        if (f.c < f.a) {
            IntMatrix t{{Int(0), Int(1)}, {Int(-1), Int(0)}}; // (x,y) -> (y,-x)
            f = {f.c, -f.b, f.a};
            apply(t);
            continue;
        }
        if (2 * abs(f.b) > f.a) {
            Int k = floor_div(2 * f.b + f.a, 2 * f.a); // nearest integer to b/a
            IntMatrix t{{Int(1), Int(0)}, {-k, Int(1)}};
            f = {f.a, f.b - k * f.a, f.c - 2 * k * f.b + k * k * f.a};
            apply(t);
            continue;
        }
        if (f.a == f.c && f.b < 0) {
            IntMatrix t{{Int(0), Int(1)}, {Int(-1), Int(0)}};
            f = {f.c, -f.b, f.a};
            apply(t);
            continue;
        }
        if (2 * f.b == -f.a) {
            IntMatrix t{{Int(1), Int(0)}, {Int(1), Int(1)}};
            f = {f.a, f.b + f.a, f.c + 2 * f.b + f.a};
            apply(t);
            continue;
        }
        break;
    }
    return {f, h};
}

std::optional<IntMatrix> decide_binary(const RatMatrix& q1, const RatMatrix& q2) {
    // common scaling keeps equivalence intact
    Int scale = 1;
    for (const RatMatrix* q : {&q1, &q2})
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) scale = boost::multiprecision::lcm(scale, denominator((*q)(i, j)));
    auto lift = [&](const RatMatrix& q) {
        auto v = [&](int i, int j) { return numerator(q(i, j)) * (scale / denominator(q(i, j))); };
        return BinaryForm{v(0, 0), v(0, 1), v(1, 1)};
    };
    auto red1 = reduce_binary(lift(q1));
    auto red2 = reduce_binary(lift(q2));
    auto same = [](const BinaryForm& x, const BinaryForm& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    };
    if (same(red1.first, red2.first)) {
        // h2 q2 h2^t = h1 q1 h1^t  =>  (h2^{-1} h1) q1 (..)^t = q2
        RatMatrix inv = *inverse(to_rat_matrix(red2.second));
        return to_int_matrix(inv * to_rat_matrix(red1.second));
    }
    // improper class: conjugate q2 by diag(1,-1) and retry
    IntMatrix mirror{{Int(1), Int(0)}, {Int(0), Int(-1)}};
    RatMatrix q2m = to_rat_matrix(mirror) * q2 * to_rat_matrix(mirror);
    auto red2m = reduce_binary(lift(q2m));
    if (same(red1.first, red2m.first)) {
        // (h2m mirror) q2 (h2m mirror)^t = reduced  =>  invert through both
        RatMatrix inv = *inverse(to_rat_matrix(red2m.second) * to_rat_matrix(mirror));
        return to_int_matrix(inv * to_rat_matrix(red1.second));
    }
    return std::nullopt;
}

} // namespace

// ---------------------------------------------------------------------------

EquivResult arith_equiv_bruteforce(const QuadForm& q1, const QuadForm& q2, int bound) {
    if (q1.dim() != q2.dim()) throw StructuralError("forms must have equal dimension");
    int g = q1.dim();
    EquivResult res;

    if (g == 0) {
        res.certainty = EquivCertainty::Equivalent;
        res.witness = IntMatrix(0, 0);
        res.reason = "empty forms";
        return res;
    }
    if (q1.rank() != q2.rank()) {
        res.certainty = EquivCertainty::Inequivalent;
        res.reason = "ranks differ: " + std::to_string(q1.rank()) + " vs " + std::to_string(q2.rank());
        return res;
    }

    // bounded witness search: rows of h picked among bounded vectors with the
    // right diagonal value, pairwise pairings enforced, |det| = 1 at the end
    {
        std::vector<IntVec> box;
        IntVec v(g, Int(0));
        auto gen = [&](auto&& self, int i) -> void {
            if (i == g) { box.push_back(v); return; }
            for (int x = -bound; x <= bound; ++x) {
                v[i] = x;
                self(self, i + 1);
            }
        };
        if (std::pow(2.0 * bound + 1, g) <= 2e7) {
            gen(gen, 0);
            std::vector<std::vector<const IntVec*>> candidates(g);
            for (int j = 0; j < g; ++j) {
                Rat want = q2.matrix()(j, j);
                for (const IntVec& r : box)
                    if (q1(r) == want) candidates[j].push_back(&r);
            }
            std::vector<const IntVec*> rows(g, nullptr);
            auto rec = [&](auto&& self, int j) -> bool {
                if (j == g) {
                    IntMatrix h(g, g);
                    for (int r = 0; r < g; ++r)
                        for (int c = 0; c < g; ++c) h(r, c) = (*rows[r])[c];
                    return is_unimodular(h);
                }
                for (const IntVec* cand : candidates[j]) {
                    bool ok = true;
                    for (int i = 0; i < j && ok; ++i)
                        ok = q1.pairing(*rows[i], *cand) == q2.matrix()(i, j);
                    if (!ok) continue;
                    rows[j] = cand;
                    if (self(self, j + 1)) return true;
                    rows[j] = nullptr;
                }
                return false;
            };
            if (rec(rec, 0)) {
                IntMatrix h(g, g);
                for (int r = 0; r < g; ++r)
                    for (int c = 0; c < g; ++c) h(r, c) = (*rows[r])[c];
                res.certainty = EquivCertainty::Equivalent;
                res.witness = h;
                res.reason = "witness found by bounded search";
                return res;
            }
        }
    }

    // invariants of the definite parts
    SemidefReduction r1 = reduce_semidefinite(q1), r2 = reduce_semidefinite(q2);
    Rat det1 = det_rational(r1.definite.matrix());
    Rat det2 = det_rational(r2.definite.matrix());
    if (det1 != det2) {
        res.certainty = EquivCertainty::Inequivalent;
        res.reason = "determinants of definite parts differ: " + rat_str(det1) + " vs " + rat_str(det2);
        return res;
    }
    if (represented_values(q1) != represented_values(q2)) {
        res.certainty = EquivCertainty::Inequivalent;
        res.reason = "represented-value multisets differ";
        return res;
    }

    int r = r1.definite.dim();
    if (r <= 2) {
        // exact decision in small rank; assemble a full witness on success
        std::optional<IntMatrix> hd;
        if (r == 0) hd = IntMatrix(0, 0);
        else if (r == 1) {
            if (r1.definite.matrix()(0, 0) == r2.definite.matrix()(0, 0)) hd = IntMatrix::identity(1);
        } else {
            hd = decide_binary(r1.definite.matrix(), r2.definite.matrix());
        }
        if (!hd) {
            res.certainty = EquivCertainty::Inequivalent;
            res.reason = "definite parts are in different reduction classes";
            return res;
        }
        // h = h2^{-1} diag(hd, I) h1 maps q1 to q2
        IntMatrix block = IntMatrix::identity(g);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) block(i, j) = (*hd)(i, j);
        RatMatrix h2inv = *inverse(to_rat_matrix(r2.h));
        IntMatrix h = to_int_matrix(h2inv * to_rat_matrix(block) * to_rat_matrix(r1.h));
        res.certainty = EquivCertainty::Equivalent;
        res.witness = h;
        res.reason = "definite parts share a reduction class";
        return res;
    }

    res.certainty = EquivCertainty::Undetermined;
    res.reason = "no witness within bound " + std::to_string(bound) + "; invariants agree";
    return res;
}

} // namespace tropitor
