#include "schubert/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

namespace {

using Series = std::vector<Polynomial>;  // coefficient of t^r at index r

Series series_one(const VariableSpace& sp, int R) {
    Series s(R + 1, Polynomial(sp));
    s[0] = Polynomial::one(sp);
    return s;
}

void series_mul_factor(Series& s, const Series& f) {
    const int R = static_cast<int>(s.size()) - 1;
    Series out(R + 1, Polynomial(s[0].space()));
    for (int i = 0; i <= R; ++i) {
        if (s[i].is_zero()) continue;
        for (int j = 0; j + i <= R && j < static_cast<int>(f.size()); ++j)
            out[i + j] += s[i] * f[j];
    }
    s = std::move(out);
}

// Π over the block of (1 + sign·v t).
Series linear_product(const VariableSpace& sp, Axis a, int lo, int hi, int sign, int R) {
    Series s = series_one(sp, R);
    for (int i = lo; i <= hi; ++i) {
        Series f = {Polynomial::one(sp),
                    Polynomial::variable(sp, a, i).scaled(Dyadic(sign))};
        series_mul_factor(s, f);
    }
    return s;
}

Series series_inverse(const Series& a, int R) {
    Series b(R + 1, Polynomial(a[0].space()));
    b[0] = Polynomial::one(a[0].space());
    for (int n = 1; n <= R; ++n) {
        Polynomial acc(a[0].space());
        for (int i = 1; i <= n && i < static_cast<int>(a.size()); ++i)
            acc += a[i] * b[n - i];
        b[n] = -acc;
    }
    return b;
}

Series q_series(const VariableSpace& sp, int R) {
    Series s = series_one(sp, R);
    for (int i = 1; i <= sp.nx; ++i) {
        // (1 + x t)/(1 − x t) = 1 + 2Σ_{m≥1} x^m t^m
        Series f(R + 1, Polynomial(sp));
        f[0] = Polynomial::one(sp);
        Polynomial pw = Polynomial::constant(sp, Dyadic(2));
        for (int m = 1; m <= R; ++m) {
            pw = pw.times_variable(Axis::X, i, Dyadic(1));
            f[m] = pw;
        }
        series_mul_factor(s, f);
    }
    return s;
}

Series h_series(const VariableSpace& sp, Axis pa, int plo, int phi, Axis na,
                int nlo, int nhi, int R) {
    Series num = linear_product(sp, na, nlo, nhi, -1, R);
    Series den = linear_product(sp, pa, plo, phi, -1, R);
    Series s = series_inverse(den, R);
    series_mul_factor(s, num);
    return s;
}

Polynomial alternating_sum(const RaisingExpansion& ex,
                           const std::function<Polynomial(int)>& term,
                           const VariableSpace& sp) {
    Polynomial out(sp);
    for (const auto& [coeff, alpha] : ex.terms) {
        Polynomial prod = Polynomial::one(sp);
        for (int a : alpha) {
            if (a == 0) continue;
            prod = prod * term(a);
            if (prod.is_zero()) break;
        }
        out += prod.scaled(Dyadic(coeff));
    }
    return out;
}

} // namespace

Polynomial elementary(const VariableSpace& sp, Axis a, int lo, int hi, int r,
                      bool negated) {
    if (r < 0) return Polynomial(sp);
    if (r == 0) return Polynomial::one(sp);
    if (r > hi - lo + 1) return Polynomial(sp);  // more rows than variables
    Series s = linear_product(sp, a, lo, hi, negated ? -1 : 1, r);
    return s[r];
}

Polynomial complete_h(const VariableSpace& sp, Axis pa, int plo, int phi,
                      Axis na, int nlo, int nhi, int r) {
    if (r < 0) return Polynomial(sp);
    if (r == 0) return Polynomial::one(sp);
    return h_series(sp, pa, plo, phi, na, nlo, nhi, r)[r];
}

Polynomial q_poly(const VariableSpace& sp, int r) {
    if (r < 0) return Polynomial(sp);
    if (r == 0) return Polynomial::one(sp);
    return q_series(sp, r)[r];
}

Polynomial vartheta(const VariableSpace& sp, int k, int r) {
    if (sp.ny < k) throw std::invalid_argument("vartheta needs k y-variables");
    if (r < 0) return Polynomial(sp);
    if (r == 0) return Polynomial::one(sp);
    Series q = q_series(sp, r);
    Polynomial out(sp);
    for (int i = 0; i <= std::min(k, r); ++i)
        out += q[r - i] * elementary(sp, Axis::Y, 1, k, i);
    return out;
}

Polynomial schur_super(const Partition& lambda, const VariableSpace& sp,
                       Axis pa, int plo, int phi, Axis na, int nlo, int nhi) {
    if (lambda.empty()) return Polynomial::one(sp);
    // R^0 = Π(1−R_ij): a k-strict shape with k past any pair sum.
    RaisingExpansion ex = expand_raising(TypedPartition(lambda, lambda.weight(), 0));
    const int R = lambda.weight();
    Series h = h_series(sp, pa, plo, phi, na, nlo, nhi, R);
    return alternating_sum(
        ex, [&](int r) { return h[r]; }, sp);
}

Polynomial schur_block(const Partition& lambda, const VariableSpace& sp, Axis a,
                       int lo, int hi) {
    if (lambda.length() > hi - lo + 1) return Polynomial(sp);
    return schur_super(lambda, sp, a, lo, hi, a, 1, 0);
}

Polynomial schur_neg(const Partition& lambda, const VariableSpace& sp, Axis a,
                     int lo, int hi) {
    return schur_super(lambda, sp, a, 1, 0, a, lo, hi);
}

Polynomial theta(const TypedPartition& lambda, const VariableSpace& sp) {
    if (sp.ny != lambda.k)
        throw std::invalid_argument("theta needs exactly k y-variables");
    if (lambda.p.empty()) return Polynomial::one(sp);
    RaisingExpansion ex = expand_raising(lambda);
    const int R = lambda.p.weight();
    Series q = q_series(sp, R);
    std::vector<Polynomial> vt(R + 1, Polynomial(sp));
    for (int r = 1; r <= R; ++r) {
        for (int i = 0; i <= std::min(lambda.k, r); ++i)
            vt[r] += q[r - i] * elementary(sp, Axis::Y, 1, lambda.k, i);
    }
    return alternating_sum(
        ex, [&](int r) { return vt[r]; }, sp);
}

Polynomial schur_q(const Partition& lambda, const VariableSpace& sp) {
    VariableSpace xonly{sp.nx, 0, 0};
    return theta(TypedPartition(lambda, 0, 0), xonly).with_space(sp);
}

Polynomial schur_p(const Partition& lambda, const VariableSpace& sp) {
    return schur_q(lambda, sp).scaled(Dyadic::half_power(lambda.length()));
}

bool ShapeOrder::operator()(const TypedPartition& a, const TypedPartition& b) const {
    int wa = a.p.weight(), wb = b.p.weight();
    if (wa != wb) return wa > wb;
    if (a.p != b.p) return b.p < a.p;
    if (a.k != b.k) return a.k < b.k;
    return a.type < b.type;
}

Dyadic BasisExpansion::coeff(const TypedPartition& tp) const {
    auto it = terms.find(tp);
    return it == terms.end() ? Dyadic(0) : it->second;
}

std::string BasisExpansion::str(const std::string& symbol) const {
    if (status == ExpandStatus::NeedsMoreVariables) return "<needs more variables>";
    if (status == ExpandStatus::NotInSpan) return "<not in span>";
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [tp, c] : terms) {
        if (!out.empty()) out += " + ";
        if (!(c == Dyadic(1))) out += c.str() + "*";
        out += symbol + "_" + tp.str();
    }
    return out;
}

} // namespace schubert
