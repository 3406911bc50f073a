#include "schubert/polynomial.hpp"

#include <stdexcept>

namespace schubert {

int VariableSpace::position(Axis a, int index) const {
    if (!contains(a, index))
        throw std::out_of_range("variable outside space: " + variable_name(a, index));
    switch (a) {
        case Axis::X: return index - 1;
        case Axis::Y: return nx + index - 1;
        default: return nx + ny + index - 1;
    }
}

std::string variable_name(Axis a, int index) {
    const char c = a == Axis::X ? 'x' : (a == Axis::Y ? 'y' : 'z');
    return c + std::to_string(index);
}

void Monomial::bump(int pos, int by) {
    int v = e_[pos] + by;
    if (v > 255) throw std::overflow_error("monomial exponent exceeds 255");
    e_[pos] = static_cast<uint8_t>(v);
    deg_ += by;
}

Polynomial Polynomial::constant(VariableSpace s, Dyadic c) {
    Polynomial p(s);
    if (!c.is_zero()) p.terms_.emplace(Monomial(s.total()), std::move(c));
    return p;
}

Polynomial Polynomial::variable(VariableSpace s, Axis a, int index) {
    Polynomial p(s);
    Monomial m(s.total());
    m.bump(s.position(a, index));
    p.terms_.emplace(std::move(m), Dyadic(1));
    return p;
}

void Polynomial::add_term(const Monomial& m, const Dyadic& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::with_space(const VariableSpace& s) const {
    if (s == space_) return *this;
    if (!s.covers(space_))
        throw std::invalid_argument("with_space: target space does not cover source");
    Polynomial out(s);
    for (const auto& [m, c] : terms_) {
        Monomial n(s.total());
        for (int i = 1; i <= space_.nx; ++i)
            if (int e = m.exp_at(space_.position(Axis::X, i)))
                n.bump(s.position(Axis::X, i), e);
        for (int j = 1; j <= space_.ny; ++j)
            if (int e = m.exp_at(space_.position(Axis::Y, j)))
                n.bump(s.position(Axis::Y, j), e);
        for (int j = 1; j <= space_.nz; ++j)
            if (int e = m.exp_at(space_.position(Axis::Z, j)))
                n.bump(s.position(Axis::Z, j), e);
        out.terms_.emplace(std::move(n), c);
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    VariableSpace j = VariableSpace::join(space_, o.space_);
    if (!(space_ == j)) *this = with_space(j);
    if (o.space_ == j) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
    } else {
        Polynomial rhs = o.with_space(j);
        for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    }
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out = *this;
    out += o;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Polynomial out(space_);
    for (const auto& [m, c] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    VariableSpace j = VariableSpace::join(space_, o.space_);
    const Polynomial& a = space_ == j ? *this : with_space(j);
    Polynomial tmp;
    const Polynomial* b = &o;
    if (!(o.space_ == j)) {
        tmp = o.with_space(j);
        b = &tmp;
    }
    Polynomial out(j);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b->terms_) {
            Monomial m = ma;
            for (int p = 0; p < mb.size(); ++p)
                if (int e = mb.exp_at(p)) m.bump(p, e);
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::scaled(const Dyadic& c) const {
    Polynomial out(space_);
    if (c.is_zero()) return out;
    for (const auto& [m, k] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), m, k * c);
    return out;
}

Polynomial Polynomial::times_variable(Axis a, int index, const Dyadic& scale) const {
    Polynomial out(space_);
    if (scale.is_zero()) return out;
    int pos = space_.position(a, index);
    for (const auto& [m, c] : terms_) {
        Monomial n = m;
        n.bump(pos);
        out.terms_.emplace_hint(out.terms_.end(), std::move(n), c * scale);
    }
    return out;
}

Polynomial Polynomial::negate_variables(Axis a, int lo, int hi) const {
    Polynomial out(space_);
    if (lo > hi) return *this;
    int p0 = space_.position(a, lo), p1 = space_.position(a, hi);
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (int p = p0; p <= p1; ++p) s += m.exp_at(p);
        out.terms_.emplace_hint(out.terms_.end(), m, (s & 1) ? -c : c);
    }
    return out;
}

Polynomial Polynomial::restricted(int r, int s) const {
    if (r > s) throw std::invalid_argument("restrict: r > s");
    std::vector<int> killed;
    if (!(r <= 0 && 0 <= s))
        for (int i = 1; i <= space_.nx; ++i) killed.push_back(space_.position(Axis::X, i));
    for (int j = 1; j <= space_.ny; ++j)
        if (j < r || j > s) killed.push_back(space_.position(Axis::Y, j));
    for (int j = 1; j <= space_.nz; ++j)
        if (-j < r || -j > s) killed.push_back(space_.position(Axis::Z, j));
    Polynomial out(space_);
    for (const auto& [m, c] : terms_) {
        bool keep = true;
        for (int p : killed)
            if (m.exp_at(p)) { keep = false; break; }
        if (keep) out.terms_.emplace_hint(out.terms_.end(), m, c);
    }
    return out;
}

Dyadic Polynomial::coefficient_of(const Monomial& m) const {
    if (m.size() != space_.total())
        throw std::invalid_argument("coefficient_of: monomial from a different space");
    auto it = terms_.find(m);
    return it == terms_.end() ? Dyadic(0) : it->second;
}

Dyadic Polynomial::coefficient(const std::vector<VarPow>& vars) const {
    Monomial m(space_.total());
    for (const auto& v : vars) {
        if (v.exp == 0) continue;
        if (!space_.contains(v.axis, v.index)) return Dyadic(0);
        m.bump(space_.position(v.axis, v.index), v.exp);
    }
    return coefficient_of(m);
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.degree();
}

bool Polynomial::is_homogeneous(int d) const {
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (space_ == o.space_) return terms_ == o.terms_;
    VariableSpace j = VariableSpace::join(space_, o.space_);
    return with_space(j).terms_ == o.with_space(j).terms_;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Dyadic& c = it->second;
        bool neg = c.numerator() < 0;
        Dyadic mag = neg ? -c : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        const Monomial& m = it->first;
        for (int p = 0; p < m.size(); ++p) {
            if (int e = m.exp_at(p)) {
                if (!mono.empty()) mono += "*";
                Axis a = p < space_.nx ? Axis::X : (p < space_.nx + space_.ny ? Axis::Y : Axis::Z);
                int base = a == Axis::X ? 0 : (a == Axis::Y ? space_.nx : space_.nx + space_.ny);
                mono += variable_name(a, p - base + 1);
                if (e > 1) mono += "^" + std::to_string(e);
            }
        }
        if (mono.empty()) {
            out += mag.str();
        } else {
            if (!(mag == Dyadic(1))) out += mag.str() + "*";
            out += mono;
        }
    }
    return out;
}

} // namespace schubert
