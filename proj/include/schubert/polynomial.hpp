#pragma once
// Sparse multivariate polynomials over Z[1/2] in three alphabets X, Y, Z.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "schubert/dyadic.hpp"

namespace schubert {

enum class Axis : uint8_t { X = 0, Y = 1, Z = 2 };

// How many variables each alphabet carries.  Variables are 1-indexed within
// their axis; dense storage positions run x-block, y-block, z-block.
struct VariableSpace {
    int nx = 0;
    int ny = 0;
    int nz = 0;

    int total() const { return nx + ny + nz; }
    int count(Axis a) const { return a == Axis::X ? nx : (a == Axis::Y ? ny : nz); }
    bool contains(Axis a, int index) const { return index >= 1 && index <= count(a); }
    int position(Axis a, int index) const;
    bool covers(const VariableSpace& o) const {
        return nx >= o.nx && ny >= o.ny && nz >= o.nz;
    }
    static VariableSpace join(const VariableSpace& a, const VariableSpace& b) {
        return {a.nx > b.nx ? a.nx : b.nx, a.ny > b.ny ? a.ny : b.ny,
                a.nz > b.nz ? a.nz : b.nz};
    }
    bool operator==(const VariableSpace&) const = default;
};

std::string variable_name(Axis a, int index);

// Exponent vector, dense over one VariableSpace; degree cached.
class Monomial {
public:
    Monomial() : deg_(0) {}
    explicit Monomial(int nvars) : e_(nvars, 0), deg_(0) {}

    int degree() const { return deg_; }
    int size() const { return static_cast<int>(e_.size()); }
    int exp_at(int pos) const { return e_[pos]; }
    const std::vector<uint8_t>& exps() const { return e_; }
    bool is_one() const { return deg_ == 0; }
    void bump(int pos, int by = 1);

    bool operator==(const Monomial& o) const { return e_ == o.e_; }

private:
    friend struct GradedLex;
    std::vector<uint8_t> e_;
    int deg_;
};

// Graded lexicographic order (axis order x < y < z, lower index first).
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.deg_ != b.deg_) return a.deg_ < b.deg_;
        return a.e_ < b.e_;
    }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Dyadic, GradedLex>;

    Polynomial() = default;
    explicit Polynomial(VariableSpace s) : space_(s) {}

    static Polynomial constant(VariableSpace s, Dyadic c);
    static Polynomial one(VariableSpace s) { return constant(s, Dyadic(1)); }
    static Polynomial variable(VariableSpace s, Axis a, int index);

    const VariableSpace& space() const { return space_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Merges (and drops the entry if the sum cancels).
    void add_term(const Monomial& m, const Dyadic& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Dyadic& c) const;
    // p ↦ p · (scale · v) for a single variable v; preserves term order.
    Polynomial times_variable(Axis a, int index, const Dyadic& scale) const;

    // v ↦ −v for the index range [lo, hi] of one axis.
    Polynomial negate_variables(Axis a, int lo, int hi) const;
    Polynomial negate_axis(Axis a) const { return negate_variables(a, 1, space_.count(a)); }

    // P[r,s]: keep x iff 0 ∈ [r,s], y_j iff j ∈ [r,s], z_j iff −j ∈ [r,s];
    // everything else is set to zero.
    Polynomial restricted(int r, int s) const;

    // Reinterpret over a larger space (same terms, remapped positions).
    Polynomial with_space(const VariableSpace& s) const;

    Dyadic coefficient_of(const Monomial& m) const;
    struct VarPow {
        Axis axis;
        int index;
        int exp;
    };
    Dyadic coefficient(const std::vector<VarPow>& vars) const;

    int total_degree() const;  // −1 for the zero polynomial
    bool is_homogeneous(int d) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const;

private:
    VariableSpace space_;
    TermMap terms_;
};

} // namespace schubert
