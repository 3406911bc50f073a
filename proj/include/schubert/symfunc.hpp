#pragma once
// Concrete symmetric polynomials (e, h, q, ϑ, Schur, theta families) and the
// exact basis-expansion solver used as an oracle by the higher modules.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "schubert/partitions.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/raising.hpp"

namespace schubert {

// e_r of the variables v_lo..v_hi on one axis (optionally of −v instead).
Polynomial elementary(const VariableSpace& sp, Axis a, int lo, int hi, int r,
                      bool negated = false);

// h_r(P/N) where Σ_r h_r t^r = Π_{v∈N}(1 − v t) / Π_{v∈P}(1 − v t);
// either block may be empty.
Polynomial complete_h(const VariableSpace& sp, Axis pa, int plo, int phi,
                      Axis na, int nlo, int nhi, int r);

// Coefficients of Π_i (1+x_i t)/(1−x_i t), i.e. q_r(X).
Polynomial q_poly(const VariableSpace& sp, int r);

// ϑ_r(X; y_1..y_k) = Σ_i q_{r−i}(X) e_i(y_1..y_k).
Polynomial vartheta(const VariableSpace& sp, int k, int r);

// Supersymmetric Schur s_λ(P/N) via the h_r(P/N) Jacobi–Trudi expansion.
Polynomial schur_super(const Partition& lambda, const VariableSpace& sp,
                       Axis pa, int plo, int phi, Axis na, int nlo, int nhi);

// s_λ(v_lo..v_hi): vanishes when ℓ(λ) exceeds the block size.
Polynomial schur_block(const Partition& lambda, const VariableSpace& sp,
                       Axis a, int lo, int hi);

// s_λ(0 / block) = (−1)^{|λ|} s_{λ'}(block).
Polynomial schur_neg(const Partition& lambda, const VariableSpace& sp,
                     Axis a, int lo, int hi);

// Θ_λ(X; y_1..y_k) = R^λ ϑ_λ; requires sp.ny == λ.k.  At k = 0 this is Q_λ.
Polynomial theta(const TypedPartition& lambda, const VariableSpace& sp);
Polynomial schur_q(const Partition& lambda, const VariableSpace& sp);
Polynomial schur_p(const Partition& lambda, const VariableSpace& sp);  // 2^{−ℓ(λ)} Q_λ

// Eta is a formal basis tag only: eta polynomials have no polynomial model
// here, so expand_in_basis rejects it.  Coefficient maps over eta shapes are
// produced combinatorially (see transition.hpp).
enum class BasisKind { SchurS, SchurQ, SchurP, Theta, Eta };

enum class ExpandStatus { Ok, NeedsMoreVariables, NotInSpan };

// Weight descending, then lexicographically descending, then by type.
struct ShapeOrder {
    bool operator()(const TypedPartition& a, const TypedPartition& b) const;
};

struct BasisExpansion {
    BasisKind basis = BasisKind::SchurS;
    int k = 0;  // theta basis only
    ExpandStatus status = ExpandStatus::Ok;
    // On NotInSpan: true when a rational combination exists but an
    // integral one (as the basis requires) does not.
    bool rational_solution_exists = false;
    std::map<TypedPartition, Dyadic, ShapeOrder> terms;

    bool ok() const { return status == ExpandStatus::Ok; }
    Dyadic coeff(const TypedPartition& tp) const;
    std::string str(const std::string& symbol) const;
};

// Expand homogeneous p of the given degree over the basis shapes of that
// weight.  Basis polynomials are instantiated in p's variable space (schur-s
// over the y-axis when p involves no x-variables, else over x; q/p/theta over
// x with k y-variables).  The solver asserts the instantiated basis has full
// column rank, so an Ok answer is an exact certified expansion.
BasisExpansion expand_in_basis(const Polynomial& p, BasisKind basis, int degree,
                               int k = 0);

// Generator-driven version: evaluates gen(nx) with nx = degree and retries
// once with nx+2 if the instantiated basis is rank-deficient.
BasisExpansion expand_generated(const std::function<Polynomial(int)>& gen,
                                int degree, BasisKind basis, int k = 0);

// Membership of p in the integer (or dyadic) span of the given polynomials;
// used where an expansion may legitimately fail to exist.
struct SpanResult {
    ExpandStatus status = ExpandStatus::Ok;
    bool rational_solution_exists = false;
    std::vector<Dyadic> coeffs;
};
SpanResult expand_in_span(const Polynomial& p, const std::vector<Polynomial>& gens,
                          bool integral_required);

} // namespace schubert
