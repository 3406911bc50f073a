#pragma once
// Symmetric functions of the x-alphabet kept in complete-homogeneous
// coordinates, with coefficients that are polynomials in a y-block.
//
// Purpose: theta polynomials at large degree are far too dense to expand in
// monomials, but identities between symmetric expressions can be certified on
// one representative monomial per orbit (the "dominant" terms, whose
// x-exponents are weakly decreasing).  So we multiply in h-coordinates and
// convert once at the end.

#include <map>
#include <vector>

#include "schubert/partitions.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

// Σ_μ c_μ h_μ(X) with c_μ a polynomial in y (and h_μ = Π h_{μ_i}).
struct SymHPoly {
    std::map<Partition, Polynomial> c;

    bool is_zero() const { return c.empty(); }
    void add(const Partition& mu, const Polynomial& coeff);
    void add_scaled(const SymHPoly& o, const Dyadic& scale);
    SymHPoly times(const SymHPoly& o) const;  // h_μ · h_ν = h_{μ∪ν}

    // Dense evaluation for small cross-checks.
    Polynomial to_polynomial(const VariableSpace& sp) const;
};

// q_r = Σ_i e_i h_{r−i} in h-coordinates (cached; constant coefficients).
const SymHPoly& q_h(int r);

// ϑ_r(X; y_1..y_k) = Σ_{i≤min(k,r)} q_{r−i}(X) e_i(y): coefficients live in
// the y-space {0,k,0} (cached per (r,k)).
const SymHPoly& vartheta_h(int r, int k);

// Θ_λ(X; y_1..y_k) for a k-strict λ, in h-coordinates (cached; the type of
// the argument is ignored — only (k, λ) matter).
const SymHPoly& theta_h(const TypedPartition& tp);

// Number of nonnegative integer matrices with row sums μ and column sums ν;
// zero when |μ| ≠ |ν|.  This is the h→m transition: h_μ = Σ_ν K_{μν} m_ν.
BigInt matrix_count(const Partition& mu, const Partition& nu);

// Image of f under h→m keeping one term x^ν (ν weakly decreasing) per orbit:
// Σ_{μ,ν} c_μ K_{μν} x^ν over ν with ℓ(ν) ≤ sp.nx.  This equals the dominant
// part of the full polynomial whenever sp.nx ≥ |μ| for every shape present.
Polynomial h_to_dominant(const SymHPoly& f, const VariableSpace& sp);

// Terms of p whose x-exponents weakly decrease in the variable index.
Polynomial dominant_part(const Polynomial& p);

} // namespace schubert
