#pragma once
// Length-additive factorizations indexed by descent sequences, the splitting
// coefficients they carry, and polynomial Giambelli expansions built from
// them.

#include <map>
#include <vector>

#include "schubert/partitions.hpp"
#include "schubert/polynomial.hpp"
#include "schubert/symfunc.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

// a = (a_1 < … < a_p): descent positions bounding the y-blocks
// Y_j = {y_{a_{j−1}+1}, …, y_{a_j}}.  The optional b = (0 = b_1 < … < b_q)
// plays the same role for the z-blocks of the double form.
struct DescentSequence {
    std::vector<int> a;
    std::vector<int> b;

    bool has_b() const { return !b.empty(); }
};

// Slot-by-slot shape comparison (weight descending, then lex descending,
// then type), applied lexicographically across the tuple.
struct TupleShapeOrder {
    bool operator()(const std::vector<TypedPartition>& x,
                    const std::vector<TypedPartition>& y) const;
};

// All factorizations w = u_1 ⋯ u_m with additive lengths where every slot
// except the first (single form) resp. slot q (double form, m = p+q−1) is a
// permutation fixing its block prefix: slot q+i fixes 1..a_i and, in the
// double form, slot q−j fixes 1..b_j.  Requires the descents of w to lie in
// a (and those of w⁻¹ in b when present); throws otherwise.
std::vector<std::vector<SignedPermutation>>
compatible_factorizations(const SignedPermutation& w, const DescentSequence& seq);

struct SplitExpansion {
    Family family = Family::A;
    std::vector<int> a;
    std::vector<int> b;
    // Shape tuples (λ¹, …, λ^m); the mixed slot carries k = a_1 and, for
    // family D, its type.  All other slots are plain partitions.
    std::map<std::vector<TypedPartition>, long long, TupleShapeOrder> terms;
};

// Splitting coefficients: for each compatible factorization, the product of
// the mixed-slot transition coefficients with Schur-Stanley coefficients of
// the permutation slots, accumulated per shape tuple.
SplitExpansion split_coeffs(const SignedPermutation& w, const DescentSequence& seq);

// Schur expansion coefficients of the type A Stanley function of u
// (memoized; u must be a permutation).
const std::map<Partition, long long>& schur_s_coeffs(const SignedPermutation& u);

// The polynomial the splitting computes: Σ over tuples of
//   coeff · Θ_{λ^q}(X; Y_1) · Π_{j>q} s_{λ^j}(Y_{j−q+1}) · Π_{j<q} s_{λ^j}(0/Z_{q+1−j})
// (family A: Schur factors only).  Family D is rejected — its mixed slot has
// no polynomial model here.
Polynomial giambelli_expansion(const SignedPermutation& w, const DescentSequence& seq,
                               const VariableSpace& sp);

} // namespace schubert
