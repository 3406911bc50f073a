#pragma once
// nilCoxeter-algebra evaluation of the Stanley / Schubert generating
// functions.  A stream is an ordered product of factor atoms, each binding a
// concrete (signed) variable; evaluation expands left to right over group
// elements, pruning support to reduced prefixes of the target.

#include <map>
#include <vector>

#include "schubert/polynomial.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

enum class AtomKind {
    A,       // A_i(t) = (1+t u_{n−1})⋯(1+t u_i)
    Atilde,  // Ã_i(t) = (1−t u_i)⋯(1−t u_{n−1})
    C,       // (1+t u_{n−1})⋯(1+t u_1)(1+2t u_0)(1+t u_1)⋯(1+t u_{n−1})
    D        // (1+t u_{n−1})⋯(1+t u_2)(1+t u_1)(1+t u_0)(1+t u_2)⋯(1+t u_{n−1})
};

struct Atom {
    AtomKind kind;
    int index;  // subscript of A_i / Ã_i; ignored for C and D
    Axis axis;
    int var;
    int sign;  // t is bound to sign·variable
};

struct FactorStream {
    Family family = Family::BC;
    int rank = 1;  // generator indices run strictly below this
    std::vector<Atom> atoms;
};

Atom atom_A(int index, Axis axis, int var, int sign = 1);
Atom atom_Atilde(int index, Axis axis, int var, int sign = 1);
Atom atom_C(int var);  // always x-axis
Atom atom_D(int var);

// ⟨product of the stream, target⟩.  With x_dominant set, monomials that are
// not weakly decreasing in the x-exponents are discarded at x-factor
// boundaries; exact whenever the full result is symmetric in X.
Polynomial nc_evaluate(const FactorStream& stream, const SignedPermutation& target,
                       const VariableSpace& space, bool x_dominant = false);

// Full expansion on elements of length ≤ max_len (algebra-level checks).
std::map<SignedPermutation, Polynomial> nc_expand(const FactorStream& stream,
                                                  const VariableSpace& space,
                                                  int max_len);

enum class StanleyFlavor { F, G, E };
// F: ⟨C(x_1)⋯C(x_nx), w⟩; G: ⟨A_1(y_1)⋯A_1(y_ny), w⟩; E: ⟨D(x_1)⋯, w⟩.
Polynomial stanley(const SignedPermutation& w, StanleyFlavor flavor,
                   const VariableSpace& sp, bool x_dominant = false);

// G_ω evaluated over the variables v_lo..v_hi of one axis (sign·v each).
Polynomial stanley_G_block(const SignedPermutation& w, const VariableSpace& sp,
                           Axis axis, int lo, int hi, int sign = 1);

enum class SchubertFlavor { A, C, B, D };
// A: AS_ω(Y).  C/B/D: the (double, when nz > 0) Schubert polynomials; B is
// the type C value scaled by 2^{−s(w)}.  rank 0 means the canonical rank.
Polynomial schubert_poly(const SignedPermutation& w, SchubertFlavor flavor,
                         const VariableSpace& sp, int rank = 0,
                         bool x_dominant = false);

// AS_ω with A_i bound to variable index offset+i (used for Y_{>k} factors
// and for AS(−Z) with axis Z, sign −1).
Polynomial schubert_A_shifted(const SignedPermutation& w, const VariableSpace& sp,
                              Axis axis, int offset, int sign = 1);

enum class MixedFlavor { J, I, JDouble, IDouble };
// J: ⟨C(X)A(Y), w⟩; I: ⟨D(X)A(Y), w⟩; the double versions prepend
// Ã_1(z_m)⋯Ã_1(z_1), giving Σ G_{ω^{−1}}(−Z) F_u(X) G_v(Y) over ωuv = w.
Polynomial mixed_stanley(const SignedPermutation& w, MixedFlavor flavor,
                         const VariableSpace& sp, bool x_dominant = false);

} // namespace schubert
