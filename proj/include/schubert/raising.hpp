#pragma once
// Expansion of the raising-operator product R^λ into a finite signed
// combination of exponent sequences.  Per pair i < j the factor is (1 − R_ij),
// multiplied by (1 + R_ij)^{−1} when λ_i + λ_j > 2k + j − i.

#include <vector>

#include "schubert/partitions.hpp"

namespace schubert {

struct RaisingTerm {
    long long coeff;
    std::vector<int> alpha;  // nonnegative, sorted decreasingly, padded to ℓ(λ)
};

struct RaisingExpansion {
    int k = 0;
    TypedPartition lambda;
    std::vector<RaisingTerm> terms;  // duplicate-free, lex-descending sequences
};

// Exact and finite: terms whose final sequence would go negative are pruned
// at generation time (u_r = 0 for r < 0).  The type tag plays no role here.
RaisingExpansion expand_raising(const TypedPartition& lambda);

} // namespace schubert
