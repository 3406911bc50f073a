#include "schubert/raising.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace schubert {

namespace {

struct Walker {
    int len;
    int k;
    std::vector<int> lambda;       // padded to len
    std::vector<int> delta;        // net shift applied so far
    std::map<std::vector<int>, long long, std::greater<std::vector<int>>> acc;

    bool is_inversion(int i, int j) const {  // 1-based
        return lambda[i - 1] + lambda[j - 1] > 2 * k + (j - i);
    }

    void finish(long long coeff) {
        std::vector<int> alpha(len);
        for (int i = 0; i < len; ++i) alpha[i] = lambda[i] + delta[i];
        std::sort(alpha.begin(), alpha.end(), std::greater<int>());
        acc[alpha] += coeff;
    }

    // Enumerate exponents for the pairs (i, j) of column j, i descending;
    // budget keeps the final j-th entry nonnegative, which bounds the
    // otherwise infinite inverse-factor series exactly.
    void column(int j, int i, int budget, long long coeff) {
        if (j == 1) {
            finish(coeff);
            return;
        }
        if (i == 0) {
            int jn = j - 1;
            column(jn, jn - 1, lambda[jn - 1] + delta[jn - 1], coeff);
            return;
        }
        bool inv = is_inversion(i, j);
        int amax = inv ? budget : std::min(1, budget);
        for (int a = 0; a <= amax; ++a) {
            long long c = a == 0 ? 1 : (inv ? 2 : 1) * ((a & 1) ? -1LL : 1LL);
            delta[i - 1] += a;
            delta[j - 1] -= a;
            column(j, i - 1, budget - a, coeff * c);
            delta[i - 1] -= a;
            delta[j - 1] += a;
        }
    }
};

} // namespace

RaisingExpansion expand_raising(const TypedPartition& tp) {
    if (!tp.p.is_k_strict(tp.k))
        throw std::invalid_argument("shape is not k-strict: " + tp.str());
    Walker walk;
    walk.len = tp.p.length();
    walk.k = tp.k;
    walk.lambda.resize(walk.len);
    for (int i = 1; i <= walk.len; ++i) walk.lambda[i - 1] = tp.p.part(i);
    walk.delta.assign(walk.len, 0);

    if (walk.len == 0) {
        RaisingExpansion out{tp.k, tp, {{1, {}}}};
        return out;
    }
    walk.column(walk.len, walk.len - 1, walk.lambda[walk.len - 1], 1);

    RaisingExpansion out{tp.k, tp, {}};
    for (const auto& [alpha, coeff] : walk.acc)
        if (coeff != 0) out.terms.push_back({coeff, alpha});
    return out;
}

} // namespace schubert
