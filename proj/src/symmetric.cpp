#include "schubert/symmetric.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "schubert/raising.hpp"
#include "schubert/symfunc.hpp"

namespace schubert {

namespace {

const VariableSpace kNoVars{0, 0, 0};

Partition with_part(const Partition& mu, int extra) {
    if (extra == 0) return mu;
    std::vector<int> parts = mu.parts();
    parts.push_back(extra);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(parts);
}

Partition merged(const Partition& a, const Partition& b) {
    std::vector<int> parts = a.parts();
    const std::vector<int>& add = b.parts();
    parts.insert(parts.end(), add.begin(), add.end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(parts);
}

// e_i in h-coordinates with integer coefficients: e_i = Σ_j (−1)^{j−1} h_j e_{i−j}.
const std::map<Partition, BigInt>& e_h(int i) {
    static std::vector<std::map<Partition, BigInt>> cache;
    if (cache.empty()) cache.push_back({{Partition{}, BigInt(1)}});
    while (static_cast<int>(cache.size()) <= i) {
        int n = static_cast<int>(cache.size());
        std::map<Partition, BigInt> out;
        for (int j = 1; j <= n; ++j)
            for (const auto& [mu, coeff] : cache[n - j]) {
                BigInt signed_c = (j % 2 == 1) ? coeff : -coeff;
                auto [it, fresh] = out.emplace(with_part(mu, j), signed_c);
                if (!fresh && (it->second += signed_c) == 0) out.erase(it);
            }
        cache.push_back(std::move(out));
    }
    return cache[i];
}

} // namespace

void SymHPoly::add(const Partition& mu, const Polynomial& coeff) {
    if (coeff.is_zero()) return;
    auto [it, fresh] = c.emplace(mu, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) c.erase(it);
    }
}

void SymHPoly::add_scaled(const SymHPoly& o, const Dyadic& scale) {
    if (scale.is_zero()) return;
    for (const auto& [mu, coeff] : o.c) add(mu, coeff.scaled(scale));
}

SymHPoly SymHPoly::times(const SymHPoly& o) const {
    SymHPoly out;
    for (const auto& [mu, cm] : c)
        for (const auto& [nu, cn] : o.c) out.add(merged(mu, nu), cm * cn);
    return out;
}

Polynomial SymHPoly::to_polynomial(const VariableSpace& sp) const {
    Polynomial out(sp);
    for (const auto& [mu, coeff] : c) {
        Polynomial hm = Polynomial::one(sp);
        for (int i = 1; i <= mu.length(); ++i)
            hm = hm * complete_h(sp, Axis::X, 1, sp.nx, Axis::X, 1, 0, mu.part(i));
        out += hm * coeff;
    }
    return out;
}

const SymHPoly& q_h(int r) {
    static std::vector<SymHPoly> cache;
    while (static_cast<int>(cache.size()) <= r) {
        int n = static_cast<int>(cache.size());
        SymHPoly out;
        for (int j = 0; j <= n; ++j)
            for (const auto& [mu, coeff] : e_h(j))
                out.add(with_part(mu, n - j),
                        Polynomial::constant(kNoVars, Dyadic(coeff)));
        cache.push_back(std::move(out));
    }
    return cache[r];
}

const SymHPoly& vartheta_h(int r, int k) {
    static std::map<std::pair<int, int>, SymHPoly> cache;
    auto it = cache.find({r, k});
    if (it != cache.end()) return it->second;
    const VariableSpace ysp{0, k, 0};
    SymHPoly out;
    for (int i = 0; i <= std::min(k, r); ++i) {
        Polynomial ei = elementary(ysp, Axis::Y, 1, k, i);
        for (const auto& [mu, coeff] : q_h(r - i).c) out.add(mu, coeff * ei);
    }
    return cache.emplace(std::pair{r, k}, std::move(out)).first->second;
}

namespace {

// Raising-operator column walk in h-coordinates.  State: next column to
// process is j−1 (columns shrink from ℓ down to 2), with g the exponent
// gains accumulated so far on rows 1..j−1.  Value: Σ over completions of
// (Π column factors) · ϑ_{α_{j−1}} ⋯ ϑ_{α_1}.
struct ThetaWalker {
    const std::vector<int>& lam;
    int k;
    std::map<std::vector<int>, SymHPoly> memo;

    bool inv(int h, int j) const {
        return lam[h - 1] + lam[j - 1] > 2 * k + (j - h);
    }

    const SymHPoly& run(int j, std::vector<int> g) {
        std::vector<int> key = g;
        key.insert(key.begin(), j);
        auto hit = memo.find(key);
        if (hit != memo.end()) return hit->second;

        SymHPoly out;
        if (j == 2) {
            out = vartheta_h(lam[0] + g[0], k);
        } else {
            int col = j - 1;
            int budget = lam[col - 1] + g[col - 1];
            // Bucket recursive children by the finalized exponent α_col so
            // the expensive ϑ-multiplication happens once per α value.
            std::map<int, SymHPoly> by_alpha;
            std::vector<int> losses(col - 1, 0);
            enumerate(1, col, budget, 0, BigInt(1), losses, g, by_alpha);
            for (auto& [alpha, bucket] : by_alpha) {
                const SymHPoly& va = vartheta_h(alpha, k);
                for (const auto& [mu, cm] : va.c)
                    for (const auto& [nu, cn] : bucket.c)
                        out.add(merged(mu, nu), cm * cn);
            }
        }
        return memo.emplace(std::move(key), std::move(out)).first->second;
    }

    // Choose the loss a_{h,col} for each row h < col.
    void enumerate(int h, int col, int budget, int spent, BigInt coeff,
                   std::vector<int>& losses, const std::vector<int>& g,
                   std::map<int, SymHPoly>& by_alpha) {
        if (h == col) {
            std::vector<int> child(g.begin(), g.end() - 1);
            for (int i = 0; i < col - 1; ++i) child[i] += losses[i];
            by_alpha[budget - spent].add_scaled(run(col, std::move(child)),
                                                Dyadic(coeff));
            return;
        }
        int cap = inv(h, col) ? budget - spent : std::min(1, budget - spent);
        for (int a = 0; a <= cap; ++a) {
            BigInt f = coeff;
            if (a > 0) f = (a % 2 == 0 ? f : -f) * (inv(h, col) ? 2 : 1);
            losses[h - 1] = a;
            enumerate(h + 1, col, budget, spent + a, f, losses, g, by_alpha);
        }
        losses[h - 1] = 0;
    }
};

} // namespace

const SymHPoly& theta_h(const TypedPartition& tp) {
    static std::map<std::pair<int, std::vector<int>>, SymHPoly> cache;
    std::pair<int, std::vector<int>> key{tp.k, tp.p.parts()};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    SymHPoly out;
    int len = tp.p.length();
    if (len == 0) {
        out.add(Partition{}, Polynomial::one(kNoVars));
    } else {
        ThetaWalker walker{tp.p.parts(), tp.k, {}};
        out = walker.run(len + 1, std::vector<int>(len, 0));
    }
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

BigInt matrix_count(const Partition& mu, const Partition& nu) {
    if (mu.weight() != nu.weight()) return BigInt(0);
    static std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> cache;

    struct Count {
        decltype(cache)& memo;
        BigInt go(const std::vector<int>& rows, std::vector<int> cols) {
            if (rows.empty()) return BigInt(cols.empty() ? 1 : 0);
            std::pair<std::vector<int>, std::vector<int>> key{rows, cols};
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;

            std::vector<int> rest(rows.begin() + 1, rows.end());
            BigInt total = 0;
            std::vector<int> take(cols.size(), 0);
            std::vector<int> suffix(cols.size() + 1, 0);
            for (int i = static_cast<int>(cols.size()) - 1; i >= 0; --i)
                suffix[i] = suffix[i + 1] + cols[i];
            fill(rows[0], 0, rest, cols, take, suffix, total);
            return memo.emplace(std::move(key), std::move(total)).first->second;
        }
        // Distribute `left` of the first row across columns idx.. (≤ col sum).
        void fill(int left, std::size_t idx, const std::vector<int>& rest,
                  const std::vector<int>& cols, std::vector<int>& take,
                  const std::vector<int>& suffix, BigInt& total) {
            if (idx == cols.size()) {
                if (left != 0) return;
                std::vector<int> next;
                next.reserve(cols.size());
                for (std::size_t i = 0; i < cols.size(); ++i)
                    if (int rem = cols[i] - take[i]) next.push_back(rem);
                std::sort(next.begin(), next.end(), std::greater<int>());
                total += go(rest, std::move(next));
                return;
            }
            if (left > suffix[idx]) return;
            int cap = std::min(left, cols[idx]);
            for (int t = 0; t <= cap; ++t) {
                take[idx] = t;
                fill(left - t, idx + 1, rest, cols, take, suffix, total);
            }
            take[idx] = 0;
        }
    } counter{cache};

    return counter.go(mu.parts(), nu.parts());
}

namespace {

const std::vector<Partition>& partitions_of(int w) {
    static std::map<int, std::vector<Partition>> cache;
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    for (const auto& p : partitions_up_to(w, std::max(w, 1), std::max(w, 1)))
        if (p.weight() == w) out.push_back(p);
    return cache.emplace(w, std::move(out)).first->second;
}

} // namespace

Polynomial h_to_dominant(const SymHPoly& f, const VariableSpace& sp) {
    Polynomial out(sp);
    for (const auto& [mu, coeff] : f.c) {
        const VariableSpace& csp = coeff.space();
        for (const Partition& nu : partitions_of(mu.weight())) {
            if (nu.length() > sp.nx) continue;
            BigInt m = matrix_count(mu, nu);
            if (m == 0) continue;
            Dyadic scale = Dyadic(m);
            for (const auto& [mono, cy] : coeff.terms()) {
                Monomial big(sp.total());
                for (int i = 1; i <= nu.length(); ++i)
                    big.bump(sp.position(Axis::X, i), nu.part(i));
                for (int j = 1; j <= csp.ny; ++j)
                    if (int e = mono.exp_at(csp.position(Axis::Y, j)))
                        big.bump(sp.position(Axis::Y, j), e);
                out.add_term(big, cy * scale);
            }
        }
    }
    return out;
}

Polynomial dominant_part(const Polynomial& p) {
    const VariableSpace& sp = p.space();
    Polynomial out(sp);
    for (const auto& [mono, c] : p.terms()) {
        bool ok = true;
        for (int i = 2; i <= sp.nx && ok; ++i)
            ok = mono.exp_at(sp.position(Axis::X, i)) <=
                 mono.exp_at(sp.position(Axis::X, i - 1));
        if (ok) out.add_term(mono, c);
    }
    return out;
}

} // namespace schubert
