#include "schubert/splitting.hpp"

#include <algorithm>
#include <stdexcept>

#include "schubert/nilcox.hpp"
#include "schubert/transition.hpp"

namespace schubert {

bool TupleShapeOrder::operator()(const std::vector<TypedPartition>& x,
                                 const std::vector<TypedPartition>& y) const {
    ShapeOrder less;
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
        if (less(x[i], y[i])) return true;
        if (less(y[i], x[i])) return false;
    }
    return x.size() < y.size();
}

namespace {

void validate_sequence(const SignedPermutation& w, const DescentSequence& seq) {
    const std::vector<int>& a = seq.a;
    if (a.empty()) throw std::invalid_argument("descent sequence must be nonempty");
    if (a.front() < 0) throw std::invalid_argument("a_1 must be nonnegative");
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] <= a[i - 1])
            throw std::invalid_argument("a must be strictly increasing");
    // Positive descents must land on block boundaries; a descent at 0 is
    // absorbed by the mixed slot, which the family-aware increasing-up-to
    // check constrains (for BC it forces a_1 = 0, for D it is free).
    for (int d : w.descent_set())
        if (d >= 1 && std::find(a.begin(), a.end(), d) == a.end())
            throw std::invalid_argument("w is not compatible with a: descent " +
                                        std::to_string(d));
    if (!w.is_increasing_up_to(a.front()))
        throw std::invalid_argument("w is not compatible with a: not increasing up to a_1");
    if (w.family() == Family::A && a.front() == 0)
        throw std::invalid_argument("a_1 = 0 needs a signed family");
    if (seq.has_b()) {
        const std::vector<int>& b = seq.b;
        if (w.family() == Family::A)
            throw std::invalid_argument("double sequences need a signed family");
        if (b.front() != 0) throw std::invalid_argument("b_1 must be 0");
        for (std::size_t i = 1; i < b.size(); ++i)
            if (b[i] <= b[i - 1])
                throw std::invalid_argument("b must be strictly increasing");
        for (int d : w.inverse().descent_set())
            if (d >= 1 && std::find(b.begin(), b.end(), d) == b.end())
                throw std::invalid_argument("w⁻¹ is not compatible with b: descent " +
                                            std::to_string(d));
    }
}

// Permutations of {m+1, …, n} as canonical elements of family f.
std::vector<SignedPermutation> block_permutations(Family f, int m, int n) {
    std::vector<SignedPermutation> out;
    std::vector<int> tail;
    for (int i = m + 1; i <= n; ++i) tail.push_back(i);
    do {
        std::vector<int> win;
        for (int i = 1; i <= m; ++i) win.push_back(i);
        win.insert(win.end(), tail.begin(), tail.end());
        out.push_back(SignedPermutation(f, std::move(win)));
    } while (std::next_permutation(tail.begin(), tail.end()));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<std::vector<SignedPermutation>>
compatible_factorizations(const SignedPermutation& w, const DescentSequence& seq) {
    validate_sequence(w, seq);
    const std::vector<int>& a = seq.a;
    int p = static_cast<int>(a.size());
    int q = seq.has_b() ? static_cast<int>(seq.b.size()) : 1;
    int m = p + q - 1;
    int n = w.rank();

    std::vector<std::vector<SignedPermutation>> out;
    std::vector<SignedPermutation> slots(m);

    // Peel the permutation slots right to left, then (double form) the
    // z-side slots left to right; the mixed slot q keeps the remainder.
    struct Peel {
        const DescentSequence& seq;
        int p, q, m, n;
        std::vector<SignedPermutation>& slots;
        std::vector<std::vector<SignedPermutation>>& out;

        void right(int j, const SignedPermutation& rem) {
            if (j == q) {
                left(1, rem);
                return;
            }
            int fix = seq.a[j - q - 1];
            for (const SignedPermutation& v : block_permutations(rem.family(), fix, n)) {
                SignedPermutation head = rem * v.inverse();
                if (head.length() + v.length() != rem.length()) continue;
                slots[j - 1] = v;
                right(j - 1, head);
            }
        }

        void left(int j, const SignedPermutation& rem) {
            if (j == q) {
                slots[q - 1] = rem;
                out.push_back(slots);
                return;
            }
            int fix = seq.b[q - j - 1];
            for (const SignedPermutation& v : block_permutations(rem.family(), fix, n)) {
                SignedPermutation tail = v.inverse() * rem;
                if (tail.length() + v.length() != rem.length()) continue;
                slots[j - 1] = v;
                left(j + 1, tail);
            }
        }
    } peel{seq, p, q, m, n, slots, out};

    peel.right(m, w);
    return out;
}

namespace {

SignedPermutation deshift(const SignedPermutation& u, int m) {
    std::vector<int> win;
    for (int i = m + 1; i <= u.rank(); ++i) win.push_back(u.at(i) - m);
    return SignedPermutation(Family::A, std::move(win));
}

} // namespace

const std::map<Partition, long long>& schur_s_coeffs(const SignedPermutation& u) {
    static std::map<std::vector<int>, std::map<Partition, long long>> cache;
    auto it = cache.find(u.window());
    if (it != cache.end()) return it->second;

    SignedPermutation ua(Family::A, u.window());
    BasisExpansion exp = expand_generated(
        [&](int n) {
            return stanley(ua, StanleyFlavor::G, VariableSpace{0, n, 0});
        },
        ua.length(), BasisKind::SchurS);
    if (!exp.ok()) throw std::logic_error("Stanley function failed to expand in Schur basis");
    std::map<Partition, long long> terms;
    for (const auto& [tp, c] : exp.terms)
        terms.emplace(tp.p, static_cast<long long>(c.to_integer()));
    return cache.emplace(u.window(), std::move(terms)).first->second;
}

SplitExpansion split_coeffs(const SignedPermutation& w, const DescentSequence& seq) {
    SplitExpansion out;
    out.family = w.family();
    out.a = seq.a;
    out.b = seq.b;
    int q = seq.has_b() ? static_cast<int>(seq.b.size()) : 1;
    int k = seq.a.front();
    bool signed_family = w.family() != Family::A;

    for (const auto& slots : compatible_factorizations(w, seq)) {
        int m = static_cast<int>(slots.size());
        // Per-slot shape/count choices.
        std::vector<std::vector<std::pair<TypedPartition, long long>>> menu(m);
        for (int j = 1; j <= m; ++j) {
            if (signed_family && j == q) {
                for (const auto& [tp, c] : mixed_coeffs(slots[j - 1], k).terms)
                    menu[j - 1].emplace_back(tp, static_cast<long long>(c.to_integer()));
            } else {
                int fix;
                if (!signed_family)
                    fix = j == 1 ? 0 : seq.a[j - 2];
                else
                    fix = j < q ? seq.b[q - j - 1] : seq.a[j - q - 1];
                for (const auto& [la, c] : schur_s_coeffs(deshift(slots[j - 1], fix)))
                    menu[j - 1].emplace_back(TypedPartition::plain(la), c);
            }
        }
        std::vector<TypedPartition> tuple(m);
        struct Walk {
            const std::vector<std::vector<std::pair<TypedPartition, long long>>>& menu;
            std::vector<TypedPartition>& tuple;
            SplitExpansion& out;
            void go(int j, long long prod) {
                if (j == static_cast<int>(menu.size())) {
                    out.terms[tuple] += prod;
                    return;
                }
                for (const auto& [tp, c] : menu[j]) {
                    tuple[j] = tp;
                    go(j + 1, prod * c);
                }
            }
        } walk{menu, tuple, out};
        walk.go(0, 1);
    }

    for (auto it = out.terms.begin(); it != out.terms.end();)
        it = it->second == 0 ? out.terms.erase(it) : std::next(it);
    return out;
}

Polynomial giambelli_expansion(const SignedPermutation& w, const DescentSequence& seq,
                               const VariableSpace& sp) {
    if (w.family() == Family::D)
        throw std::invalid_argument(
            "family D has no polynomial Giambelli form here (formal eta basis)");
    SplitExpansion split = split_coeffs(w, seq);
    const std::vector<int>& a = seq.a;
    int q = seq.has_b() ? static_cast<int>(seq.b.size()) : 1;
    if (sp.ny < a.back())
        throw std::invalid_argument("space has too few y-variables for the sequence");
    if (seq.has_b() && sp.nz < seq.b.back())
        throw std::invalid_argument("space has too few z-variables for the sequence");

    Polynomial total(sp);
    for (const auto& [tuple, count] : split.terms) {
        Polynomial term = Polynomial::constant(sp, Dyadic(count));
        for (int j = 1; j <= static_cast<int>(tuple.size()); ++j) {
            const Partition& la = tuple[j - 1].p;
            if (la.empty()) continue;
            if (w.family() != Family::A && j == q) {
                int k = a.front();
                term = term * theta(TypedPartition(la, k, 0), VariableSpace{sp.nx, k, 0})
                                  .with_space(sp);
            } else if (j < q) {
                int blk = q + 1 - j;  // pairs slot j with Z_{q+1−j}
                term = term * schur_neg(la, sp, Axis::Z, seq.b[blk - 2] + 1, seq.b[blk - 1]);
            } else {
                int blk = w.family() == Family::A ? j : j - q + 1;
                int lo = blk == 1 ? 1 : a[blk - 2] + 1;
                term = term * schur_block(la, sp, Axis::Y, lo, a[blk - 1]);
            }
        }
        total += term;
    }
    return total;
}

} // namespace schubert
