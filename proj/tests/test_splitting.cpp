#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <stdexcept>
#include <vector>

#include "schubert/nilcox.hpp"
#include "schubert/splitting.hpp"
#include "schubert/transition.hpp"

using namespace schubert;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

SignedPermutation aa(std::vector<int> w) { return SignedPermutation(Family::A, std::move(w)); }
SignedPermutation bc(std::vector<int> w) { return SignedPermutation(Family::BC, std::move(w)); }
SignedPermutation dd(std::vector<int> w) { return SignedPermutation(Family::D, std::move(w)); }

TypedPartition tp(std::vector<int> v, int k, int type = 0) {
    return TypedPartition(P(std::move(v)), k, type);
}

TypedPartition pl(std::vector<int> v) { return TypedPartition::plain(P(std::move(v))); }

DescentSequence seq(std::vector<int> a, std::vector<int> b = {}) {
    return DescentSequence{std::move(a), std::move(b)};
}

bool compatible(const SignedPermutation& w, const DescentSequence& s) {
    try {
        compatible_factorizations(w, s);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

// Candidate sequences covering every descent pattern of the rank-3 groups.
const std::vector<std::vector<int>> kSignedSeqs = {{0},    {1},    {2},    {0, 1},
                                                   {0, 2}, {1, 2}, {0, 1, 2}};
const std::vector<std::vector<int>> kTypeASeqs = {{1},    {2},    {3},    {1, 2},
                                                  {1, 3}, {2, 3}, {1, 2, 3}};

// Undo the block shift: the slot permutation fixes 1..fix and permutes the
// rest, so subtracting fix gives the plain permutation it encodes.
SignedPermutation deshift(const SignedPermutation& u, int fix) {
    std::vector<int> win;
    for (int i = fix + 1; i <= u.rank(); ++i) win.push_back(u.at(i) - fix);
    return SignedPermutation(Family::A, std::move(win));
}

// Independent grove enumeration: count tuples of transition-tree leaves (the
// mixed slot, from a materialized tree) times Schur shapes (the permutation
// slots), summed over all compatible factorizations.
std::map<std::vector<TypedPartition>, long long, TupleShapeOrder>
grove_counts(const SignedPermutation& w, const DescentSequence& s) {
    int q = s.has_b() ? static_cast<int>(s.b.size()) : 1;
    int k = s.a.front();
    std::map<std::vector<TypedPartition>, long long, TupleShapeOrder> total;

    for (const auto& slots : compatible_factorizations(w, s)) {
        int m = static_cast<int>(slots.size());
        std::vector<std::vector<std::pair<TypedPartition, long long>>> menu(m);
        for (int j = 1; j <= m; ++j) {
            if (j == q) {
                TransitionTree t = transition_tree(slots[j - 1], k);
                std::map<TypedPartition, long long, ShapeOrder> leaves;
                for (const auto& node : t.nodes)
                    if (node.children.empty())
                        leaves[grassmannian_to_partition(node.w, k)] += 1;
                for (const auto& [shape, c] : leaves) menu[j - 1].emplace_back(shape, c);
            } else {
                int fix = j < q ? s.b[q - j - 1] : s.a[j - q - 1];
                for (const auto& [la, c] : schur_s_coeffs(deshift(slots[j - 1], fix)))
                    menu[j - 1].emplace_back(TypedPartition::plain(la), c);
            }
        }
        std::vector<TypedPartition> tuple;
        tuple.reserve(m);
        auto walk = [&](auto&& self, int j, long long prod) -> void {
            if (j == m) {
                total[tuple] += prod;
                return;
            }
            for (const auto& [shape, c] : menu[j]) {
                tuple.push_back(shape);
                self(self, j + 1, prod * c);
                tuple.pop_back();
            }
        };
        walk(walk, 0, 1);
    }
    for (auto it = total.begin(); it != total.end();)
        it = it->second == 0 ? total.erase(it) : std::next(it);
    return total;
}

// y_j ↦ −z_j, z_j ↦ −y_j (needs ny == nz).
Polynomial yz_swap_negate(const Polynomial& f) {
    const VariableSpace& sp = f.space();
    REQUIRE(sp.ny == sp.nz);
    Polynomial out(sp);
    for (const auto& [mono, coeff] : f.terms()) {
        Monomial m(sp.total());
        int sign_deg = 0;
        for (int i = 1; i <= sp.nx; ++i)
            m.bump(sp.position(Axis::X, i), mono.exp_at(sp.position(Axis::X, i)));
        for (int i = 1; i <= sp.ny; ++i) {
            int e = mono.exp_at(sp.position(Axis::Y, i));
            m.bump(sp.position(Axis::Z, i), e);
            sign_deg += e;
        }
        for (int i = 1; i <= sp.nz; ++i) {
            int e = mono.exp_at(sp.position(Axis::Z, i));
            m.bump(sp.position(Axis::Y, i), e);
            sign_deg += e;
        }
        out.add_term(m, sign_deg % 2 ? -coeff : coeff);
    }
    return out;
}

} // namespace

TEST_CASE("compatible factorizations: worked example and boundary cases") {
    // Two factorizations of [3,2,1]: trivial, and [3,1,2]·[1,3,2].
    auto facts = compatible_factorizations(bc({3, 2, 1}), seq({1, 2}));
    REQUIRE(facts.size() == 2);
    bool saw_trivial = false, saw_split = false;
    for (const auto& f : facts) {
        REQUIRE(f.size() == 2);
        if (f[0].window() == std::vector<int>{3, 2, 1} && f[1].window().empty())
            saw_trivial = true;
        if (f[0].window() == std::vector<int>{3, 1, 2} &&
            f[1].window() == std::vector<int>{1, 3, 2})
            saw_split = true;
    }
    CHECK(saw_trivial);
    CHECK(saw_split);

    // A Grassmannian element with a = (k) factors only trivially.
    auto single = compatible_factorizations(bc({3, -1, 2}), seq({1}));
    REQUIRE(single.size() == 1);
    REQUIRE(single[0].size() == 1);
    CHECK(single[0][0] == bc({3, -1, 2}));

    // The identity factors as a tuple of identities for any sequence.
    SignedPermutation id = SignedPermutation::identity(Family::BC);
    auto trivial = compatible_factorizations(id, seq({1, 2}, {0, 1}));
    REQUIRE(trivial.size() == 1);
    REQUIRE(trivial[0].size() == 3);  // p + q − 1
    for (const auto& u : trivial[0]) CHECK(u == id);
}

TEST_CASE("compatible factorizations: products, lengths, fixed prefixes") {
    DescentSequence s = seq({1, 2});
    for (const SignedPermutation& w : all_elements(Family::BC, 3)) {
        if (!compatible(w, s)) continue;
        for (const auto& slots : compatible_factorizations(w, s)) {
            REQUIRE(slots.size() == 2);
            SignedPermutation prod = slots[0] * slots[1];
            CHECK(prod == w);
            CHECK(slots[0].length() + slots[1].length() == w.length());
            // Slot 2 fixes 1..a_1 and never bars an entry.
            for (int i = 1; i <= 1; ++i) CHECK(slots[1].at(i) == i);
            for (int i = 1; i <= slots[1].rank(); ++i) CHECK(slots[1].at(i) > 0);
        }
    }
}

TEST_CASE("splitting coefficients: worked examples") {
    SUBCASE("hyperoctahedral [3,2,1], a = (1,2)") {
        SplitExpansion se = split_coeffs(bc({3, 2, 1}), seq({1, 2}));
        CHECK(se.family == Family::BC);
        CHECK(se.a == std::vector<int>{1, 2});
        CHECK(se.b.empty());
        REQUIRE(se.terms.size() == 2);
        CHECK(se.terms.at({tp({2, 1}, 1), pl({})}) == 1);
        CHECK(se.terms.at({tp({1, 1}, 1), pl({1})}) == 1);
        // Stored mixed-slot keys carry k = 1 and type 0.
        for (const auto& [tuple, c] : se.terms) {
            CHECK(tuple[0].k == 1);
            CHECK(tuple[0].type == 0);
            CHECK(tuple[1].k == 0);
        }
    }
    SUBCASE("hyperoctahedral [2,3,1], a = (1,2)") {
        SplitExpansion se = split_coeffs(bc({2, 3, 1}), seq({1, 2}));
        REQUIRE(se.terms.size() == 2);
        CHECK(se.terms.at({tp({2}, 1), pl({})}) == 1);
        CHECK(se.terms.at({tp({1}, 1), pl({1})}) == 1);
    }
    SUBCASE("even orthogonal [3,2,1], a = (1,2), with types") {
        SplitExpansion se = split_coeffs(dd({3, 2, 1}), seq({1, 2}));
        CHECK(se.family == Family::D);
        REQUIRE(se.terms.size() == 3);
        CHECK(se.terms.at({tp({3}, 1, 0), pl({})}) == 1);
        CHECK(se.terms.at({tp({2, 1}, 1, 1), pl({})}) == 1);
        CHECK(se.terms.at({tp({1, 1}, 1, 1), pl({1})}) == 1);
        // Verify the stored types verbatim (ShapeOrder distinguishes them).
        for (const auto& [tuple, c] : se.terms) {
            if (tuple[0].p == P({3})) CHECK(tuple[0].type == 0);
            if (tuple[0].p == P({2, 1})) CHECK(tuple[0].type == 1);
            if (tuple[0].p == P({1, 1})) CHECK(tuple[0].type == 1);
        }
    }
    SUBCASE("identity, double sequence") {
        SplitExpansion se =
            split_coeffs(SignedPermutation::identity(Family::BC), seq({1, 2}, {0, 1}));
        REQUIRE(se.terms.size() == 1);
        const auto& [tuple, c] = *se.terms.begin();
        CHECK(c == 1);
        REQUIRE(tuple.size() == 3);
        for (const auto& shape : tuple) CHECK(shape.p.empty());
    }
}

TEST_CASE("grove counts agree with the coefficient products, exhaustively") {
    // Two routes to the same expansion: menu products of memoized leaf counts
    // and Schur coefficients (split_coeffs) versus direct enumeration over
    // materialized transition trees (grove_counts).
    for (Family fam : {Family::BC, Family::D}) {
        for (const SignedPermutation& w : all_elements(fam, 3)) {
            for (const auto& a : kSignedSeqs) {
                DescentSequence s = seq(a);
                if (!compatible(w, s)) continue;
                SplitExpansion se = split_coeffs(w, s);
                auto direct = grove_counts(w, s);
                REQUIRE(se.terms.size() == direct.size());
                for (const auto& [tuple, c] : se.terms) {
                    auto it = direct.find(tuple);
                    REQUIRE(it != direct.end());
                    CHECK(it->second == c);
                }
                // Structural guarantees on the stored expansion.
                for (const auto& [tuple, c] : se.terms) {
                    CHECK(c > 0);
                    CHECK(tuple.size() == a.size());
                    int weight = 0;
                    for (const auto& shape : tuple) weight += shape.p.weight();
                    CHECK(weight == static_cast<int>(w.length()));
                }
            }
        }
    }
}

TEST_CASE("type A splitting reassembles the Schubert polynomial") {
    VariableSpace sp{0, 3, 0};
    int pairs = 0;
    for (const SignedPermutation& w : all_elements(Family::A, 4)) {
        Polynomial as = schubert_poly(w, SchubertFlavor::A, sp);
        for (const auto& a : kTypeASeqs) {
            DescentSequence s = seq(a);
            if (!compatible(w, s)) continue;
            CHECK(giambelli_expansion(w, s, sp) == as);
            ++pairs;
        }
    }
    CHECK(pairs >= 24);  // a = (1,2,3) is compatible with every element
}

TEST_CASE("type A Stanley coefficients transpose under inversion") {
    for (const SignedPermutation& w : all_elements(Family::A, 4)) {
        const auto& direct = schur_s_coeffs(w);
        const auto& inverse = schur_s_coeffs(w.inverse());
        REQUIRE(direct.size() == inverse.size());
        for (const auto& [la, c] : direct) {
            auto it = inverse.find(la.conjugate());
            REQUIRE(it != inverse.end());
            CHECK(it->second == c);
        }
    }
}

TEST_CASE("giambelli expansion: worked polynomials") {
    VariableSpace sp{3, 2, 0};
    Polynomial y2 = Polynomial::variable(sp, Axis::Y, 2);

    SUBCASE("[3,2,1]") {
        Polynomial expected =
            theta(tp({2, 1}, 1), VariableSpace{3, 1, 0}).with_space(sp) +
            theta(tp({1, 1}, 1), VariableSpace{3, 1, 0}).with_space(sp) * y2;
        Polynomial got = giambelli_expansion(bc({3, 2, 1}), seq({1, 2}), sp);
        CHECK(got == expected);
        CHECK(got == schubert_poly(bc({3, 2, 1}), SchubertFlavor::C, sp));
    }
    SUBCASE("[1,3,2]") {
        Polynomial expected =
            theta(tp({1}, 1), VariableSpace{3, 1, 0}).with_space(sp) + y2;
        Polynomial got = giambelli_expansion(bc({1, 3, 2}), seq({1, 2}), sp);
        CHECK(got == expected);
        CHECK(got == schubert_poly(bc({1, 3, 2}), SchubertFlavor::C, sp));
    }
}

TEST_CASE("hyperoctahedral splitting reassembles the Schubert polynomial") {
    VariableSpace sp{3, 2, 0};
    int pairs = 0;
    for (const SignedPermutation& w : all_elements(Family::BC, 3)) {
        Polynomial cs = schubert_poly(w, SchubertFlavor::C, sp);
        for (const auto& a : kSignedSeqs) {
            DescentSequence s = seq(a);
            if (!compatible(w, s)) continue;
            CHECK(giambelli_expansion(w, s, sp) == cs);
            ++pairs;
        }
    }
    CHECK(pairs >= 48);  // a = (0,1,2) is compatible with every element
}

TEST_CASE("double splitting matches the two-sided Schubert polynomial") {
    VariableSpace sp{2, 2, 1};
    DescentSequence s = seq({1, 2}, {0, 1});
    int covered = 0;
    for (const SignedPermutation& w : all_elements(Family::BC, 3)) {
        if (!compatible(w, s)) continue;
        CHECK(giambelli_expansion(w, s, sp) ==
              schubert_poly(w, SchubertFlavor::C, sp));
        ++covered;
    }
    CHECK(covered >= 5);
}

TEST_CASE("inverse symmetry maps the double expansion onto its dual") {
    // Substituting y_j ↦ −z_j, z_j ↦ −y_j into the expansion of w⁻¹ (split
    // along the swapped sequence) recovers the expansion of w.
    VariableSpace sp{2, 2, 2};
    DescentSequence forward = seq({1, 2}, {0, 1});
    DescentSequence dual = seq({1}, {0, 1, 2});
    int covered = 0;
    for (const SignedPermutation& w : all_elements(Family::BC, 3)) {
        if (!compatible(w, forward) || !compatible(w.inverse(), dual)) continue;
        Polynomial lhs = giambelli_expansion(w, forward, sp);
        Polynomial rhs = giambelli_expansion(w.inverse(), dual, sp);
        CHECK(lhs == yz_swap_negate(rhs));
        ++covered;
    }
    CHECK(covered >= 5);
}

TEST_CASE("factored form through the 1-Grassmannian parabolic") {
    // CS_w = Σ J_u(X;y_1)·AS_v(y_2,y_3) over length-additive w = u·(1×v).
    VariableSpace sp{2, 3, 0};
    int covered = 0;
    for (const SignedPermutation& w : all_elements(Family::BC, 3)) {
        if (!w.is_increasing_up_to(1)) continue;
        Polynomial sum(sp);
        for (const std::vector<int>& vwin :
             {std::vector<int>{}, std::vector<int>{2, 1}}) {
            SignedPermutation v = aa(vwin);
            SignedPermutation emb = bc({1, v.at(1) + 1, v.at(2) + 1});
            SignedPermutation u = w * emb.inverse();
            if (u.length() + v.length() != w.length()) continue;
            sum += mixed_stanley(u, MixedFlavor::J, VariableSpace{2, 1, 0})
                       .with_space(sp) *
                   schubert_A_shifted(v, sp, Axis::Y, 1);
        }
        CHECK(sum == schubert_poly(w, SchubertFlavor::C, sp));
        ++covered;
    }
    CHECK(covered == 24);
}

TEST_CASE("incompatible inputs are rejected") {
    CHECK_THROWS_AS(compatible_factorizations(bc({2, 3, 1}), seq({1})),
                    std::invalid_argument);  // descent 2 not in a
    CHECK_THROWS_AS(compatible_factorizations(bc({3, 2, 1}), seq({})),
                    std::invalid_argument);  // empty sequence
    CHECK_THROWS_AS(compatible_factorizations(bc({3, 2, 1}), seq({2, 2})),
                    std::invalid_argument);  // not strictly increasing
    CHECK_THROWS_AS(compatible_factorizations(aa({2, 1}), seq({0, 1})),
                    std::invalid_argument);  // a_1 = 0 needs a signed family
    CHECK_THROWS_AS(compatible_factorizations(bc({-1, 2}), seq({1, 2})),
                    std::invalid_argument);  // not increasing up to a_1
    CHECK_THROWS_AS(compatible_factorizations(bc({3, 2, 1}), seq({1, 2}, {1, 2})),
                    std::invalid_argument);  // b must start at 0
    CHECK_THROWS_AS(compatible_factorizations(bc({3, 2, 1}), seq({1, 2}, {0, 0})),
                    std::invalid_argument);  // b not strictly increasing
    CHECK_THROWS_AS(compatible_factorizations(bc({1, 3, 2}), seq({1, 2}, {0, 1})),
                    std::invalid_argument);  // descent of w⁻¹ not in b
    CHECK_THROWS_AS(compatible_factorizations(aa({2, 1}), seq({1}, {0, 1})),
                    std::invalid_argument);  // double form needs a signed family
    CHECK_THROWS_AS(giambelli_expansion(dd({3, 2, 1}), seq({1, 2}), VariableSpace{2, 2, 0}),
                    std::invalid_argument);  // no polynomial model for family D
    CHECK_THROWS_AS(giambelli_expansion(bc({3, 2, 1}), seq({1, 2}), VariableSpace{2, 1, 0}),
                    std::invalid_argument);  // space too small for Y_2
}
