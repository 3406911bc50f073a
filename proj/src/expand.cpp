#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

#include "schubert/symfunc.hpp"

namespace schubert {

namespace {

using Rat = boost::multiprecision::cpp_rational;

Rat to_rat(const Dyadic& d) {
    BigInt den = BigInt(1) << d.exponent();
    return Rat(d.numerator(), den);
}

// Fails (returns false) when the denominator is not a power of two.
bool to_dyadic(const Rat& r, Dyadic& out) {
    BigInt den = boost::multiprecision::denominator(r);
    unsigned e = 0;
    while ((den & 1) == 0) {
        den >>= 1;
        ++e;
    }
    if (den != 1) return false;
    out = Dyadic(boost::multiprecision::numerator(r), e);
    return true;
}

struct RawSolve {
    ExpandStatus status = ExpandStatus::Ok;
    std::vector<Rat> x;
};

// Exact reduced elimination of the (tall) system Σ_c x_c·gens[c] = p.
// Rank-deficient ⇒ NeedsMoreVariables; inconsistent ⇒ NotInSpan.
RawSolve solve_exact(const std::vector<Polynomial>& gens, const Polynomial& p) {
    VariableSpace sp = p.space();
    for (const auto& g : gens) sp = VariableSpace::join(sp, g.space());
    std::vector<Polynomial> G;
    G.reserve(gens.size());
    for (const auto& g : gens) G.push_back(g.with_space(sp));
    Polynomial b = p.with_space(sp);

    std::map<Monomial, int, GradedLex> row_of;
    auto intern = [&](const Monomial& m) {
        auto [it, fresh] = row_of.emplace(m, static_cast<int>(row_of.size()));
        (void)fresh;
        return it->second;
    };
    for (const auto& g : G)
        for (const auto& [m, c] : g.terms()) intern(m);
    for (const auto& [m, c] : b.terms()) intern(m);

    const int R = static_cast<int>(row_of.size());
    const int C = static_cast<int>(G.size());
    std::vector<std::vector<Rat>> A(R, std::vector<Rat>(C + 1));
    for (int c = 0; c < C; ++c)
        for (const auto& [m, v] : G[c].terms()) A[row_of.at(m)][c] = to_rat(v);
    for (const auto& [m, v] : b.terms()) A[row_of.at(m)][C] = to_rat(v);

    std::vector<char> used(R, 0);
    std::vector<int> pivot(C, -1);
    for (int c = 0; c < C; ++c) {
        int pr = -1;
        for (int r = 0; r < R && pr < 0; ++r)
            if (!used[r] && A[r][c] != 0) pr = r;
        if (pr < 0) continue;
        used[pr] = 1;
        pivot[c] = pr;
        Rat pv = A[pr][c];
        for (int cc = c; cc <= C; ++cc) A[pr][cc] /= pv;
        for (int r = 0; r < R; ++r) {
            if (r == pr || A[r][c] == 0) continue;
            Rat f = A[r][c];
            for (int cc = c; cc <= C; ++cc) A[r][cc] -= f * A[pr][cc];
        }
    }

    RawSolve out;
    for (int c = 0; c < C; ++c)
        if (pivot[c] < 0) {
            out.status = ExpandStatus::NeedsMoreVariables;
            return out;
        }
    for (int r = 0; r < R; ++r)
        if (!used[r] && A[r][C] != 0) {
            out.status = ExpandStatus::NotInSpan;
            return out;
        }
    out.x.resize(C);
    for (int c = 0; c < C; ++c) out.x[c] = A[pivot[c]][C];
    return out;
}

std::vector<Partition> shapes_of_weight(int w, BasisKind basis, int k) {
    std::vector<Partition> out;
    for (const auto& p : partitions_up_to(w, w, std::max(w, 1))) {
        if (p.weight() != w) continue;
        switch (basis) {
            case BasisKind::SchurS: out.push_back(p); break;
            case BasisKind::SchurQ:
            case BasisKind::SchurP:
                if (p.is_strict()) out.push_back(p);
                break;
            case BasisKind::Theta:
                if (p.is_k_strict(k)) out.push_back(p);
                break;
            case BasisKind::Eta:
                throw std::invalid_argument("eta basis is formal; no polynomial expansion");
        }
    }
    return out;
}

} // namespace

SpanResult expand_in_span(const Polynomial& p, const std::vector<Polynomial>& gens,
                          bool integral_required) {
    RawSolve raw = solve_exact(gens, p);
    SpanResult out;
    out.status = raw.status;
    if (raw.status != ExpandStatus::Ok) return out;
    for (const Rat& r : raw.x) {
        Dyadic d;
        if (!to_dyadic(r, d) || (integral_required && !d.is_integer())) {
            out.status = ExpandStatus::NotInSpan;
            out.rational_solution_exists = true;
            out.coeffs.clear();
            return out;
        }
        out.coeffs.push_back(d);
    }
    return out;
}

BasisExpansion expand_in_basis(const Polynomial& p, BasisKind basis, int degree,
                               int k) {
    if (basis == BasisKind::Eta)
        throw std::invalid_argument("eta basis is formal; no polynomial expansion");
    if (!p.is_homogeneous(degree))
        throw std::invalid_argument("expand_in_basis needs a homogeneous input");
    const VariableSpace sp = p.space();

    BasisExpansion out;
    out.basis = basis;
    out.k = basis == BasisKind::Theta ? k : 0;

    std::vector<Partition> shapes = shapes_of_weight(degree, basis, k);
    std::vector<Polynomial> gens;
    gens.reserve(shapes.size());
    for (const auto& l : shapes) {
        switch (basis) {
            case BasisKind::SchurS: {
                bool on_y = sp.nx == 0 && sp.ny > 0;
                Axis a = on_y ? Axis::Y : Axis::X;
                gens.push_back(schur_block(l, sp, a, 1, sp.count(a)));
                break;
            }
            case BasisKind::SchurQ: gens.push_back(schur_q(l, sp)); break;
            case BasisKind::SchurP: gens.push_back(schur_p(l, sp)); break;
            case BasisKind::Theta: {
                if (sp.ny != k)
                    throw std::invalid_argument("theta basis needs exactly k y-variables");
                VariableSpace small{sp.nx, k, 0};
                gens.push_back(theta(TypedPartition(l, k, 0), small).with_space(sp));
                break;
            }
        }
    }

    SpanResult sol = expand_in_span(p, gens, basis != BasisKind::SchurP);
    out.status = sol.status;
    out.rational_solution_exists = sol.rational_solution_exists;
    if (sol.status != ExpandStatus::Ok) return out;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        if (sol.coeffs[i].is_zero()) continue;
        out.terms.emplace(basis == BasisKind::SchurS
                              ? TypedPartition::plain(shapes[i])
                              : TypedPartition(shapes[i], out.k, 0),
                          sol.coeffs[i]);
    }
    return out;
}

BasisExpansion expand_generated(const std::function<Polynomial(int)>& gen,
                                int degree, BasisKind basis, int k) {
    int nvars = std::max(degree, 1);
    BasisExpansion out = expand_in_basis(gen(nvars), basis, degree, k);
    if (out.status == ExpandStatus::NeedsMoreVariables)
        out = expand_in_basis(gen(nvars + 2), basis, degree, k);
    return out;
}

} // namespace schubert
