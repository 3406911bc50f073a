#include "schubert/nilcox.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

Atom atom_A(int index, Axis axis, int var, int sign) {
    return {AtomKind::A, index, axis, var, sign};
}
Atom atom_Atilde(int index, Axis axis, int var, int sign) {
    return {AtomKind::Atilde, index, axis, var, sign};
}
Atom atom_C(int var) { return {AtomKind::C, 0, Axis::X, var, 1}; }
Atom atom_D(int var) { return {AtomKind::D, 0, Axis::X, var, 1}; }

namespace {

struct GenStep {
    int g;
    int scale;  // coefficient carried by t·u_g
};

std::vector<GenStep> atom_steps(const Atom& a, Family family, int rank) {
    std::vector<GenStep> steps;
    switch (a.kind) {
        case AtomKind::A:
            for (int g = rank - 1; g >= a.index; --g) steps.push_back({g, 1});
            break;
        case AtomKind::Atilde:
            for (int g = a.index; g <= rank - 1; ++g) steps.push_back({g, -1});
            break;
        case AtomKind::C:
            if (family != Family::BC)
                throw std::invalid_argument("C(t) factors live in family BC");
            for (int g = rank - 1; g >= 1; --g) steps.push_back({g, 1});
            steps.push_back({0, 2});
            for (int g = 1; g <= rank - 1; ++g) steps.push_back({g, 1});
            break;
        case AtomKind::D:
            if (family != Family::D)
                throw std::invalid_argument("D(t) factors live in family D");
            for (int g = rank - 1; g >= 1; --g) steps.push_back({g, 1});
            steps.push_back({0, 1});
            for (int g = 2; g <= rank - 1; ++g) steps.push_back({g, 1});
            break;
    }
    return steps;
}

using Support = std::map<SignedPermutation, Polynomial>;

// Keep u only when the remaining gap to the target is length-additive.
void prune_to_interval(Support& sup, const SignedPermutation& target) {
    for (auto it = sup.begin(); it != sup.end();) {
        const SignedPermutation& u = it->first;
        SignedPermutation rest = u.inverse() * target;
        if (u.length() + rest.length() != target.length())
            it = sup.erase(it);
        else
            ++it;
    }
}

Polynomial filter_x_dominant(const Polynomial& p, int var) {
    const VariableSpace& sp = p.space();
    int hi = sp.position(Axis::X, var);
    int lo = sp.position(Axis::X, var - 1);
    Polynomial out(sp);
    for (const auto& [m, c] : p.terms())
        if (m.exp_at(hi) <= m.exp_at(lo))
            out.add_term(m, c);
    return out;
}

Support run_stream(const FactorStream& stream, const VariableSpace& space,
                   const SignedPermutation* target, int max_len, bool x_dominant) {
    Support sup;
    sup.emplace(SignedPermutation::identity(stream.family),
                Polynomial::one(space));
    const std::size_t n_atoms = stream.atoms.size();
    for (std::size_t ai = 0; ai < n_atoms; ++ai) {
        const Atom& a = stream.atoms[ai];
        for (const GenStep& st : atom_steps(a, stream.family, stream.rank)) {
            Dyadic scale(st.scale * a.sign);
            Support next = sup;
            for (const auto& [u, poly] : sup) {
                SignedPermutation v = u.times_s(st.g);
                if (v.length() != u.length() + 1 || v.length() > max_len) continue;
                Polynomial contrib = poly.times_variable(a.axis, a.var, scale);
                auto [it, fresh] = next.emplace(v, contrib);
                if (!fresh) {
                    it->second += contrib;
                    if (it->second.is_zero()) next.erase(it);
                }
            }
            sup = std::move(next);
            if (target) prune_to_interval(sup, *target);
        }
        bool x_boundary =
            a.axis == Axis::X && a.var >= 2 &&
            (ai + 1 == n_atoms || stream.atoms[ai + 1].axis != Axis::X ||
             stream.atoms[ai + 1].var != a.var);
        if (x_dominant && x_boundary) {
            for (auto it = sup.begin(); it != sup.end();) {
                it->second = filter_x_dominant(it->second, a.var);
                if (it->second.is_zero())
                    it = sup.erase(it);
                else
                    ++it;
            }
        }
    }
    return sup;
}

int stream_rank_for(const SignedPermutation& w, int minimum = 1) {
    return std::max(w.rank(), minimum);
}

} // namespace

Polynomial nc_evaluate(const FactorStream& stream, const SignedPermutation& target,
                       const VariableSpace& space, bool x_dominant) {
    if (target.family() != stream.family)
        throw std::invalid_argument("target family does not match the stream");
    if (target.rank() > stream.rank)
        throw std::invalid_argument("stream rank too small for target");
    Support sup = run_stream(stream, space, &target, target.length(), x_dominant);
    auto it = sup.find(target);
    Polynomial out = it == sup.end() ? Polynomial(space) : it->second;
    if (!x_dominant && !out.is_homogeneous(target.length()))
        throw std::logic_error("evaluation lost homogeneity");
    return out;
}

std::map<SignedPermutation, Polynomial> nc_expand(const FactorStream& stream,
                                                  const VariableSpace& space,
                                                  int max_len) {
    return run_stream(stream, space, nullptr, max_len, false);
}

Polynomial stanley(const SignedPermutation& w, StanleyFlavor flavor,
                   const VariableSpace& sp, bool x_dominant) {
    FactorStream s;
    switch (flavor) {
        case StanleyFlavor::F:
            if (w.family() != Family::BC)
                throw std::invalid_argument("F takes a family BC element");
            s.family = Family::BC;
            s.rank = stream_rank_for(w);
            for (int i = 1; i <= sp.nx; ++i) s.atoms.push_back(atom_C(i));
            break;
        case StanleyFlavor::E:
            if (w.family() != Family::D)
                throw std::invalid_argument("E takes a family D element");
            s.family = Family::D;
            s.rank = stream_rank_for(w, 2);
            for (int i = 1; i <= sp.nx; ++i) s.atoms.push_back(atom_D(i));
            break;
        case StanleyFlavor::G:
            if (w.family() != Family::A)
                throw std::invalid_argument("G takes a family A element");
            s.family = Family::A;
            s.rank = stream_rank_for(w);
            for (int j = 1; j <= sp.ny; ++j)
                s.atoms.push_back(atom_A(1, Axis::Y, j, 1));
            break;
    }
    return nc_evaluate(s, w, sp, x_dominant);
}

Polynomial stanley_G_block(const SignedPermutation& w, const VariableSpace& sp,
                           Axis axis, int lo, int hi, int sign) {
    if (w.family() != Family::A)
        throw std::invalid_argument("G takes a family A element");
    FactorStream s;
    s.family = Family::A;
    s.rank = stream_rank_for(w);
    for (int j = lo; j <= hi; ++j) s.atoms.push_back(atom_A(1, axis, j, sign));
    return nc_evaluate(s, w, sp);
}

Polynomial schubert_poly(const SignedPermutation& w, SchubertFlavor flavor,
                         const VariableSpace& sp, int rank, bool x_dominant) {
    FactorStream s;
    s.family = w.family();
    int n = rank > 0 ? rank : stream_rank_for(w, flavor == SchubertFlavor::D ? 2 : 1);
    if (n < w.rank()) throw std::invalid_argument("rank too small for element");
    s.rank = n;

    if (flavor == SchubertFlavor::A) {
        if (w.family() != Family::A)
            throw std::invalid_argument("flavor A takes a family A element");
        for (int i = 1; i <= n - 1; ++i)
            if (i <= sp.ny) s.atoms.push_back(atom_A(i, Axis::Y, i, 1));
        return nc_evaluate(s, w, sp);
    }

    if ((flavor == SchubertFlavor::C || flavor == SchubertFlavor::B) &&
        w.family() != Family::BC)
        throw std::invalid_argument("flavors C and B take a family BC element");
    if (flavor == SchubertFlavor::D && w.family() != Family::D)
        throw std::invalid_argument("flavor D takes a family D element");

    for (int j = n - 1; j >= 1; --j)
        if (j <= sp.nz) s.atoms.push_back(atom_Atilde(j, Axis::Z, j, 1));
    for (int i = 1; i <= sp.nx; ++i)
        s.atoms.push_back(flavor == SchubertFlavor::D ? atom_D(i) : atom_C(i));
    for (int i = 1; i <= n - 1; ++i)
        if (i <= sp.ny) s.atoms.push_back(atom_A(i, Axis::Y, i, 1));

    Polynomial out = nc_evaluate(s, w, sp, x_dominant);
    if (flavor == SchubertFlavor::B)
        out = out.scaled(Dyadic::half_power(w.neg_count()));
    return out;
}

Polynomial schubert_A_shifted(const SignedPermutation& w, const VariableSpace& sp,
                              Axis axis, int offset, int sign) {
    if (w.family() != Family::A)
        throw std::invalid_argument("AS takes a family A element");
    FactorStream s;
    s.family = Family::A;
    s.rank = stream_rank_for(w);
    for (int i = 1; i <= s.rank - 1; ++i) {
        if (offset + i <= sp.count(axis))
            s.atoms.push_back(atom_A(i, axis, offset + i, sign));
    }
    return nc_evaluate(s, w, sp);
}

Polynomial mixed_stanley(const SignedPermutation& w, MixedFlavor flavor,
                         const VariableSpace& sp, bool x_dominant) {
    bool type_d = flavor == MixedFlavor::I || flavor == MixedFlavor::IDouble;
    bool dbl = flavor == MixedFlavor::JDouble || flavor == MixedFlavor::IDouble;
    if (type_d && w.family() != Family::D)
        throw std::invalid_argument("I takes a family D element");
    if (!type_d && w.family() != Family::BC)
        throw std::invalid_argument("J takes a family BC element");
    FactorStream s;
    s.family = w.family();
    s.rank = stream_rank_for(w, type_d ? 2 : 1);
    if (dbl)
        for (int j = sp.nz; j >= 1; --j)
            s.atoms.push_back(atom_Atilde(1, Axis::Z, j, 1));
    for (int i = 1; i <= sp.nx; ++i)
        s.atoms.push_back(type_d ? atom_D(i) : atom_C(i));
    for (int j = 1; j <= sp.ny; ++j) s.atoms.push_back(atom_A(1, Axis::Y, j, 1));
    return nc_evaluate(s, w, sp, x_dominant);
}

} // namespace schubert
