#include "schubert/transition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace schubert {

bool is_transition_stop(const SignedPermutation& w, int k) {
    return w.max_descent() <= k;
}

namespace {

void check_tree_args(const SignedPermutation& w, int k) {
    if (w.family() == Family::A)
        throw std::invalid_argument("transition trees need family BC or D");
    if (k < 0) throw std::invalid_argument("negative k");
    if (!w.is_increasing_up_to(k))
        throw std::invalid_argument("transition root must be increasing up to k: " + w.str());
}

} // namespace

std::vector<SignedPermutation> transition_children(const SignedPermutation& w, int k) {
    check_tree_args(w, k);
    if (is_transition_stop(w, k))
        throw std::invalid_argument("transition_children called on a stop node: " + w.str());

    int r = w.max_descent();
    int s = -1;
    for (int i = w.rank(); i > r; --i)
        if (w.at(i) < w.at(r)) {
            s = i;
            break;
        }
    // w has a descent at r, so position r+1 always qualifies.
    SignedPermutation v = w.times_t(r, s);

    std::set<SignedPermutation> out;
    for (int i = 1; i < r; ++i) {
        SignedPermutation c = v.times_t(i, r);
        if (c.length() == w.length()) out.insert(c);
    }
    // Any i beyond rank(w)+1 inflates the length, so the scan below is
    // exhaustive (see the audit in the transition tests).
    for (int i = 1; i <= w.rank() + 1; ++i) {
        if (w.family() == Family::D && i == r) continue;
        SignedPermutation c = v.times_tbar(std::min(i, r), std::max(i, r));
        if (c.length() == w.length()) out.insert(c);
    }
    return std::vector<SignedPermutation>(out.begin(), out.end());
}

TransitionTree transition_tree(const SignedPermutation& w, int k) {
    check_tree_args(w, k);
    TransitionTree t;
    t.root = w;
    t.k = k;
    t.nodes.push_back({w, -1, {}});
    int rank_cap = w.rank() + std::max(w.max_descent(), 0);

    for (int idx = 0; idx < static_cast<int>(t.nodes.size()); ++idx) {
        // Copy: growing t.nodes below invalidates references.
        SignedPermutation u = t.nodes[idx].w;
        if (!u.is_increasing_up_to(k))
            throw std::logic_error("transition node not increasing up to k: " + u.str());
        if (u.rank() > rank_cap)
            throw std::logic_error("transition node rank exceeds bound: " + u.str());
        if (is_transition_stop(u, k)) {
            if (!u.is_k_grassmannian(k))
                throw std::logic_error("transition leaf not k-Grassmannian: " + u.str());
            t.leaf_shapes[grassmannian_to_partition(u, k)] += 1;
            continue;
        }
        for (const SignedPermutation& c : transition_children(u, k)) {
            t.nodes.push_back({c, idx, {}});
            t.nodes[idx].children.push_back(static_cast<int>(t.nodes.size()) - 1);
        }
    }
    return t;
}

std::string TransitionTree::dot() const {
    std::string out = "digraph transition {\n";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Node& n = nodes[i];
        std::string label = n.w.str();
        if (n.children.empty())
            label += "\\n" + grassmannian_to_partition(n.w, k).str();
        out += "  n" + std::to_string(i) + " [label=\"" + label + "\"];\n";
    }
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (int c : nodes[i].children)
            out += "  n" + std::to_string(i) + " -> n" + std::to_string(c) + ";\n";
    out += "}\n";
    return out;
}

namespace {

using ShapeCounts = std::map<TypedPartition, long long, ShapeOrder>;

const ShapeCounts& leaf_counts(const SignedPermutation& w, int k) {
    static std::map<std::tuple<Family, int, std::vector<int>>, ShapeCounts> cache;
    std::tuple<Family, int, std::vector<int>> key{w.family(), k, w.window()};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    ShapeCounts out;
    if (is_transition_stop(w, k)) {
        out[grassmannian_to_partition(w, k)] = 1;
    } else {
        for (const SignedPermutation& c : transition_children(w, k))
            for (const auto& [shape, mult] : leaf_counts(c, k)) out[shape] += mult;
    }
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

} // namespace

BasisExpansion mixed_coeffs(const SignedPermutation& w, int k) {
    check_tree_args(w, k);
    BasisExpansion out;
    out.k = k;
    if (w.family() == Family::BC)
        out.basis = k == 0 ? BasisKind::SchurQ : BasisKind::Theta;
    else
        out.basis = k == 0 ? BasisKind::SchurP : BasisKind::Eta;
    for (const auto& [shape, mult] : leaf_counts(w, k))
        out.terms.emplace(shape, Dyadic(mult));
    return out;
}

BasisExpansion theta_product(const TypedPartition& mu, const TypedPartition& nu, int k) {
    if (mu.k != k || nu.k != k)
        throw std::invalid_argument("theta_product shapes must be k-strict for the given k");
    for (int part : nu.p.parts())
        if (part > k)
            throw std::invalid_argument("theta_product needs all parts of the second factor ≤ k");
    SignedPermutation wmu = partition_to_grassmannian(mu, Family::BC);
    SignedPermutation wnu = partition_to_grassmannian(nu, Family::BC);
    // All parts of ν are ≤ k, so wnu fixes the sign of every entry and its
    // window is an honest permutation; cross-embedding it past wmu gives a
    // product element whose mixed expansion multiplies the two thetas.
    SignedPermutation tail(Family::A, wnu.window());
    return mixed_coeffs(SignedPermutation::cross(wmu, tail), k);
}

BasisExpansion skew_q_expansion(const Partition& la, const Partition& mu) {
    if (!la.is_strict() || !mu.is_strict())
        throw std::invalid_argument("skew_q_expansion needs strict partitions");
    BasisExpansion out;
    out.basis = BasisKind::SchurQ;
    out.k = 0;
    if (!la.contains(mu)) return out;
    SignedPermutation wla = partition_to_grassmannian(TypedPartition(la, 0, 0), Family::BC);
    SignedPermutation wmu = partition_to_grassmannian(TypedPartition(mu, 0, 0), Family::BC);
    SignedPermutation w = wla * wmu.inverse();
    if (w.length() != la.weight() - mu.weight())
        throw std::logic_error("skew pair is not length-additive");
    return mixed_coeffs(w, 0);
}

} // namespace schubert
