#pragma once
// Transition trees for signed permutations and the structure-constant maps
// they compute: expansions of mixed Stanley functions into theta shapes (or
// their even-orthogonal analogues), products of theta polynomials, and skew
// Schur-Q expansions.

#include <map>
#include <string>
#include <vector>

#include "schubert/partitions.hpp"
#include "schubert/symfunc.hpp"
#include "schubert/weyl.hpp"

namespace schubert {

// A node with last descent ≤ k recurses no further.
bool is_transition_stop(const SignedPermutation& w, int k);

// Children of a non-stop node w (increasing up to k, family BC or D).  With
// r the last descent and s the largest index past r with w_s < w_r, set
// v = w·t_rs; children are the length-preserving v·t_ir (i < r) and v·t̄_ir
// (family D: i ≠ r), sorted by window.
std::vector<SignedPermutation> transition_children(const SignedPermutation& w, int k);

struct TransitionTree {
    struct Node {
        SignedPermutation w;
        int parent = -1;
        std::vector<int> children;  // indexes into nodes; empty at leaves
    };

    SignedPermutation root;
    int k = 0;
    std::vector<Node> nodes;  // nodes[0] is the root, parents before children
    std::map<TypedPartition, long long, ShapeOrder> leaf_shapes;

    std::string dot() const;  // Graphviz rendering, deterministic node order
};

// Materializes the full tree and checks the structural guarantees: every
// node is increasing up to k, every leaf is k-Grassmannian, and no node's
// rank exceeds rank(root) + last descent of the root.
TransitionTree transition_tree(const SignedPermutation& w, int k);

// Leaf-shape counts of the tree rooted at w (memoized, no materialization).
// Basis tag: theta for BC (schur-q at k = 0), eta for D (schur-p at k = 0).
// w must be increasing up to k.
BasisExpansion mixed_coeffs(const SignedPermutation& w, int k);

// Coefficients of Θ_μ·Θ_ν in the Θ basis, for k-strict μ and ν with all
// parts of ν at most k (so its Grassmannian element is a permutation).
BasisExpansion theta_product(const TypedPartition& mu, const TypedPartition& nu, int k);

// Coefficients f with Q_{λ/μ} = Σ_ν f_ν Q_ν; empty when μ ⊄ λ.  Both
// arguments are strict partitions.
BasisExpansion skew_q_expansion(const Partition& la, const Partition& mu);

} // namespace schubert
