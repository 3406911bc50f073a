#pragma once
// Partitions, k-strict partitions with types, and the bijections with
// k-Grassmannian elements of each family.

#include <string>
#include <vector>

#include "schubert/weyl.hpp"

namespace schubert {

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    int part(int i) const {  // 1-based; zero beyond the length
        return i >= 1 && i <= length() ? parts_[i - 1] : 0;
    }
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    bool contains(const Partition& mu) const;  // μ ⊆ λ as diagrams
    bool is_strict() const;
    bool is_k_strict(int k) const;  // parts greater than k are distinct
    bool has_part(int v) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const;  // "(3,1)", "()" for empty
    static Partition parse(const std::string& s);

private:
    std::vector<int> parts_;
};

// k-strict partition with a type in {0,1,2}; type > 0 requires a part equal
// to k (the marker distinguishing the two family D variants).  Families A
// and BC always use type 0.
struct TypedPartition {
    Partition p;
    int k = 0;
    int type = 0;

    TypedPartition() = default;
    TypedPartition(Partition p_, int k_, int type_ = 0);

    // Shape-only key for contexts with no strictness constraint (Schur-S
    // expansions index arbitrary partitions): k = type = 0, no validation.
    static TypedPartition plain(Partition p_);

    bool operator==(const TypedPartition& o) const {
        return p == o.p && k == o.k && type == o.type;
    }
    bool operator<(const TypedPartition& o) const {
        if (p != o.p) return p < o.p;
        if (k != o.k) return k < o.k;
        return type < o.type;
    }

    std::string str() const;  // "(2,1)#1"; "#type" suffix omitted when 0
};

// w must be k-Grassmannian in its family; |result| = ℓ(w).
TypedPartition grassmannian_to_partition(const SignedPermutation& w, int k);

// Inverse direction; for family D the type picks between the two elements
// sharing the same underlying shape.
SignedPermutation partition_to_grassmannian(const TypedPartition& tp, Family f);

// Every partition with |λ| ≤ max_weight, parts ≤ max_part, and at most
// max_len rows (handy for test sweeps).
std::vector<Partition> partitions_up_to(int max_weight, int max_part, int max_len);

} // namespace schubert
