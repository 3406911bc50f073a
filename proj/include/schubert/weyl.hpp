#pragma once
// Signed permutations for the classical families: A = symmetric groups,
// BC = hyperoctahedral groups, D = even-signed subgroups.

#include <string>
#include <vector>

namespace schubert {

enum class Family { A, BC, D };

std::string family_name(Family f);
Family parse_family(const std::string& s);

// Window notation: w_i = w(i), barred entries stored as negatives.
// Canonical form strips trailing fixed points, so W_n embeds in W_{n+1}.
class SignedPermutation {
public:
    SignedPermutation() : family_(Family::A), length_(0) {}
    SignedPermutation(Family f, std::vector<int> window);
    static SignedPermutation identity(Family f) { return SignedPermutation(f, {}); }

    Family family() const { return family_; }
    const std::vector<int>& window() const { return w_; }
    int rank() const { return static_cast<int>(w_.size()); }
    int at(int i) const { return i <= rank() ? w_[i - 1] : i; }  // 1-based
    bool is_identity() const { return w_.empty(); }
    int length() const { return length_; }
    int neg_count() const;  // s(w)

    std::vector<int> descent_set() const;
    bool has_descent(int r) const;
    int max_descent() const;  // −1 when none
    bool is_increasing_up_to(int k) const;
    // Descents contained in {k} (family D, k = 1: contained in {0, 1}).
    bool is_k_grassmannian(int k) const;

    SignedPermutation times_s(int r) const;             // w·s_r
    SignedPermutation times_t(int i, int j) const;      // w·t_ij, swap
    SignedPermutation times_tbar(int i, int j) const;   // w·t̄_ij, swap + bar (i=j: bar)
    SignedPermutation operator*(const SignedPermutation& v) const;  // (wv)(i)=w(v(i))
    SignedPermutation inverse() const;

    // (w_1,…,w_n, v_1+n,…,v_m+n) with n = rank(w); v must be family A.
    static SignedPermutation cross(const SignedPermutation& w, const SignedPermutation& v);

    // Embedding of W_n into S_2n: ω(i) = n+1−w_{n+1−i} for unbarred entries,
    // n+|w_{n+1−i}| for barred ones, extended by ω(i)+ω(2n+1−i) = 2n+1.
    SignedPermutation phi_embed(int n) const;

    bool operator==(const SignedPermutation& o) const {
        return family_ == o.family_ && w_ == o.w_;
    }
    bool operator!=(const SignedPermutation& o) const { return !(*this == o); }
    bool operator<(const SignedPermutation& o) const;

    std::string str() const;                 // "3,-1,2"
    std::string str_padded(int n) const;     // padded with fixed points
    static SignedPermutation parse(Family f, const std::string& s);

private:
    void canonicalize();

    Family family_;
    std::vector<int> w_;
    int length_;
};

// All elements of S_n / W_n / W̃_n as canonical forms.
std::vector<SignedPermutation> all_elements(Family f, int n);

// Complete enumeration via descent recursion; letters are generator indices.
std::vector<std::vector<int>> reduced_words(const SignedPermutation& w);

// Number of reduced words whose last m letters are all positive.
long long count_type_m_words(const SignedPermutation& w, int m);

// Length-additive factorizations w = u·v with v in the symmetric group
// generated by s_1,…,s_{rank−1} (and the mirror-image version u ∈ S_rank).
std::vector<std::pair<SignedPermutation, SignedPermutation>>
reduced_factorizations_right_A(const SignedPermutation& w);
std::vector<std::pair<SignedPermutation, SignedPermutation>>
reduced_factorizations_left_A(const SignedPermutation& w);

} // namespace schubert
