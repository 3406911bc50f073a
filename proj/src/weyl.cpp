#include "schubert/weyl.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace schubert {

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::BC: return "BC";
        default: return "D";
    }
}

Family parse_family(const std::string& s) {
    if (s == "A" || s == "a") return Family::A;
    if (s == "B" || s == "C" || s == "BC" || s == "b" || s == "c" || s == "bc")
        return Family::BC;
    if (s == "D" || s == "d") return Family::D;
    throw std::invalid_argument("unknown family: " + s);
}

SignedPermutation::SignedPermutation(Family f, std::vector<int> window)
    : family_(f), w_(std::move(window)), length_(0) {
    canonicalize();
}

void SignedPermutation::canonicalize() {
    const int n = static_cast<int>(w_.size());
    std::vector<char> seen(n + 1, 0);
    int negs = 0;
    for (int v : w_) {
        int a = v < 0 ? -v : v;
        if (a < 1 || a > n || seen[a])
            throw std::invalid_argument("window is not a signed permutation");
        seen[a] = 1;
        if (v < 0) ++negs;
    }
    if (family_ == Family::A && negs > 0)
        throw std::invalid_argument("family A window must be positive");
    if (family_ == Family::D && (negs & 1))
        throw std::invalid_argument("family D window needs an even number of bars");
    while (!w_.empty() && w_.back() == static_cast<int>(w_.size())) w_.pop_back();

    long long inv = 0, extra = 0;
    const int m = static_cast<int>(w_.size());
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j)
            if (w_[i] > w_[j]) ++inv;
        if (w_[i] < 0) {
            if (family_ == Family::BC) extra += -w_[i];
            else if (family_ == Family::D) extra += -w_[i] - 1;
        }
    }
    length_ = static_cast<int>(inv + extra);
}

int SignedPermutation::neg_count() const {
    int s = 0;
    for (int v : w_)
        if (v < 0) ++s;
    return s;
}

bool SignedPermutation::has_descent(int r) const {
    if (r < 0) return false;
    if (r == 0) {
        if (family_ == Family::A) return false;
        if (family_ == Family::BC) return at(1) < 0;
        return at(1) + at(2) < 0;
    }
    return at(r) > at(r + 1);
}

std::vector<int> SignedPermutation::descent_set() const {
    std::vector<int> d;
    for (int r = 0; r <= rank(); ++r)
        if (has_descent(r)) d.push_back(r);
    return d;
}

int SignedPermutation::max_descent() const {
    for (int r = rank(); r >= 0; --r)
        if (has_descent(r)) return r;
    return -1;
}

bool SignedPermutation::is_increasing_up_to(int k) const {
    if (family_ == Family::D && k <= 1) return true;
    for (int r = 0; r < k; ++r)
        if (has_descent(r)) return false;
    return true;
}

bool SignedPermutation::is_k_grassmannian(int k) const {
    for (int r : descent_set()) {
        if (r == k) continue;
        if (family_ == Family::D && k == 1 && r == 0) continue;
        return false;
    }
    return true;
}

SignedPermutation SignedPermutation::times_s(int r) const {
    if (r < 0) throw std::invalid_argument("generator index must be >= 0");
    if (r == 0 && family_ == Family::A)
        throw std::invalid_argument("family A has no generator s_0");
    std::vector<int> v = w_;
    int need = r == 0 ? (family_ == Family::D ? 2 : 1) : r + 1;
    while (static_cast<int>(v.size()) < need) v.push_back(static_cast<int>(v.size()) + 1);
    if (r == 0) {
        if (family_ == Family::BC) {
            v[0] = -v[0];
        } else {
            std::swap(v[0], v[1]);
            v[0] = -v[0];
            v[1] = -v[1];
        }
    } else {
        std::swap(v[r - 1], v[r]);
    }
    return SignedPermutation(family_, std::move(v));
}

SignedPermutation SignedPermutation::times_t(int i, int j) const {
    if (i < 1 || j < i) throw std::invalid_argument("t_ij needs 1 <= i <= j");
    std::vector<int> v = w_;
    while (static_cast<int>(v.size()) < j) v.push_back(static_cast<int>(v.size()) + 1);
    std::swap(v[i - 1], v[j - 1]);
    return SignedPermutation(family_, std::move(v));
}

SignedPermutation SignedPermutation::times_tbar(int i, int j) const {
    if (i < 1 || j < i) throw std::invalid_argument("tbar_ij needs 1 <= i <= j");
    if (family_ == Family::A)
        throw std::invalid_argument("family A has no barred reflections");
    if (family_ == Family::D && i == j)
        throw std::invalid_argument("tbar_ii breaks the family D sign parity");
    std::vector<int> v = w_;
    while (static_cast<int>(v.size()) < j) v.push_back(static_cast<int>(v.size()) + 1);
    if (i == j) {
        v[i - 1] = -v[i - 1];
    } else {
        int a = v[i - 1], b = v[j - 1];
        v[i - 1] = -b;
        v[j - 1] = -a;
    }
    return SignedPermutation(family_, std::move(v));
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& v) const {
    Family f;
    if (family_ == v.family_) f = family_;
    else if (family_ == Family::A) f = v.family_;
    else if (v.family_ == Family::A) f = family_;
    else throw std::invalid_argument("cannot compose BC with D");
    int n = std::max(rank(), v.rank());
    std::vector<int> out(n);
    for (int i = 1; i <= n; ++i) {
        int j = v.at(i);
        out[i - 1] = j > 0 ? at(j) : -at(-j);
    }
    return SignedPermutation(f, std::move(out));
}

SignedPermutation SignedPermutation::inverse() const {
    std::vector<int> out(rank());
    for (int i = 1; i <= rank(); ++i) {
        int j = w_[i - 1];
        if (j > 0) out[j - 1] = i;
        else out[-j - 1] = -i;
    }
    return SignedPermutation(family_, std::move(out));
}

SignedPermutation SignedPermutation::cross(const SignedPermutation& w,
                                           const SignedPermutation& v) {
    if (v.family() != Family::A)
        throw std::invalid_argument("cross: right factor must be family A");
    int n = w.rank();
    std::vector<int> out = w.window();
    for (int i = 1; i <= v.rank(); ++i) out.push_back(v.at(i) + n);
    return SignedPermutation(w.family(), std::move(out));
}

SignedPermutation SignedPermutation::phi_embed(int n) const {
    if (family_ == Family::A)
        throw std::invalid_argument("phi_embed expects a signed family");
    if (rank() > n) throw std::invalid_argument("phi_embed: rank exceeds n");
    std::vector<int> out(2 * n);
    for (int i = 1; i <= n; ++i) {
        int u = at(n + 1 - i);
        out[i - 1] = u > 0 ? n + 1 - u : n - u;
    }
    for (int i = n + 1; i <= 2 * n; ++i) out[i - 1] = 2 * n + 1 - out[2 * n - i];
    return SignedPermutation(Family::A, std::move(out));
}

bool SignedPermutation::operator<(const SignedPermutation& o) const {
    if (family_ != o.family_) return family_ < o.family_;
    return w_ < o.w_;
}

std::string SignedPermutation::str() const { return str_padded(1); }

std::string SignedPermutation::str_padded(int n) const {
    std::string s;
    int m = std::max(n, rank());
    for (int i = 1; i <= m; ++i) {
        if (i > 1) s += ",";
        s += std::to_string(at(i));
    }
    return s;
}

SignedPermutation SignedPermutation::parse(Family f, const std::string& s) {
    std::vector<int> v;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        std::string tok = s.substr(pos, next - pos);
        if (!tok.empty()) v.push_back(std::stoi(tok));
        pos = next + 1;
    }
    return SignedPermutation(f, std::move(v));
}

std::vector<SignedPermutation> all_elements(Family f, int n) {
    std::vector<SignedPermutation> out;
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 1);
    do {
        int maxmask = f == Family::A ? 1 : (1 << n);
        for (int mask = 0; mask < maxmask; ++mask) {
            if (f == Family::D && (std::popcount(static_cast<unsigned>(mask)) & 1))
                continue;
            std::vector<int> w = base;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) w[i] = -w[i];
            out.emplace_back(f, std::move(w));
        }
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

std::vector<std::vector<int>> reduced_words(const SignedPermutation& w) {
    if (w.is_identity()) return {{}};
    std::vector<std::vector<int>> out;
    for (int r : w.descent_set()) {
        for (auto& word : reduced_words(w.times_s(r))) {
            word.push_back(r);
            out.push_back(std::move(word));
        }
    }
    return out;
}

namespace {
long long count_words_rec(const SignedPermutation& w, int m,
                          std::map<std::pair<std::vector<int>, int>, long long>& memo) {
    if (w.is_identity()) return 1;
    auto key = std::make_pair(w.window(), m);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long long total = 0;
    for (int r : w.descent_set()) {
        if (m > 0 && r == 0) continue;
        total += count_words_rec(w.times_s(r), m > 0 ? m - 1 : 0, memo);
    }
    memo[key] = total;
    return total;
}
} // namespace

long long count_type_m_words(const SignedPermutation& w, int m) {
    if (m > w.length()) return 0;
    std::map<std::pair<std::vector<int>, int>, long long> memo;
    return count_words_rec(w, m, memo);
}

std::vector<std::pair<SignedPermutation, SignedPermutation>>
reduced_factorizations_right_A(const SignedPermutation& w) {
    std::vector<std::pair<SignedPermutation, SignedPermutation>> out;
    for (const auto& v : all_elements(Family::A, std::max(w.rank(), 1))) {
        SignedPermutation u = w * v.inverse();
        if (u.length() + v.length() == w.length()) out.emplace_back(u, v);
    }
    return out;
}

std::vector<std::pair<SignedPermutation, SignedPermutation>>
reduced_factorizations_left_A(const SignedPermutation& w) {
    std::vector<std::pair<SignedPermutation, SignedPermutation>> out;
    for (const auto& u : all_elements(Family::A, std::max(w.rank(), 1))) {
        SignedPermutation v = u.inverse() * w;
        if (u.length() + v.length() == w.length()) out.emplace_back(u, v);
    }
    return out;
}

} // namespace schubert
