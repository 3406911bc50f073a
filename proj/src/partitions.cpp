#include "schubert/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schubert {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
            throw std::invalid_argument("parts must be weakly decreasing and nonnegative");
    }
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    for (int i = 1; i <= part(1); ++i) {
        int c = 0;
        for (int p : parts_)
            if (p >= i) ++c;
        cols.push_back(c);
    }
    return Partition(std::move(cols));
}

bool Partition::contains(const Partition& mu) const {
    for (int i = 1; i <= mu.length(); ++i)
        if (part(i) < mu.part(i)) return false;
    return true;
}

bool Partition::is_strict() const { return is_k_strict(0); }

bool Partition::is_k_strict(int k) const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] > k && parts_[i] == parts_[i - 1]) return false;
    return true;
}

bool Partition::has_part(int v) const {
    return std::find(parts_.begin(), parts_.end(), v) != parts_.end();
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Partition Partition::parse(const std::string& s) {
    std::string body = s;
    if (!body.empty() && body.front() == '(') body = body.substr(1);
    if (!body.empty() && body.back() == ')') body.pop_back();
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t next = body.find(',', pos);
        if (next == std::string::npos) next = body.size();
        std::string tok = body.substr(pos, next - pos);
        if (!tok.empty()) parts.push_back(std::stoi(tok));
        pos = next + 1;
    }
    return Partition(std::move(parts));
}

TypedPartition::TypedPartition(Partition p_, int k_, int type_)
    : p(std::move(p_)), k(k_), type(type_) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    if (type < 0 || type > 2) throw std::invalid_argument("type must be 0, 1 or 2");
    if (!p.is_k_strict(k))
        throw std::invalid_argument("parts greater than k must be distinct");
    if (type > 0 && (k == 0 || !p.has_part(k)))
        throw std::invalid_argument("nonzero type requires a part equal to k");
}

TypedPartition TypedPartition::plain(Partition p_) {
    TypedPartition tp;
    tp.p = std::move(p_);
    return tp;
}

std::string TypedPartition::str() const {
    std::string s = p.str();
    if (type > 0) s += "#" + std::to_string(type);
    return s;
}

namespace {

// Column lengths μ_i from the u/ζ data: μ_i = u_i + i − k − 1 + #{j : ζ_j > u_i}.
int column_length(int u_i, int i, int k, const std::vector<int>& zeta) {
    int over = 0;
    for (int z : zeta)
        if (z > u_i) ++over;
    return u_i + i - k - 1 + over;
}

} // namespace

TypedPartition grassmannian_to_partition(const SignedPermutation& w, int k) {
    if (!w.is_k_grassmannian(k))
        throw std::invalid_argument("element is not " + std::to_string(k) +
                                    "-Grassmannian: " + w.str());
    Family f = w.family();

    if (f == Family::A) {
        std::vector<int> parts;
        for (int j = 1; j <= k; ++j) parts.push_back(w.at(k + 1 - j) - (k + 1 - j));
        return TypedPartition(Partition(std::move(parts)), k, 0);
    }

    // Window shape: (û_k, …, u_1, ζ̄_1, …, ζ̄_r, v ascending).
    std::vector<int> u(k), zeta;
    for (int i = 1; i <= k; ++i) u[i - 1] = std::abs(w.at(k + 1 - i));
    for (int pos = k + 1; w.at(pos) < 0; ++pos) zeta.push_back(-w.at(pos));
    int r = static_cast<int>(zeta.size());

    std::vector<int> rows;
    for (int j = 0; j < r; ++j)
        rows.push_back(f == Family::BC ? k + zeta[j] : k + zeta[j] - 1);
    std::vector<int> mu(k);
    for (int i = 1; i <= k; ++i) mu[i - 1] = column_length(u[i - 1], i, k, zeta);
    for (int j = r + 1;; ++j) {
        int row = 0;
        for (int i = 0; i < k; ++i)
            if (mu[i] >= j) ++row;
        if (row == 0) break;
        rows.push_back(row);
    }
    Partition lambda(std::move(rows));
    if (lambda.weight() != w.length())
        throw std::logic_error("shape weight mismatch for " + w.str());

    int type = 0;
    if (f == Family::D && k >= 1 && lambda.has_part(k)) type = w.at(1) > 0 ? 1 : 2;
    return TypedPartition(std::move(lambda), k, type);
}

SignedPermutation partition_to_grassmannian(const TypedPartition& tp, Family f) {
    const Partition& lambda = tp.p;
    const int k = tp.k;

    if (f == Family::A) {
        if (tp.type != 0) throw std::invalid_argument("family A shapes carry type 0");
        if (lambda.length() > k)
            throw std::invalid_argument("family A needs at most k rows");
        std::vector<int> win(k);
        std::vector<char> used(k + lambda.part(1) + 1, 0);
        for (int i = 1; i <= k; ++i) {
            win[i - 1] = i + lambda.part(k + 1 - i);
            used[win[i - 1]] = 1;
        }
        for (int v = 1; v < static_cast<int>(used.size()); ++v)
            if (!used[v]) win.push_back(v);
        return SignedPermutation(Family::A, std::move(win));
    }
    if (f == Family::BC && tp.type != 0)
        throw std::invalid_argument("family BC shapes carry type 0");

    // Rows above k give ζ; family D shifts by one and may append ζ_r = 1.
    std::vector<int> zeta;
    for (int j = 1; j <= lambda.length() && lambda.part(j) > k; ++j)
        zeta.push_back(f == Family::BC ? lambda.part(j) - k : lambda.part(j) - k + 1);
    if (f == Family::D) {
        bool padded = false;
        if (k == 0) {
            padded = zeta.size() & 1;  // bar count must stay even
        } else if (lambda.has_part(k)) {
            if (tp.type == 0)
                throw std::invalid_argument("family D needs type 1 or 2 here");
            // type 1 ⇔ unbarred û_k ⇔ even r
            padded = (tp.type == 1) == ((zeta.size() & 1) != 0);
        } else if (tp.type != 0) {
            throw std::invalid_argument("type must be 0 without a part equal to k");
        }
        if (padded) zeta.push_back(1);
    }
    const int r = static_cast<int>(zeta.size());

    Partition conj = lambda.conjugate();
    std::vector<int> u(k);
    for (int i = 1; i <= k; ++i) {
        int target = conj.part(i) + k + 1 - i;
        int found = 0;
        for (int cand = 1; cand <= target && !found; ++cand) {
            if (std::find(zeta.begin(), zeta.end(), cand) != zeta.end()) continue;
            if (column_length(cand, i, k, zeta) == conj.part(i)) found = cand;
        }
        if (!found) throw std::logic_error("no window entry fits shape " + tp.str());
        u[i - 1] = found;
    }

    int n = k + r;
    for (int v : u) n = std::max(n, v);
    for (int z : zeta) n = std::max(n, z);
    std::vector<char> used(n + 1, 0);
    for (int v : u) used[v] = 1;
    for (int z : zeta) used[z] = 1;

    std::vector<int> win;
    for (int i = k; i >= 1; --i) win.push_back(u[i - 1]);
    if (f == Family::D && k >= 1 && (r & 1)) win[0] = -win[0];
    for (int z : zeta) win.push_back(-z);
    for (int v = 1; v <= n; ++v)
        if (!used[v]) win.push_back(v);

    SignedPermutation w(f, std::move(win));
    if (w.length() != lambda.weight() || !w.is_k_grassmannian(k))
        throw std::logic_error("bijection produced a bad element for " + tp.str());
    return w;
}

std::vector<Partition> partitions_up_to(int max_weight, int max_part, int max_len) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        out.emplace_back(std::vector<int>(cur));
        if (static_cast<int>(cur.size()) == max_len) return;
        for (int p = std::min(cap, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, max_weight, max_part);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace schubert
