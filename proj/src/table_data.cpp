#include "schubert/table_data.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

std::string format_shape(const Partition& p) {
    if (p.empty()) return "";
    if (p.length() == 1) return std::to_string(p.part(1));
    std::string out = "(";
    for (int i = 1; i <= p.length(); ++i) {
        if (i > 1) out += ",";
        out += std::to_string(p.part(i));
    }
    return out + ")";
}

bool split_term_vanishes(const std::vector<TypedPartition>& tuple,
                         const std::vector<int>& a) {
    for (std::size_t j = 2; j <= tuple.size(); ++j)
        if (tuple[j - 1].p.length() > a[j - 1] - a[j - 2]) return true;
    return false;
}

std::string render_split_expansion(const SplitExpansion& se) {
    if (!se.b.empty())
        throw std::invalid_argument("table rendering covers the single form only");
    const std::vector<int>& a = se.a;

    std::string out;
    for (const auto& [tuple, coeff] : se.terms) {
        if (split_term_vanishes(tuple, a)) continue;
        std::vector<std::string> factors;
        for (std::size_t j = 1; j <= tuple.size(); ++j) {
            const TypedPartition& tp = tuple[j - 1];
            if (tp.p.empty()) continue;
            if (j == 1 && se.family != Family::A) {
                std::string sym = se.family == Family::BC
                                      ? "Θ"
                                      : (tp.type == 2 ? "H'" : "H");
                factors.push_back(sym + "_" + format_shape(tp.p));
                continue;
            }
            int lo = j == 1 ? 1 : a[j - 2] + 1;
            int hi = a[j - 1];
            if (lo == hi) {
                std::string f = "y" + std::to_string(lo);
                if (tp.p.part(1) > 1) f += "^" + std::to_string(tp.p.part(1));
                factors.push_back(f);
            } else {
                factors.push_back("s_" + format_shape(tp.p) + "(y" + std::to_string(lo) +
                                  "..y" + std::to_string(hi) + ")");
            }
        }
        std::string term;
        if (coeff != 1 || factors.empty()) term = std::to_string(coeff);
        for (const std::string& f : factors) {
            if (!term.empty()) term += "*";
            term += f;
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out.empty() ? "0" : out;
}

std::string lexmin_word(const SignedPermutation& w) {
    SignedPermutation cur = w;
    std::string out;
    int first = cur.family() == Family::A ? 1 : 0;
    while (!cur.is_identity()) {
        bool moved = false;
        for (int g = first; g < cur.rank(); ++g) {
            SignedPermutation next =
                SignedPermutation::identity(cur.family()).times_s(g) * cur;
            if (next.length() == cur.length() - 1) {
                out += std::to_string(g);
                cur = next;
                moved = true;
                break;
            }
        }
        if (!moved) throw std::logic_error("no left descent found");
    }
    return out;
}

std::vector<GeneratedRow> generated_table_rows(Family f, int rank, int inc) {
    if (f == Family::A)
        throw std::invalid_argument("table generation covers the signed families");
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    if (inc < 0) throw std::invalid_argument("increasing-up-to must be nonnegative");

    DescentSequence seq;
    for (int i = inc; i <= std::max(inc, rank - 1); ++i) seq.a.push_back(i);

    std::vector<GeneratedRow> rows;
    for (const SignedPermutation& w : all_elements(f, rank)) {
        if (!w.is_increasing_up_to(inc)) continue;
        rows.push_back({w, lexmin_word(w), split_coeffs(w, seq)});
    }
    std::sort(rows.begin(), rows.end(), [rank](const GeneratedRow& x, const GeneratedRow& y) {
        if (x.w.length() != y.w.length()) return x.w.length() < y.w.length();
        std::vector<int> xw = x.w.window(), yw = y.w.window();
        for (int i = x.w.rank(); i < rank; ++i) xw.push_back(i + 1);
        for (int i = y.w.rank(); i < rank; ++i) yw.push_back(i + 1);
        return xw < yw;
    });
    return rows;
}

std::vector<TableRow> generated_table(Family f, int rank, int inc) {
    std::vector<TableRow> out;
    for (const GeneratedRow& r : generated_table_rows(f, rank, inc))
        out.push_back({r.w.str_padded(rank), r.word, render_split_expansion(r.split)});
    return out;
}

const std::vector<TableRow>& transcribed_table_c3() {
    static const std::vector<TableRow> rows = {
        {"1,2,3", "", "1"},
        {"1,3,2", "2", "Θ_1 + y2"},
        {"2,1,3", "1", "Θ_1"},
        {"2,-1,3", "01", "Θ_2"},
        {"2,3,1", "12", "Θ_2 + Θ_1*y2"},
        {"3,1,2", "21", "Θ_(1,1)"},
        {"1,-2,3", "101", "Θ_3"},
        {"2,3,-1", "012", "Θ_3 + Θ_2*y2"},
        {"3,-1,2", "021", "Θ_(2,1)"},
        {"3,2,1", "212", "Θ_(2,1) + Θ_(1,1)*y2"},
        {"1,-3,2", "2101", "Θ_4"},
        {"1,3,-2", "1012", "Θ_4 + Θ_3*y2"},
        {"3,-2,1", "1021", "Θ_(3,1)"},
        {"3,2,-1", "0212", "Θ_4 + Θ_(3,1) + Θ_(2,1)*y2"},
        {"1,2,-3", "21012", "Θ_5 + Θ_4*y2"},
        {"2,-3,1", "21021", "Θ_(4,1)"},
        {"3,-2,-1", "01021", "Θ_(3,2)"},
        {"3,1,-2", "10212", "Θ_(4,1) + Θ_(3,1)*y2"},
        {"2,-3,-1", "021021", "Θ_(4,2)"},
        {"2,1,-3", "210212", "Θ_(5,1) + Θ_(4,1)*y2"},
        {"3,-1,-2", "010212", "Θ_(4,2) + Θ_(3,2)*y2"},
        {"1,-3,-2", "1021021", "Θ_(4,3)"},
        {"2,-1,-3", "0210212", "Θ_(5,2) + Θ_(4,2)*y2"},
        {"1,-2,-3", "10210212", "Θ_(5,3) + Θ_(4,3)*y2"},
    };
    return rows;
}

const std::vector<TableRow>& transcribed_table_d3() {
    static const std::vector<TableRow> rows = {
        {"1,2,3", "", "1"},
        {"-2,-1,3", "0", "H'_1"},
        {"1,3,2", "2", "H_1 + H'_1 + y2"},
        {"2,1,3", "1", "H_1"},
        {"-3,-1,2", "20", "H'_(1,1)"},
        {"-2,3,-1", "02", "H_2 + H'_1*y2"},
        {"-1,-2,3", "01", "H_2"},
        {"2,3,1", "12", "H_2 + H_1*y2"},
        {"3,1,2", "21", "H_(1,1)"},
        {"-3,-2,1", "120", "H'_(2,1)"},
        {"-3,2,-1", "202", "H_3 + H'_(2,1) + H'_(1,1)*y2"},
        {"-1,-3,2", "201", "H_3"},
        {"-1,3,-2", "012", "H_3 + H_2*y2"},
        {"3,-2,-1", "021", "H_(2,1)"},
        {"3,2,1", "212", "H_3 + H_(2,1) + H_(1,1)*y2"},
        {"-3,1,-2", "1202", "H'_(3,1) + H'_(2,1)*y2"},
        {"-2,-3,1", "2120", "H'_(3,1)"},
        {"-1,2,-3", "2012", "H_4 + H_3*y2"},
        {"2,-3,-1", "2021", "H_(3,1)"},
        {"3,-1,-2", "0212", "H_(3,1) + H_(2,1)*y2"},
        {"-2,1,-3", "21202", "H'_(4,1) + H'_(3,1)*y2"},
        {"1,-3,-2", "12021", "H_(3,2)"},
        {"2,-1,-3", "20212", "H_(4,1) + H_(3,1)*y2"},
        {"1,-2,-3", "120212", "H_(4,2) + H_(3,2)*y2"},
    };
    return rows;
}

} // namespace schubert
