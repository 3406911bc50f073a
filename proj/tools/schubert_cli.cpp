#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "schubert/table_data.hpp"
#include "schubert/transition.hpp"

using json = nlohmann::ordered_json;
using namespace schubert;

namespace {

int max_rank() {
    if (const char* s = std::getenv("SCHUBERT_MAX_RANK")) {
        int v = std::atoi(s);
        if (v > 0) return v;
    }
    return 8;
}

SignedPermutation parse_perm(const std::string& family, const std::string& csv) {
    SignedPermutation w = SignedPermutation::parse(parse_family(family), csv);
    if (w.rank() > max_rank())
        throw std::invalid_argument("rank " + std::to_string(w.rank()) +
                                    " exceeds SCHUBERT_MAX_RANK=" + std::to_string(max_rank()));
    return w;
}

json coeff_json(const Dyadic& c) {
    if (c.is_integer()) return json(static_cast<long long>(c.to_integer()));
    return json(c.str());
}

std::string term_symbol(const std::string& basis, int type) {
    if (basis == "theta") return "Θ";
    if (basis == "eta") return type == 2 ? "H'" : "H";
    if (basis == "schur-q") return "Q";
    if (basis == "schur-p") return "P";
    return "s";
}

std::string expansion_text(const BasisExpansion& exp, const std::string& basis) {
    if (exp.terms.empty()) return "0";
    std::string out;
    for (const auto& [tp, c] : exp.terms) {
        std::string term;
        if (!(c == Dyadic(1)) || tp.p.empty()) term = c.str();
        if (!tp.p.empty()) {
            if (!term.empty()) term += "*";
            term += term_symbol(basis, tp.type) + "_" + format_shape(tp.p);
        }
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

json expansion_terms_json(const BasisExpansion& exp, bool with_type) {
    json terms = json::array();
    for (const auto& [tp, c] : exp.terms) {
        json t;
        t["coeff"] = coeff_json(c);
        t["partition"] = tp.p.str();
        if (with_type) t["type"] = tp.type;
        terms.push_back(std::move(t));
    }
    return terms;
}

json split_terms_json(const SplitExpansion& se, bool drop_vanishing) {
    int q = se.b.empty() ? 1 : static_cast<int>(se.b.size());
    json terms = json::array();
    for (const auto& [tuple, coeff] : se.terms) {
        if (drop_vanishing && split_term_vanishes(tuple, se.a)) continue;
        json t;
        t["coeff"] = coeff;
        json parts = json::array();
        for (std::size_t j = 1; j <= tuple.size(); ++j) {
            bool mixed = se.family != Family::A && static_cast<int>(j) == q;
            parts.push_back(mixed ? tuple[j - 1].str() : tuple[j - 1].p.str());
        }
        t["partitions"] = std::move(parts);
        if (se.family == Family::D) t["type"] = tuple[q - 1].type;
        terms.push_back(std::move(t));
    }
    return terms;
}

struct ExpandArgs {
    std::string family, perm, basis, format = "text";
    int k = 0;
};

int run_expand(const ExpandArgs& args) {
    Family f = parse_family(args.family);
    SignedPermutation w = parse_perm(args.family, args.perm);
    BasisExpansion exp;
    if (args.basis == "theta") {
        if (f != Family::BC) throw std::invalid_argument("theta basis needs family B/C");
        exp = mixed_coeffs(w, args.k);
    } else if (args.basis == "eta") {
        if (f != Family::D) throw std::invalid_argument("eta basis needs family D");
        exp = mixed_coeffs(w, args.k);
    } else if (args.basis == "schur-q") {
        if (f != Family::BC) throw std::invalid_argument("schur-q basis needs family B/C");
        if (args.k != 0) throw std::invalid_argument("schur-q is the k = 0 case");
        exp = mixed_coeffs(w, 0);
    } else if (args.basis == "schur-p") {
        if (f != Family::D) throw std::invalid_argument("schur-p basis needs family D");
        if (args.k != 0) throw std::invalid_argument("schur-p is the k = 0 case");
        exp = mixed_coeffs(w, 0);
    } else if (args.basis == "schur-s") {
        if (f != Family::A) throw std::invalid_argument("schur-s basis needs family A");
        if (args.k != 0) throw std::invalid_argument("schur-s ignores k; pass 0");
        exp.basis = BasisKind::SchurS;
        for (const auto& [la, c] : schur_s_coeffs(w))
            exp.terms.emplace(TypedPartition::plain(la), Dyadic(c));
    } else {
        throw std::invalid_argument("unknown basis: " + args.basis);
    }

    if (args.format == "json") {
        json out;
        out["family"] = family_name(f);
        out["perm"] = w.str();
        out["k"] = args.k;
        out["basis"] = args.basis;
        out["terms"] = expansion_terms_json(exp, f == Family::D);
        std::cout << out.dump() << "\n";
    } else if (args.format == "text") {
        std::cout << expansion_text(exp, args.basis) << "\n";
    } else {
        throw std::invalid_argument("unknown format: " + args.format);
    }
    return 0;
}

struct TreeArgs {
    std::string family, perm, format = "dot";
    int k = 0;
};

int run_tree(const TreeArgs& args) {
    if (args.format != "dot") throw std::invalid_argument("tree output is DOT only");
    SignedPermutation w = parse_perm(args.family, args.perm);
    std::cout << transition_tree(w, args.k).dot();
    return 0;
}

struct GiambelliArgs {
    std::string family, perm, format = "text";
    std::vector<int> a, b;
};

int run_giambelli(const GiambelliArgs& args) {
    Family f = parse_family(args.family);
    SignedPermutation w = parse_perm(args.family, args.perm);
    DescentSequence seq{args.a, args.b};
    SplitExpansion se = split_coeffs(w, seq);
    int q = seq.has_b() ? static_cast<int>(seq.b.size()) : 1;

    if (args.format == "json") {
        json out;
        out["family"] = family_name(f);
        out["perm"] = w.str();
        out["a"] = args.a;
        if (seq.has_b()) out["b"] = args.b;
        out["basis"] = f == Family::A ? "schur-s" : (f == Family::D ? "eta" : "theta");
        out["terms"] = split_terms_json(se, false);
        std::cout << out.dump() << "\n";
    } else if (args.format == "text") {
        for (const auto& [tuple, coeff] : se.terms) {
            std::string line = std::to_string(coeff) + "\t(";
            for (std::size_t j = 1; j <= tuple.size(); ++j) {
                if (j > 1) line += ", ";
                bool mixed = f != Family::A && static_cast<int>(j) == q;
                line += mixed ? tuple[j - 1].str() : tuple[j - 1].p.str();
            }
            std::cout << line << ")\n";
        }
    } else {
        throw std::invalid_argument("unknown format: " + args.format);
    }
    return 0;
}

struct ProductArgs {
    std::string family, mu, nu, format = "text";
    int k = 0;
};

int run_product(const ProductArgs& args) {
    Family f = parse_family(args.family);
    if (f != Family::BC)
        throw std::invalid_argument("product needs family B/C");
    Partition mu = Partition::parse(args.mu);
    Partition nu = Partition::parse(args.nu);

    BasisExpansion exp;
    std::string basis;
    if (args.k >= 1) {
        basis = "theta";
        exp = theta_product(TypedPartition(mu, args.k, 0), TypedPartition(nu, args.k, 0),
                            args.k);
    } else {
        basis = "schur-p";
        if (!mu.is_strict() || !nu.is_strict())
            throw std::invalid_argument("k = 0 product needs strict partitions");
        exp.basis = BasisKind::SchurP;
        int total = mu.weight() + nu.weight();
        for (const Partition& la : partitions_up_to(total, total, total)) {
            if (la.weight() != total || !la.is_strict() || !la.contains(mu)) continue;
            Dyadic c = skew_q_expansion(la, mu).coeff(TypedPartition(nu, 0, 0));
            if (!c.is_zero()) exp.terms.emplace(TypedPartition(la, 0, 0), c);
        }
    }

    if (args.format == "json") {
        json out;
        out["family"] = family_name(f);
        out["k"] = args.k;
        out["mu"] = mu.str();
        out["nu"] = nu.str();
        out["basis"] = basis;
        out["terms"] = expansion_terms_json(exp, false);
        std::cout << out.dump() << "\n";
    } else if (args.format == "text") {
        std::cout << expansion_text(exp, basis) << "\n";
    } else {
        throw std::invalid_argument("unknown format: " + args.format);
    }
    return 0;
}

struct TableArgs {
    std::string family, format = "text";
    int rank = 3, inc = 1;
};

int run_table(const TableArgs& args) {
    Family f = parse_family(args.family);
    if (args.rank > max_rank())
        throw std::invalid_argument("rank exceeds SCHUBERT_MAX_RANK=" +
                                    std::to_string(max_rank()));
    if (args.format == "json") {
        json rows = json::array();
        for (const GeneratedRow& r : generated_table_rows(f, args.rank, args.inc)) {
            json row;
            row["perm"] = r.w.str_padded(args.rank);
            row["word"] = r.word;
            row["terms"] = split_terms_json(r.split, true);
            rows.push_back(std::move(row));
        }
        json out;
        out["family"] = family_name(f);
        out["rank"] = args.rank;
        out["increasing_up_to"] = args.inc;
        out["rows"] = std::move(rows);
        std::cout << out.dump() << "\n";
    } else if (args.format == "text") {
        for (const TableRow& r : generated_table(f, args.rank, args.inc))
            std::cout << r.window << "\t" << r.word << "\t" << r.expansion << "\n";
    } else {
        throw std::invalid_argument("unknown format: " + args.format);
    }
    return 0;
}

struct WordsArgs {
    std::string family, perm;
    int type_m = -1;
};

int run_words(const WordsArgs& args) {
    SignedPermutation w = parse_perm(args.family, args.perm);
    std::vector<std::string> words;
    for (const std::vector<int>& word : reduced_words(w)) {
        if (args.type_m >= 0) {
            if (static_cast<int>(word.size()) < args.type_m) continue;
            bool ok = true;
            for (std::size_t i = word.size() - args.type_m; i < word.size(); ++i)
                ok = ok && word[i] >= 1;
            if (!ok) continue;
        }
        std::string s;
        for (int g : word) s += std::to_string(g);
        words.push_back(std::move(s));
    }
    std::sort(words.begin(), words.end());
    for (const std::string& s : words) std::cout << s << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schubert polynomials, Stanley symmetric functions, and their expansions"};
    app.require_subcommand(1);

    ExpandArgs ex;
    CLI::App* expand = app.add_subcommand("expand", "expand a (mixed) Stanley function in a basis");
    expand->add_option("--family", ex.family)->required();
    expand->add_option("--k", ex.k);
    expand->add_option("--perm", ex.perm)->required();
    expand->add_option("--basis", ex.basis)->required();
    expand->add_option("--format", ex.format);

    TreeArgs tr;
    CLI::App* tree = app.add_subcommand("tree", "print a transition tree as DOT");
    tree->add_option("--family", tr.family)->required();
    tree->add_option("--k", tr.k);
    tree->add_option("--perm", tr.perm)->required();
    tree->add_option("--format", tr.format);

    GiambelliArgs gi;
    CLI::App* giambelli = app.add_subcommand("giambelli", "split expansion of a Schubert polynomial");
    giambelli->add_option("--family", gi.family)->required();
    giambelli->add_option("--perm", gi.perm)->required();
    giambelli->add_option("--a", gi.a)->required()->delimiter(',');
    giambelli->add_option("--b", gi.b)->delimiter(',');
    giambelli->add_option("--format", gi.format);

    ProductArgs pr;
    CLI::App* product = app.add_subcommand("product", "theta product / Q structure constants");
    product->add_option("--family", pr.family)->required();
    product->add_option("--k", pr.k);
    product->add_option("--mu", pr.mu)->required();
    product->add_option("--nu", pr.nu)->required();
    product->add_option("--format", pr.format);

    TableArgs ta;
    CLI::App* table = app.add_subcommand("table", "regenerate split-expansion table rows");
    table->add_option("--family", ta.family)->required();
    table->add_option("--rank", ta.rank)->required();
    table->add_option("--increasing-up-to", ta.inc);
    table->add_option("--format", ta.format);

    WordsArgs wo;
    CLI::App* words = app.add_subcommand("words", "list reduced words (lex order)");
    words->add_option("--family", wo.family)->required();
    words->add_option("--perm", wo.perm)->required();
    words->add_option("--type-m", wo.type_m);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (expand->parsed()) return run_expand(ex);
        if (tree->parsed()) return run_tree(tr);
        if (giambelli->parsed()) return run_giambelli(gi);
        if (product->parsed()) return run_product(pr);
        if (table->parsed()) return run_table(ta);
        if (words->parsed()) return run_words(wo);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
