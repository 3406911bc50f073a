#pragma once
// Rank-3 golden rows for the split expansions of Schubert polynomials in the
// signed families, the renderer that prints them, and the generator that
// recomputes the same rows for arbitrary rank.

#include <string>
#include <vector>

#include "schubert/splitting.hpp"

namespace schubert {

struct TableRow {
    std::string window;     // full window, e.g. "3,-1,2"
    std::string word;       // one reduced word, generator digits
    std::string expansion;  // rendered split expansion
};

// "4" for a single part, "(3,1)" otherwise, "" for the empty shape.
std::string format_shape(const Partition& p);

// True when some permutation slot j ≥ 2 needs more rows than its block
// Y_j = {y_{a_{j−1}+1}, …, y_{a_j}} has variables (the Schur factor is 0).
bool split_term_vanishes(const std::vector<TypedPartition>& tuple,
                         const std::vector<int>& a);

// Compact display of a single-form split expansion: mixed slot as Θ (family
// BC) or H/H′ (family D, primed for type 2), permutation slots as Schur
// factors of their y-blocks (bare powers for one-variable blocks).  Vanishing
// terms are dropped.
std::string render_split_expansion(const SplitExpansion& se);

// Lexicographically smallest reduced word (greedy smallest left descent).
std::string lexmin_word(const SignedPermutation& w);

// Rows for all elements of rank `rank` increasing up to `inc`, with the
// block sequence a = (inc, inc+1, …, rank−1), sorted by length then window.
struct GeneratedRow {
    SignedPermutation w;
    std::string word;
    SplitExpansion split;
};
std::vector<GeneratedRow> generated_table_rows(Family f, int rank, int inc);
std::vector<TableRow> generated_table(Family f, int rank, int inc);

// Hand-checked reference rows for the rank-3 tables; their word column is
// one valid reduced word per element, not necessarily the lex-min one.
const std::vector<TableRow>& transcribed_table_c3();
const std::vector<TableRow>& transcribed_table_d3();

} // namespace schubert
