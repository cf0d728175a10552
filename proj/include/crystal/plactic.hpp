#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "crystal/graph.hpp"

namespace crystal {

/// Word-level plactic machinery for type D: admissible columns, the
/// equivalence relations on words, and the two-row sliding engines used by
/// the affine constructions.

/// A column given top to bottom.  Admissible: length <= n and, for every
/// z in 1..n, N(z) = #{x in C : x <= z or x >= z-bar} <= z.
bool is_admissible_column(const std::vector<int>& top_to_bottom, int n);

/// True if `w` is the bottom-to-top reading of a valid column
/// (no consecutive w_k <= w_{k+1}).
bool is_column_word(const std::vector<int>& w, int n);

/// One-step neighbors of a word under the equivalence relations:
/// the three-letter exchange relations (applied in both directions on every
/// window) and the column contraction that erases a (z, z-bar) pair from a
/// minimally non-admissible consecutive column subword (shrinking only).
std::vector<std::vector<int>> lecouvey_neighbors(const std::vector<int>& w, int n);

/// Closure of a word under the relations; throws std::runtime_error if the
/// closure exceeds `cap` words.
std::set<std::vector<int>> lecouvey_closure(const std::vector<int>& w, int n,
                                            size_t cap = 2000000);

/// The unique straight tableau (at most n-1 rows) whose column word lies in
/// the closure of `w`; nullopt if none is found within the cap, throws if
/// more than one distinct tableau appears.
std::optional<Rows> rectify_word_via_closure(const std::vector<int>& w, int n,
                                             size_t cap = 2000000);

/// Two-row skew tableau: the bottom row occupies columns [0, bottom.size()),
/// the top row occupies columns [offset, offset + top.size()).
struct SkewTwoRow {
  int offset = 0;
  std::vector<int> top, bottom;
  bool operator==(const SkewTwoRow&) const = default;
};

struct SlideResult {
  SkewTwoRow skew;
  bool exited_top;  // the hole left at the right end of the top row
};

/// One inward slide: the hole enters at the inner corner (top row, column
/// offset-1) and travels down/right by the letter-changing slide rules until
/// it exits at the right end of the top or bottom row.  Throws on
/// configurations the rules do not cover.
SlideResult contraction_pass(const SkewTwoRow& s, int n);

/// One outward slide: a hole enters at the right end of the top row and
/// travels left until it reaches the inner boundary, which grows by one
/// (offset increases by 1, the top row gains a cell on the right).
SkewTwoRow expansion_pass(const SkewTwoRow& s, int n);

/// Rectify by repeated contraction; returns a straight tableau (one or two
/// rows; empty Rows for an empty skew).
Rows rectify(SkewTwoRow s, int n);

/// Locate the null configuration inside a two-row rectangular tableau:
/// returns (start column, width) of the widest match, or nullopt.  The null
/// configuration of width r is (1/2bar)^{r/2}(2/1bar)^{r/2} for even r and
/// (1/2bar)^{(r-1)/2}(2/2bar)(2/1bar)^{(r-1)/2} for odd r; its leading 1s
/// blend into the tableau's initial 1-run, so candidates are anchored at
/// L1 - floor(r/2) where L1 is the length of that run.
std::optional<std::pair<int, int>> find_null_configuration(const Rows& t);

/// Strip the leading 1s of the top row, the trailing 1-bars of the bottom
/// row, and the null configuration from a two-row rectangular tableau,
/// leaving a skew tableau.
SkewTwoRow reduced_form(const Rows& t);

/// reduced_form followed by rectify.
Rows completely_reduced_form(const Rows& t, int n);

}  // namespace crystal
