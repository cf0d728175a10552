#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crystal/dtableau.hpp"
#include "crystal/graph.hpp"

namespace crystal {

/// C2 tableaux over the alphabet 1 < 2 < 2bar < 1bar (encoded 1, 2, -2, -1),
/// their column words and star-signatures, the ABCD statistics with their
/// block analysis, and the minimal-relation machinery.

/// Validity: at most two weakly-increasing rows forming a partition shape,
/// strictly increasing columns, no column containing both 1 and 1bar, and no
/// 2x2 square with 2 in its top-left and 2bar in its bottom-right cell.
std::vector<Violation> validate_C2(const Rows& t);

/// (w1, w2) = (#1 - #1bar, #2 - #2bar).
std::vector<int> weight_C2(const Rows& t);

/// Two-cell columns emit (bottom, top) left to right, then the one-row cells
/// left to right.
std::vector<int> c2_column_word(const Rows& t);

/// (row, col) cell positions aligned with c2_column_word.
std::vector<std::pair<int, int>> c2_column_word_cells(const Rows& t);

/// i-signature over {+, -, *} of the column word.  For i = 1: '-' for 1 and
/// 2bar, '+' for 2 and 1bar.  For i = 2: '-' for 2, '+' for 2bar, '*' for
/// 1 and 1bar.
std::string c2_signature(const Rows& t, int i);

/// Kashiwara operator on a tableau via the reduced star-signature; nullopt
/// when the operator kills the vertex.  Validity of the result is asserted.
std::optional<Rows> c2_op(const Rows& t, int i, bool is_f);

/// Highest weight filling of a shape (row 1 all 1s, row 2 all 2s).
Rows c2_highest_weight(const std::vector<int>& shape);

/// Generate B(shape) from the highest weight filling under f_1, f_2.
CrystalGraph generate_C2(const std::vector<int>& shape, size_t cap = 200000);

struct ABCDStats {
  int A = 0;  // #2bar in the top row
  int B = 0;  // #2 in the top row + #1bar in the bottom row
  int C = 0;  // #2 in the top row
  int D = 0;  // #2bar in the bottom row
  bool operator==(const ABCDStats&) const = default;
};

ABCDStats abcd(const Rows& t);

enum class Block { left, right };

/// Predicted block of the entry e_i acts on: left iff A < B (i = 1) or
/// C < D (i = 2).
Block block_of_action(const Rows& t, int i);

/// Block classification of the entry e_i actually acts on (requires
/// e_i t != null): for i = 1, left = top-row 2 or bottom-row 1bar, right =
/// top-row 1bar; for i = 2, left = bottom-row 2bar, right = top-row 2bar.
Block actual_block(const Rows& t, int i);

/// Degree of the minimal homogeneous relation over t, from the statistics
/// table: row C<D -> 2 everywhere; row C=D -> 4, 7, 4, 2; row C>D ->
/// 2, 5, 4, 2 (columns A<B, A=B, A=B+1, A>B+1).  Requires e_1 t and e_2 t
/// nonnull.
int predict_degree(const Rows& t);

/// A pair of distinct raising-operator sequences from v (in application
/// order: seq[0] acts first) with equal color content reaching the same
/// vertex; seq1 starts with e_2, seq2 with e_1.
struct MinRelation {
  int degree = 0;
  std::vector<int> seq1, seq2;
};

/// Shortest homogeneous relation of length <= max_len over v, by exhaustive
/// search; nullopt if none exists within the bound.
std::optional<MinRelation> find_min_relation(const CrystalGraph& g, int v,
                                             int max_len = 7);

}  // namespace crystal
