#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystal/graph.hpp"

namespace crystal {

/// Type D_n tableaux.  A tableau is stored as Rows: row 0 is the top row,
/// rows weakly decrease in length (partition shape), entries are signed
/// letters.  Skew/affine variants live in other modules.

struct Violation {
  int item;              // criterion item number (1-7)
  int row, col;          // 0-based anchor cell
  std::string detail;
};

/// Shape of a tableau (row lengths).
std::vector<int> shape_of(const Rows& t);

bool is_partition(const std::vector<int>& parts);

/// Validate a filling of partition shape against the seven-item criterion
/// for type D_n tableaux.  Empty result = valid.
std::vector<Violation> validate_D(const Rows& t, int n);

/// Same checks on a partial filling: zero entries are empty cells and every
/// check involving them is skipped (column heights still count empty cells).
std::vector<Violation> validate_D_partial(const Rows& t, int n);

/// Column word: columns left to right, each read bottom to top.
std::vector<int> column_word(const Rows& t);

/// Cell positions (row, col) in column-word order.
std::vector<std::pair<int, int>> column_word_cells(const Rows& t);

/// Classical weight in the Z^n epsilon-basis: w_k = #k - #k-bar.
std::vector<int> weight_D(const Rows& t, int n);

/// Kashiwara operator on a tableau via the signature rule on its column
/// word; nullopt when the operator kills the vertex.
std::optional<Rows> kashiwara(const Rows& t, int i, bool is_f, int n);

/// Highest weight tableau of a partition shape: row r filled with r+1.
Rows highest_weight_tableau(const std::vector<int>& shape, int n);

/// Generate all of B(shape) from the highest weight tableau.  Every vertex
/// is validated during generation.
CrystalGraph generate_B(const std::vector<int>& shape, int n, size_t cap = 200000);

/// tau: the Dynkin automorphism swapping n-1 and n when n is odd.
int tau_D(int i, int n);

/// Dual (*) map on a connected generated crystal, computed by transport:
/// the highest weight vertex maps to the lowest weight vertex and
/// f_i-edges transport to e_{tau(i)}-edges.  Returns the vertex permutation.
std::vector<int> dual_map(const CrystalGraph& b, int n);

/// Letterwise path for the dual of a tableau with at most two rows:
/// reverse the column word, star each letter (i <-> i-bar, except n <-> n
/// and n-bar <-> n-bar when n is odd), and rectify with the equivalence
/// relations.  Exponential-guard oracle; small inputs only.
std::optional<Rows> dual_letterwise_two_rows(const Rows& t, int n, size_t guard = 2000000);

}  // namespace crystal
