#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crystal/dtableau.hpp"
#include "crystal/graph.hpp"

namespace crystal {

/// The affine crystal of two-row rectangular tableaux: the width-s tableaux
/// satisfying the row and column conditions and the long pattern exclusion
/// (but not the adjacent-duplication exclusion), with zero-arrows defined
/// through the sigma automorphism.

/// Affine validity of a 2 x s filling: rows weakly increase, columns are not
/// weakly decreasing, and no (n-1/n)...(n/n-1bar) or (n-1/nbar)...(nbar/n-1bar)
/// pattern appears in any pair of columns.  The adjacent-duplication rule of
/// classical two-row tableaux is intentionally not enforced.
std::vector<Violation> validate_affine(const Rows& T, int n);

/// The unique maximal run of (a/abar) columns witnessing the failure of the
/// classical adjacent-duplication rule.  `start` is the first removable
/// column, `m` the number of removable columns, `shape` in {1,2,3} records
/// which flanking pattern applies.
struct AConfiguration {
  int a = 0, m = 0, start = 0, shape = 0;
};

/// nullopt when T is classical (no removable run); throws when T is the
/// all-(1/1bar) tableau, which has no unique configuration.
std::optional<AConfiguration> find_a_configuration(const Rows& T, int n);

/// Height-two drop: identity on classical tableaux, the empty tableau on
/// (1/1bar)^s, otherwise removal of the m middle columns of the unique
/// a-configuration.
Rows drop_columns(const Rows& T, int n);

/// Height-two fill: inserts s-k equal columns at the unique admissible
/// filling location (or prepends/appends); inverse of drop_columns.
Rows fill_columns(const Rows& t, int n, int s);

/// The embedding of the width-i1 classical two-row crystal into the width-i2
/// one (i1 = width of t): slide-based, weight-coordinate preserving.  For
/// i2 < i1 this is the partial inverse; nullopt = not in the image.
std::optional<Rows> iota(const Rows& t, int i2, int n);

/// F_{2,s} after D_{2,s'}: widen an affine tableau of width s' to width s.
Rows upsilon(const Rows& T, int n, int s);

struct AffineCrystal {
  int n = 0, s = 0;
  CrystalGraph g;               // colors 0..n; vertices are 2 x s tableaux
  std::vector<int> component;   // classical component index k per vertex
  std::vector<int> stratum;     // first weight coordinate
  std::vector<int> bc_label1;   // first part of the branching label per vertex
  std::vector<int> sigma;       // the involution, as a vertex permutation
  std::vector<int> u_vertex;    // u_k (classical highest weight vertices), k=0..s

  int u(int k) const { return u_vertex.at(k); }
};

/// Assemble the full affine crystal: classical components of widths 0..s
/// joined by zero-arrows f_0 = sigma f_1 sigma.
AffineCrystal build_affine(int n, int s, size_t cap = 200000);

/// <c, eps(b)> with the affine central coefficients (1,1,2,...,2,1,1).
int level_of(const AffineCrystal& B, int v);

std::vector<int> minimal_elements(const AffineCrystal& B);

/// All dominant affine weights of level ell, as coefficient vectors
/// (k_0, ..., k_n) over the fundamental weights.
std::vector<std::vector<int>> level_weights(int n, int ell);

/// The minimal tableau with eps = phi = sum k_i Lambda_i (level must be s):
/// built middle-out in its widest-component form, then embedded.
Rows construct_minimal(const std::vector<int>& k, int n, int s);

struct PerfectReport {
  bool tensor_connected = false;
  bool extremal_unique = false;
  bool level_bound = false;
  bool eps_phi_bijections = false;
  int min_level = -1;
  std::string detail;
  bool pass() const {
    return tensor_connected && extremal_unique && level_bound && eps_phi_bijections;
  }
};

/// Machine-checkable parts of the perfectness definition at level ell:
/// connectedness of B (x) B, unique extremal-weight vertex, tightness of the
/// level bound (min level == ell), and the eps/phi bijections on the minimal
/// vertices.
PerfectReport check_perfect(const AffineCrystal& B, int ell);

/// Combinatorial R and local energy on B2 (x) B1 (left factor written
/// first; the left factor absorbs an operator when its eps beats the right
/// factor's phi).  Pairs are encoded v2 * |B1| + v1; images v1' * |B2| + v2'.
struct RMatrix {
  std::vector<int> image;
  std::vector<int> H;  // normalized so H(u (x) u) = 0
};
RMatrix combinatorial_R(const AffineCrystal& B2, const AffineCrystal& B1);

/// Intrinsic energy per vertex: D(b) = H(b (x) bnat) - H(u (x) bnat) where
/// bnat is the unique vertex with phi = s Lambda_0.  Equals k - s on the
/// width-k classical component; D(u_s) = 0.
std::vector<int> energy(const AffineCrystal& B);

/// One-dimensional sum over the vertices of classical weight lambda:
/// exponent -> count, exponents shifted by `shift`.
std::map<int, long long> one_dim_sum(const AffineCrystal& B, const std::vector<int>& lambda,
                                     int shift = 0);

/// Two-factor version on B2 (x) B1 using the intrinsic-energy formula
/// D(b2 (x) b1) = H(b2 (x) b1) + D(b1) + D(b2') with R(b2 (x) b1) = b1' (x) b2'.
std::map<int, long long> one_dim_sum_pair(const AffineCrystal& B2, const AffineCrystal& B1,
                                          const std::vector<int>& lambda, int shift = 0);

}  // namespace crystal
