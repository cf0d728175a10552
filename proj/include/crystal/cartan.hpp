#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace crystal {

/// Cartan data for the algebras used by the artifact: finite type D_n, its
/// untwisted affinization, and C2.
struct CartanData {
  std::string type_tag;            // "D", "D_affine", or "C2"
  int rank = 0;                    // n (classical rank)
  std::vector<int> nodes;          // index set I (1..n, or 0..n for affine)
  std::vector<std::vector<int>> a; // Cartan matrix, indexed by position in nodes
  std::vector<int> central_coeffs; // coefficients of c on nodes (affine only)

  int node_pos(int i) const;
  int aij(int i, int j) const;     // entry by node labels
};

CartanData cartan_D(int n);
CartanData cartan_D_affine(int n);
/// C2 with node labels {1,2}; (a12, a21) = (-2, -1), the choice under which
/// the string-length identity phi - eps = <h_i, wt> holds for the tableau
/// model (verified by test on B(varpi_1)).
CartanData cartan_C2();

/// Simple root alpha_i of D_n in the Z^n epsilon-basis:
/// alpha_i = e_i - e_{i+1} for i < n, alpha_n = e_{n-1} + e_n.
std::vector<int> simple_root_D(int i, int n);

/// alpha_1 = e_1 - e_2, alpha_2 = 2 e_2 for C2 (epsilon-basis of Z^2).
std::vector<int> simple_root_C2(int i);

/// <h_i, w> for a classical D_n weight w in the epsilon-basis.
long long pairing_D(int i, const std::vector<int>& w, int n);

/// <h_i, w> for a C2 weight in the epsilon-basis: i=1 -> w1 - w2, i=2 -> w2.
long long pairing_C2(int i, const std::vector<int>& w);

/// Dimension of the irreducible so(2n) module with highest weight the
/// partition lambda (spin-free), by the Weyl dimension formula in exact
/// integer arithmetic.
long long weyl_dim_D(std::vector<long long> lambda, int n);

/// Dimension of the irreducible sp(4) module with highest weight the
/// partition (l1, l2).
long long weyl_dim_C2(long long l1, long long l2);

}  // namespace crystal
