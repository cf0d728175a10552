#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "crystal/graph.hpp"

namespace crystal {

/// Branching of B(Lambda) from D_n to D_{n-1} (removing color 1), its
/// plus/minus-diagram bookkeeping, and the branching-component graph.

/// A +/- diagram: partitions lambda <= mu <= Lambda (as padded row-length
/// vectors of equal size).  The + boxes fill mu minus lambda, the - boxes
/// fill Lambda minus mu; both are horizontal strips in distinct columns.
struct PMDiagram {
  std::vector<int> lambda, mu, Lambda;
  bool operator==(const PMDiagram&) const = default;
  auto operator<=>(const PMDiagram&) const = default;
  int plus_count() const;
  int minus_count() const;
};

/// All +/- diagrams with outer shape Lambda:
/// Lambda_{i+1} <= mu_i <= Lambda_i and mu_{i+1} <= lambda_i <= mu_i.
std::vector<PMDiagram> enumerate_pm_diagrams(const std::vector<int>& Lambda);

/// The greedy filling sending a +/- diagram to the D_{n-1} highest weight
/// tableau of shape Lambda and inner weight lambda (colors 2..n kill it).
Rows pm_to_hw_tableau(const PMDiagram& d, int n);

/// One {2..n}-component of a generated crystal.
struct BranchComponent {
  int hw_vertex;                // the D_{n-1} highest weight vertex
  std::vector<int> label;       // partition: weight coordinates 2..n (last in
                                // absolute value), trimmed
  int stratum;                  // first weight coordinate (constant on the component)
  bool conjugate;               // raw last weight coordinate of the highest
                                // weight vertex is negative (spin-conjugate
                                // partner; only possible for full-height labels)
  std::vector<int> members;     // vertex ids
};

struct BranchDecomposition {
  std::vector<BranchComponent> components;
  std::map<std::vector<int>, int> multiplicities;  // label -> count
};

/// Decompose a generated D_n crystal under the subalgebra spanned by colors
/// 2..n.  Throws if some component lacks a unique highest weight vertex.
BranchDecomposition branch_decompose(const CrystalGraph& g, int n);

/// Branching-component graph: one vertex per component, an edge v -> w when
/// some member of v has an f_1 arrow into w.  Vertices are sorted by
/// (stratum descending, label) and carry (label, stratum).
struct BCGraph {
  std::vector<std::pair<std::vector<int>, int>> vertices;  // (label, stratum)
  std::set<std::pair<int, int>> edges;
  bool operator==(const BCGraph&) const = default;
};

BCGraph bc_graph(const CrystalGraph& g, int n);

/// Predicted branching-component graph of B(k varpi_2) = B(rectangle k x s):
/// stratum j >= 0 holds, for k >= 2, the labels (s^{k-2}, a, b) with
/// s >= a >= b >= 0, a - b >= j, a - b = j (mod 2); for k = 1 the labels (a)
/// with 0 <= a <= s - j, s - a = j (mod 2).  Negative strata mirror, and
/// edges join Young-adjacent labels in adjacent strata.
BCGraph predicted_bc_rectangle(int k, int s);

/// Structural checks used by the verification suites.
bool bc_is_stratum_symmetric(const BCGraph& g);  // strata j and -j carry equal label multisets
bool bc_edges_one_box(const BCGraph& g);         // every edge joins labels differing by one box
bool bc_edges_adjacent_strata(const BCGraph& g);

/// Directed graph product with concatenated vertex labels (the comparison
/// target of the factorization experiment).
BCGraph bc_product(const BCGraph& a, const BCGraph& b);

/// Equality as labeled graphs: same vertex multiset and same multiset of
/// edges keyed by endpoint (label, stratum) pairs.
bool bc_same_labeled_graph(const BCGraph& a, const BCGraph& b);

}  // namespace crystal
