#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystal/cartan.hpp"
#include "crystal/graph.hpp"

namespace crystal {

/// Local difference statistics at a vertex for an ordered color pair (i, j):
/// Delta uses e_i, Nabla uses f_i.  Only defined where the corresponding
/// operator exists.
struct LocalStats {
  std::optional<int> delta_eps, delta_phi;  // eps_j(v)-eps_j(e_i v), phi_j(v)-phi_j(e_i v)
  std::optional<int> nabla_eps, nabla_phi;  // eps_j(v)-eps_j(f_i v), phi_j(v)-phi_j(f_i v)
};

LocalStats local_stats(const CrystalGraph& g, int v, int i, int j);

struct AxiomResult {
  std::string name;
  bool pass = true;
  long long checked = 0;       // number of vertex/color instances whose
                               // hypothesis fired
  std::string counterexample;  // description of the first failure, if any
  bool vacuous() const { return checked == 0; }
};

struct StembridgeReport {
  std::vector<AxiomResult> axioms;
  bool all_pass() const {
    for (const auto& a : axioms)
      if (!a.pass) return false;
    return true;
  }
};

/// Check the local axioms P1-P6 and the primed variants P5'/P6' on a finite
/// colored graph against a Cartan matrix.  `which` selects a subset by name
/// (empty = all).  The difference statistics are evaluated only where the
/// source defines them (both operators in the hypothesis exist) and only for
/// i != j.
StembridgeReport check_stembridge(const CrystalGraph& g, const CartanData& cartan,
                                  const std::vector<std::string>& which = {});

}  // namespace crystal
