#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace crystal {

/// Canonical vertex payload: a list of rows of signed letters.  Tableaux use
/// row 0 as the top row; other models pick their own convention, but every
/// payload must be a canonical encoding of the vertex.
using Rows = std::vector<std::vector<int>>;

struct VertexCapExceeded : std::runtime_error {
  explicit VertexCapExceeded(size_t cap)
      : std::runtime_error("vertex cap exceeded: " + std::to_string(cap)) {}
};

/// A finite crystal: an I-colored directed graph with f-edges (and their
/// inverse e-edges) plus a weight per vertex.
struct CrystalGraph {
  std::vector<Rows> vertices;          // discovery order (BFS layer, payload order)
  std::map<Rows, int> index;           // payload -> vertex id
  std::vector<int> colors;             // index set I
  std::vector<std::map<int, int>> f_edge, e_edge;  // per vertex: color -> target
  std::vector<std::vector<int>> weight;

  int find(const Rows& v) const {
    auto it = index.find(v);
    return it == index.end() ? -1 : it->second;
  }
  int f(int v, int i) const {
    auto it = f_edge[v].find(i);
    return it == f_edge[v].end() ? -1 : it->second;
  }
  int e(int v, int i) const {
    auto it = e_edge[v].find(i);
    return it == e_edge[v].end() ? -1 : it->second;
  }
  /// String statistics by edge walking.
  int eps(int v, int i) const {
    int c = 0;
    for (int w = e(v, i); w >= 0; w = e(w, i)) ++c;
    return c;
  }
  int phi(int v, int i) const {
    int c = 0;
    for (int w = f(v, i); w >= 0; w = f(w, i)) ++c;
    return c;
  }
  size_t size() const { return vertices.size(); }

  /// Vertices with e_i = null for every color (highest weight vertices).
  std::vector<int> highest_weight_vertices() const;

  /// Connected components after keeping only the given colors; returns a
  /// component id per vertex (ids ordered by smallest member vertex).
  std::vector<int> components(const std::vector<int>& kept_colors) const;

  /// True if the whole graph is connected over all colors.
  bool connected() const;
};

/// One deterministic step of a crystal operator on a payload; empty optional
/// means the operator kills the vertex.
using StepFn = std::function<std::optional<Rows>(const Rows&, int color, bool is_f)>;
using WeightFn = std::function<std::vector<int>(const Rows&)>;

/// Closure of a seed under all f_i and e_i.  Deterministic: vertices are
/// discovered layer by layer with each layer processed in payload order.
/// Consistency (f/e mutually inverse) is verified during generation.
CrystalGraph generate(const Rows& seed, const StepFn& step,
                      const std::vector<int>& colors, const WeightFn& weight_fn,
                      size_t cap = 200000);

}  // namespace crystal
