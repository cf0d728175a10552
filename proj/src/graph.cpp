#include "crystal/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace crystal {

std::vector<int> CrystalGraph::highest_weight_vertices() const {
  std::vector<int> out;
  for (size_t v = 0; v < vertices.size(); ++v) {
    bool hw = true;
    for (int i : colors)
      if (e(static_cast<int>(v), i) >= 0) {
        hw = false;
        break;
      }
    if (hw) out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<int> CrystalGraph::components(const std::vector<int>& kept) const {
  std::vector<int> comp(vertices.size(), -1);
  int next = 0;
  for (size_t s = 0; s < vertices.size(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    std::queue<int> q;
    q.push(static_cast<int>(s));
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int i : kept)
        for (int w : {f(v, i), e(v, i)})
          if (w >= 0 && comp[w] < 0) {
            comp[w] = next;
            q.push(w);
          }
    }
    ++next;
  }
  return comp;
}

bool CrystalGraph::connected() const {
  if (vertices.empty()) return true;
  auto comp = components(colors);
  return *std::max_element(comp.begin(), comp.end()) == 0;
}

CrystalGraph generate(const Rows& seed, const StepFn& step,
                      const std::vector<int>& colors, const WeightFn& weight_fn,
                      size_t cap) {
  CrystalGraph g;
  g.colors = colors;
  auto add_vertex = [&](const Rows& payload) {
    if (g.vertices.size() >= cap) throw VertexCapExceeded(cap);
    int id = static_cast<int>(g.vertices.size());
    g.vertices.push_back(payload);
    g.index.emplace(payload, id);
    g.f_edge.emplace_back();
    g.e_edge.emplace_back();
    g.weight.push_back(weight_fn(payload));
    return id;
  };
  add_vertex(seed);

  std::vector<int> layer = {0};
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end(), [&](int a, int b) {
      return g.vertices[a] < g.vertices[b];
    });
    std::vector<int> next_layer;
    for (int v : layer) {
      for (int i : colors) {
        for (bool is_f : {true, false}) {
          auto img = step(g.vertices[v], i, is_f);
          if (!img) continue;
          int w = g.find(*img);
          if (w < 0) {
            w = add_vertex(*img);
            next_layer.push_back(w);
          }
          auto& fwd = is_f ? g.f_edge : g.e_edge;
          auto& bwd = is_f ? g.e_edge : g.f_edge;
          auto it = fwd[v].find(i);
          if (it != fwd[v].end() && it->second != w)
            throw std::logic_error("nondeterministic step function");
          fwd[v][i] = w;
          auto jt = bwd[w].find(i);
          if (jt != bwd[w].end() && jt->second != v)
            throw std::logic_error("crystal edges are not mutually inverse");
          bwd[w][i] = v;
        }
      }
    }
    layer = std::move(next_layer);
  }

  // Edge bidirectionality: every recorded edge must have its inverse.
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    for (auto [i, w] : g.f_edge[v])
      if (g.e(w, i) != static_cast<int>(v))
        throw std::logic_error("missing inverse e-edge");
    for (auto [i, w] : g.e_edge[v])
      if (g.f(w, i) != static_cast<int>(v))
        throw std::logic_error("missing inverse f-edge");
  }
  return g;
}

}  // namespace crystal
