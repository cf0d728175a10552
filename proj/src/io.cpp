#include "crystal/io.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace crystal {

using nlohmann::json;

json graph_to_json(const CrystalGraph& g) {
  json j;
  j["format_version"] = 1;
  j["colors"] = g.colors;
  j["vertices"] = g.vertices;
  j["weights"] = g.weight;
  json edges = json::array();
  for (size_t v = 0; v < g.size(); ++v)
    for (const auto& [color, to] : g.f_edge[v])
      edges.push_back({static_cast<int>(v), color, to});
  j["edges"] = std::move(edges);
  return j;
}

CrystalGraph graph_from_json(const json& j) {
  if (j.at("format_version").get<int>() != 1)
    throw std::runtime_error("unsupported graph format version");
  CrystalGraph g;
  g.colors = j.at("colors").get<std::vector<int>>();
  g.vertices = j.at("vertices").get<std::vector<Rows>>();
  g.weight = j.at("weights").get<std::vector<std::vector<int>>>();
  for (size_t v = 0; v < g.vertices.size(); ++v)
    g.index[g.vertices[v]] = static_cast<int>(v);
  g.f_edge.resize(g.vertices.size());
  g.e_edge.resize(g.vertices.size());
  for (const auto& e : j.at("edges")) {
    int from = e.at(0).get<int>(), color = e.at(1).get<int>(), to = e.at(2).get<int>();
    g.f_edge.at(from)[color] = to;
    g.e_edge.at(to)[color] = from;
  }
  return g;
}

std::string rows_to_string(const Rows& t) {
  std::ostringstream os;
  if (t.empty()) return "()";
  for (size_t r = 0; r < t.size(); ++r) {
    if (r) os << " / ";
    for (size_t c = 0; c < t[r].size(); ++c) {
      if (c) os << ' ';
      os << t[r][c];
    }
  }
  return os.str();
}

std::string pen_color(int color) {
  static const char* palette[] = {"gray40",     "red",    "blue",     "forestgreen",
                                  "darkorange", "purple", "saddlebrown", "deeppink",
                                  "teal",       "olive"};
  if (color >= 0 && color < 10) return palette[color];
  return palette[color % 10];
}

std::string graph_to_dot(const CrystalGraph& g, const DotOptions& opts) {
  // Depth below the highest weight vertices along f-edges; used to collect
  // vertices into content rows.
  std::vector<int> depth(g.size(), -1);
  std::queue<int> q;
  for (int v : g.highest_weight_vertices()) {
    depth[v] = 0;
    q.push(v);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const auto& [color, w] : g.f_edge[v])
      if (depth[w] < 0) {
        depth[w] = depth[v] + 1;
        q.push(w);
      }
  }
  int max_depth = 0;
  for (int d : depth) max_depth = std::max(max_depth, d);

  std::ostringstream os;
  os << "digraph " << opts.graph_name << " {\n";
  os << "  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (size_t v = 0; v < g.size(); ++v) {
    os << "  v" << v << " [label=\"" << rows_to_string(g.vertices[v]);
    if (v < opts.extra_label.size() && !opts.extra_label[v].empty())
      os << "\\n" << opts.extra_label[v];
    os << "\"];\n";
  }
  for (int d = 0; d <= max_depth; ++d) {
    os << "  { rank=same;";
    for (size_t v = 0; v < g.size(); ++v)
      if (depth[v] == d) os << " v" << v << ";";
    os << " }\n";
  }
  for (size_t v = 0; v < g.size(); ++v)
    for (const auto& [color, w] : g.f_edge[v]) {
      bool dashed = std::find(opts.dashed_colors.begin(), opts.dashed_colors.end(),
                              color) != opts.dashed_colors.end();
      os << "  v" << v << " -> v" << w << " [label=\"" << color << "\", color=\""
         << pen_color(color) << "\", fontcolor=\"" << pen_color(color) << "\"";
      if (dashed) os << ", style=dashed";
      os << "];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace crystal
