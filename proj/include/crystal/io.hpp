#pragma once

#include <string>

#include <json.hpp>

#include "crystal/graph.hpp"

namespace crystal {

/// Versioned JSON document for a crystal graph: vertices as row matrices of
/// signed letters, edges as (from, color, to) triples, weights per vertex.
nlohmann::json graph_to_json(const CrystalGraph& g);

/// Inverse of graph_to_json; load(save(g)) is graph-identical.
CrystalGraph graph_from_json(const nlohmann::json& j);

struct DotOptions {
  /// Colors drawn with a dashed pen (zero-arrows of affine crystals).
  std::vector<int> dashed_colors;
  /// Optional per-vertex annotation appended to the label.
  std::vector<std::string> extra_label;
  std::string graph_name = "crystal";
};

/// Deterministic DOT rendering: vertices in canonical order grouped into
/// rows by content (depth below the highest weight vertices), one distinct
/// pen color per edge color.
std::string graph_to_dot(const CrystalGraph& g, const DotOptions& opts = {});

/// Human-readable one-line rendering of a vertex payload, e.g. "1 2 / 3 -1".
std::string rows_to_string(const Rows& t);

/// DOT pen color assigned to an edge color (deterministic palette).
std::string pen_color(int color);

}  // namespace crystal
