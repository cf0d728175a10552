#include "crystal/branching.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "crystal/dtableau.hpp"

namespace crystal {

namespace {

int strip_size(const std::vector<int>& outer, const std::vector<int>& inner) {
  int total = 0;
  for (size_t i = 0; i < outer.size(); ++i) {
    int in = i < inner.size() ? inner[i] : 0;
    total += outer[i] - in;
  }
  return total;
}

std::vector<int> trim_zeros(std::vector<int> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

std::string show_partition(const std::vector<int>& p) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) os << ",";
    os << p[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

int PMDiagram::plus_count() const { return strip_size(mu, lambda); }
int PMDiagram::minus_count() const { return strip_size(Lambda, mu); }

std::vector<PMDiagram> enumerate_pm_diagrams(const std::vector<int>& Lambda) {
  if (!is_partition(Lambda)) throw std::invalid_argument("outer shape is not a partition");
  const int m = static_cast<int>(Lambda.size());
  std::vector<PMDiagram> out;
  PMDiagram d;
  d.Lambda = Lambda;
  d.mu.assign(m, 0);
  d.lambda.assign(m, 0);
  // Row by row: Lambda_{i+1} <= mu_i <= Lambda_i keeps Lambda/mu a horizontal
  // strip, and mu_{i+1} <= lambda_i <= mu_i keeps mu/lambda one (the upper
  // bound on mu_i below enforces the first half of the latter).
  std::function<void(int)> rec2 = [&](int i) {
    if (i == m) {
      out.push_back(d);
      return;
    }
    int next_Lambda = i + 1 < m ? Lambda[i + 1] : 0;
    int mu_hi = Lambda[i];
    if (i > 0) mu_hi = std::min(mu_hi, d.lambda[i - 1]);  // mu_{i} <= lambda_{i-1}
    for (int mu_i = mu_hi; mu_i >= next_Lambda; --mu_i) {
      d.mu[i] = mu_i;
      for (int lambda_i = mu_i; lambda_i >= 0; --lambda_i) {
        d.lambda[i] = lambda_i;
        rec2(i + 1);
      }
    }
    d.mu[i] = d.lambda[i] = 0;
  };
  rec2(0);
  std::sort(out.begin(), out.end());
  return out;
}

Rows pm_to_hw_tableau(const PMDiagram& d, int n) {
  const auto& Lambda = d.Lambda;
  const int m = static_cast<int>(Lambda.size());
  if (m > n - 1) throw std::invalid_argument("shape has too many rows");
  Rows t(m);
  for (int r = 0; r < m; ++r) t[r].assign(Lambda[r], 0);

  // The minus boxes, ordered by column descending (a horizontal strip has
  // distinct columns, so the order is total).
  std::vector<std::pair<int, int>> minus_boxes;  // (row, col)
  for (int r = 0; r < m; ++r)
    for (int c = d.mu[r]; c < Lambda[r]; ++c) minus_boxes.push_back({r, c});
  std::sort(minus_boxes.begin(), minus_boxes.end(),
            [](const auto& a, const auto& b) { return a.second > b.second; });

  const int d_val = d.plus_count() - d.minus_count();

  auto fail = [&](const std::string& what) {
    throw std::runtime_error("pm_to_hw_tableau: " + what + " for diagram lambda=" +
                             show_partition(d.lambda) + " mu=" + show_partition(d.mu) +
                             " Lambda=" + show_partition(d.Lambda));
  };

  // Stage 1: p ones in row 1 from the left and q barred ones in the rightmost
  // minus boxes, p - q = d_val, with p + q maximal subject to legality.
  {
    bool placed = false;
    int p_hi = std::min<int>(Lambda.empty() ? 0 : Lambda[0],
                             static_cast<int>(minus_boxes.size()) + d_val);
    for (int p = p_hi; p >= std::max(0, d_val) && !placed; --p) {
      int q = p - d_val;
      if (q < 0 || q > static_cast<int>(minus_boxes.size())) continue;
      Rows trial = t;
      bool clash = false;
      for (int c = 0; c < p; ++c) trial[0][c] = 1;
      for (int k = 0; k < q && !clash; ++k) {
        auto [r, c] = minus_boxes[k];
        if (trial[r][c] != 0) clash = true;
        else trial[r][c] = -1;
      }
      if (clash || !validate_D_partial(trial, n).empty()) continue;
      t = trial;
      placed = true;
    }
    if (!placed) fail("no legal stage-1 placement");
  }

  // Stages i = 2..n.
  for (int i = 2; i <= n; ++i) {
    // (a) letters up to i-1 are final, so the still-empty boxes of row i-1
    // (1-based) can only hold i.
    if (i - 2 < m)
      for (int c = 0; c < Lambda[i - 2]; ++c)
        if (t[i - 2][c] == 0) t[i - 2][c] = i;

    // (b) x more i's in the leftmost empty boxes of row i (1-based) and y
    // barred i's in the rightmost unfilled minus boxes, with the i-weight
    // pinned to lambda_{i-1} and x + y maximal subject to legality.
    int cur = 0;
    for (const auto& row : t) cur += static_cast<int>(std::count(row.begin(), row.end(), i));
    const int target = i - 2 < m ? d.lambda[i - 2] : 0;

    std::vector<int> row_slots;  // empty columns of row i (1-based), left to right
    if (i - 1 < m)
      for (int c = 0; c < Lambda[i - 1]; ++c)
        if (t[i - 1][c] == 0) row_slots.push_back(c);
    std::vector<std::pair<int, int>> minus_slots;  // unfilled minus boxes, col desc
    for (const auto& box : minus_boxes)
      if (t[box.first][box.second] == 0) minus_slots.push_back(box);

    const int diff = target - cur;  // x - y
    bool placed = false;
    int x_hi = std::min<int>(static_cast<int>(row_slots.size()),
                             static_cast<int>(minus_slots.size()) + diff);
    for (int x = x_hi; x >= std::max(0, diff) && !placed; --x) {
      int y = x - diff;
      if (y < 0 || y > static_cast<int>(minus_slots.size())) continue;
      Rows trial = t;
      for (int k = 0; k < x; ++k) trial[i - 1][row_slots[k]] = i;
      for (int k = 0; k < y; ++k) trial[minus_slots[k].first][minus_slots[k].second] = -i;
      if (!validate_D_partial(trial, n).empty()) continue;
      t = trial;
      placed = true;
    }
    if (!placed) fail("no legal stage-" + std::to_string(i) + " placement");
  }

  for (const auto& row : t)
    for (int x : row)
      if (x == 0) fail("unfilled boxes remain");
  if (!validate_D(t, n).empty()) fail("result is not a valid tableau");
  auto w = weight_D(t, n);
  if (w[0] != d_val) fail("first weight coordinate disagrees");
  for (int k = 2; k <= n; ++k)
    if (w[k - 1] != (k - 2 < m ? d.lambda[k - 2] : 0))
      fail("inner weight disagrees at coordinate " + std::to_string(k));
  return t;
}

BranchDecomposition branch_decompose(const CrystalGraph& g, int n) {
  std::vector<int> kept;
  for (int i : g.colors)
    if (i >= 2 && i <= n) kept.push_back(i);
  auto comp = g.components(kept);
  int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;

  BranchDecomposition dec;
  dec.components.resize(ncomp);
  for (auto& c : dec.components) c.hw_vertex = -1;
  for (int v = 0; v < static_cast<int>(g.size()); ++v) {
    auto& c = dec.components[comp[v]];
    c.members.push_back(v);
    bool hw = true;
    for (int i : kept)
      if (g.e(v, i) >= 0) { hw = false; break; }
    if (hw) {
      if (c.hw_vertex >= 0)
        throw std::runtime_error("branch component with two highest weight vertices");
      c.hw_vertex = v;
    }
  }
  for (auto& c : dec.components) {
    if (c.hw_vertex < 0)
      throw std::runtime_error("branch component without a highest weight vertex");
    const auto& w = g.weight[c.hw_vertex];
    c.stratum = w[0];
    // A dominant D_{n-1} weight may have a negative last coordinate (the
    // conjugate of the component with the positive one); the label is the
    // underlying partition and conjugates count separately.
    std::vector<int> lab(w.begin() + 1, w.end());
    c.conjugate = !lab.empty() && lab.back() < 0;
    if (!lab.empty()) lab.back() = std::abs(lab.back());
    c.label = trim_zeros(std::move(lab));
    if (!is_partition(c.label))
      throw std::runtime_error("branch component label " + show_partition(c.label) +
                               " is not a partition");
    for (int v : c.members)
      if (g.weight[v][0] != c.stratum)
        throw std::runtime_error("stratum not constant on a branch component");
    ++dec.multiplicities[c.label];
  }
  return dec;
}

BCGraph bc_graph(const CrystalGraph& g, int n) {
  auto dec = branch_decompose(g, n);
  const int ncomp = static_cast<int>(dec.components.size());

  std::vector<int> order(ncomp);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& ca = dec.components[a];
    const auto& cb = dec.components[b];
    if (ca.stratum != cb.stratum) return ca.stratum > cb.stratum;
    return ca.label < cb.label;
  });
  std::vector<int> pos(ncomp);
  for (int k = 0; k < ncomp; ++k) pos[order[k]] = k;

  std::vector<int> comp_of(g.size());
  for (int k = 0; k < ncomp; ++k)
    for (int v : dec.components[k].members) comp_of[v] = k;

  BCGraph bc;
  for (int k = 0; k < ncomp; ++k) {
    const auto& c = dec.components[order[k]];
    bc.vertices.push_back({c.label, c.stratum});
  }
  for (int v = 0; v < static_cast<int>(g.size()); ++v) {
    int w = g.f(v, 1);
    if (w >= 0 && comp_of[v] != comp_of[w])
      bc.edges.insert({pos[comp_of[v]], pos[comp_of[w]]});
  }
  return bc;
}

namespace {

bool one_box_apart(const std::vector<int>& a, const std::vector<int>& b) {
  size_t m = std::max(a.size(), b.size());
  int total = 0;
  for (size_t i = 0; i < m; ++i) {
    int x = i < a.size() ? a[i] : 0;
    int y = i < b.size() ? b[i] : 0;
    total += std::abs(x - y);
  }
  return total == 1;
}

}  // namespace

BCGraph predicted_bc_rectangle(int k, int s) {
  if (k < 1 || s < 1) throw std::invalid_argument("rectangle must be nonempty");
  BCGraph bc;
  std::vector<std::pair<int, int>> span;  // per stratum (ordered s..-s): [begin, end)
  for (int j = s; j >= -s; --j) {
    int aj = std::abs(j);
    std::vector<std::vector<int>> labels;
    if (k == 1) {
      for (int a = 0; a <= s - aj; ++a)
        if ((s - a - aj) % 2 == 0) labels.push_back(trim_zeros({a}));
    } else {
      for (int a = s; a >= 0; --a)
        for (int b = a; b >= 0; --b)
          if (a - b >= aj && (a - b - aj) % 2 == 0) {
            std::vector<int> lab(k - 2, s);
            lab.push_back(a);
            lab.push_back(b);
            labels.push_back(trim_zeros(lab));
          }
    }
    std::sort(labels.begin(), labels.end());
    int begin = static_cast<int>(bc.vertices.size());
    for (auto& lab : labels) bc.vertices.push_back({std::move(lab), j});
    span.push_back({begin, static_cast<int>(bc.vertices.size())});
  }
  for (size_t t = 0; t + 1 < span.size(); ++t)
    for (int u = span[t].first; u < span[t].second; ++u)
      for (int v = span[t + 1].first; v < span[t + 1].second; ++v)
        if (one_box_apart(bc.vertices[u].first, bc.vertices[v].first))
          bc.edges.insert({u, v});
  return bc;
}

bool bc_is_stratum_symmetric(const BCGraph& g) {
  std::map<int, std::multiset<std::vector<int>>> by_stratum;
  for (const auto& [label, j] : g.vertices) by_stratum[j].insert(label);
  for (const auto& [j, labels] : by_stratum)
    if (by_stratum.count(-j) == 0 || by_stratum.at(-j) != labels) return false;
  return true;
}

bool bc_edges_one_box(const BCGraph& g) {
  for (const auto& [u, v] : g.edges)
    if (!one_box_apart(g.vertices[u].first, g.vertices[v].first)) return false;
  return true;
}

bool bc_edges_adjacent_strata(const BCGraph& g) {
  for (const auto& [u, v] : g.edges)
    if (g.vertices[u].second - g.vertices[v].second != 1) return false;
  return true;
}

BCGraph bc_product(const BCGraph& a, const BCGraph& b) {
  const int nb = static_cast<int>(b.vertices.size());
  std::vector<std::pair<std::vector<int>, int>> raw;
  for (const auto& [la, ja] : a.vertices)
    for (const auto& [lb, jb] : b.vertices) {
      std::vector<int> lab = la;
      lab.insert(lab.end(), lb.begin(), lb.end());
      std::sort(lab.begin(), lab.end(), std::greater<int>());
      raw.push_back({std::move(lab), ja + jb});
    }
  std::vector<int> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    if (raw[x].second != raw[y].second) return raw[x].second > raw[y].second;
    return raw[x].first < raw[y].first;
  });
  std::vector<int> pos(raw.size());
  for (size_t k = 0; k < order.size(); ++k) pos[order[k]] = static_cast<int>(k);

  BCGraph prod;
  for (int id : order) prod.vertices.push_back(raw[id]);
  for (const auto& [u, v] : a.edges)
    for (int w = 0; w < nb; ++w)
      prod.edges.insert({pos[u * nb + w], pos[v * nb + w]});
  for (const auto& [u, v] : b.edges)
    for (int w = 0; w < static_cast<int>(a.vertices.size()); ++w)
      prod.edges.insert({pos[w * nb + u], pos[w * nb + v]});
  return prod;
}

bool bc_same_labeled_graph(const BCGraph& a, const BCGraph& b) {
  auto vset = [](const BCGraph& g) {
    auto v = g.vertices;
    std::sort(v.begin(), v.end());
    return v;
  };
  if (vset(a) != vset(b)) return false;
  using Key = std::pair<std::pair<std::vector<int>, int>, std::pair<std::vector<int>, int>>;
  auto eset = [](const BCGraph& g) {
    std::multiset<Key> s;
    for (const auto& [u, v] : g.edges) s.insert({g.vertices[u], g.vertices[v]});
    return s;
  };
  return eset(a) == eset(b);
}

}  // namespace crystal
