#include "crystal/affine.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "crystal/branching.hpp"
#include "crystal/cartan.hpp"
#include "crystal/letters.hpp"
#include "crystal/plactic.hpp"

namespace crystal {

namespace {

int width(const Rows& t) { return t.empty() ? 0 : static_cast<int>(t[0].size()); }

bool all_one_onebar(const Rows& T) {
  if (T.empty()) return false;
  for (size_t c = 0; c < T[0].size(); ++c)
    if (T[0][c] != 1 || T[1][c] != -1) return false;
  return true;
}

std::string show(const Rows& t) {
  std::ostringstream os;
  os << "[";
  for (size_t r = 0; r < t.size(); ++r) {
    if (r) os << " / ";
    for (size_t c = 0; c < t[r].size(); ++c) {
      if (c) os << ",";
      os << t[r][c];
    }
  }
  os << "]";
  return os.str();
}

}  // namespace

std::vector<Violation> validate_affine(const Rows& T, int n) {
  std::vector<Violation> out;
  if (T.empty()) return out;
  if (T.size() != 2 || T[0].size() != T[1].size()) {
    out.push_back({0, 0, 0, "not a two-row rectangle"});
    return out;
  }
  const int s = width(T);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < s; ++c)
      if (!letter_valid(T[r][c], n)) {
        out.push_back({0, r, c, "invalid letter"});
        return out;
      }
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c + 1 < s; ++c)
      if (!letter_leq(T[r][c], T[r][c + 1], n))
        out.push_back({1, r, c, "row decreases"});
  for (int c = 0; c < s; ++c)
    if (letter_leq(T[1][c], T[0][c], n))
      out.push_back({2, 0, c, "column not increasing"});
  // Long pattern exclusion in its full (possibly non-adjacent) form: without
  // the adjacent-duplication rule the two flanking columns need not touch.
  for (int c = 0; c < s; ++c)
    for (int d = c + 1; d < s; ++d) {
      bool bad = (T[0][c] == n - 1 && T[1][c] == n && T[0][d] == n && T[1][d] == -(n - 1)) ||
                 (T[0][c] == n - 1 && T[1][c] == -n && T[0][d] == -n && T[1][d] == -(n - 1));
      if (bad) out.push_back({4, 0, c, "long pattern between columns"});
    }
  return out;
}

std::optional<AConfiguration> find_a_configuration(const Rows& T, int n) {
  const int s = width(T);
  if (s == 0) return std::nullopt;
  if (all_one_onebar(T))
    throw std::logic_error("the all-(1/1bar) tableau has no unique a-configuration");
  std::vector<AConfiguration> found;
  int c = 0;
  while (c < s) {
    int x = T[0][c];
    if (T[1][c] != -x) {
      ++c;
      continue;
    }
    int j = c;
    while (j < s && T[0][j] == x && T[1][j] == -x) ++j;
    int L = j - c;
    AConfiguration cfg;
    cfg.a = x;
    if (c > 0 && T[0][c - 1] == x) {
      cfg.shape = 1;
      cfg.m = L;
      cfg.start = c;
    } else if (j < s && T[1][j] == -x) {
      cfg.shape = 2;
      cfg.m = L;
      cfg.start = c;
    } else {
      cfg.shape = 3;
      cfg.m = L - 1;
      cfg.start = c;
    }
    if (cfg.m > 0) found.push_back(cfg);
    c = j;
  }
  if (found.empty()) return std::nullopt;
  if (found.size() > 1)
    throw std::logic_error("multiple a-configurations in " + show(T));
  return found[0];
}

Rows drop_columns(const Rows& T, int n) {
  if (T.empty()) return T;
  if (all_one_onebar(T)) return Rows{};
  auto cfg = find_a_configuration(T, n);
  if (!cfg) {
    if (!validate_D(T, n).empty())
      throw std::logic_error("no a-configuration in a non-classical tableau " + show(T));
    return T;
  }
  Rows out = T;
  for (int r = 0; r < 2; ++r)
    out[r].erase(out[r].begin() + cfg->start, out[r].begin() + cfg->start + cfg->m);
  return out;
}

Rows fill_columns(const Rows& t, int n, int s) {
  const int k = width(t);
  if (k > s) throw std::invalid_argument("fill target narrower than input");
  if (k == s) return t;
  if (s == 0) return Rows{};
  if (k == 0) {
    Rows out(2);
    out[0].assign(s, 1);
    out[1].assign(s, -1);
    return out;
  }
  auto insert_cols = [&](int pos, int letter) {
    Rows out = t;
    out[0].insert(out[0].begin() + pos, s - k, letter);
    out[1].insert(out[1].begin() + pos, s - k, -letter);
    return out;
  };
  std::vector<Rows> candidates;
  for (int i = 0; i + 1 < k; ++i) {
    int a = t[0][i], b = t[1][i], bn = t[1][i + 1], an = t[0][i + 1];
    if (letter_leq(b, -a, n) && letter_leq(-a, bn, n))
      candidates.push_back(insert_cols(i + 1, a));
    if (letter_leq(a, -bn, n) && letter_leq(-bn, an, n))
      candidates.push_back(insert_cols(i + 1, -bn));
  }
  Rows out;
  if (!candidates.empty()) {
    out = candidates.front();
    // The filling location may be ambiguous by one position; the result
    // must not depend on the choice.
    for (const auto& c : candidates)
      if (c != out) throw std::logic_error("fill location choice changed the result");
  } else {
    Rows pre = insert_cols(0, -t[1][0]);
    if (validate_affine(pre, n).empty() && letter_leq(-t[1][0], t[0][0], n))
      out = pre;
    else
      out = insert_cols(k, t[0][k - 1]);
  }
  if (!validate_affine(out, n).empty())
    throw std::logic_error("fill produced an invalid tableau from " + show(t));
  if (drop_columns(out, n) != t)
    throw std::logic_error("fill is not a section of drop at " + show(t));
  return out;
}

namespace {

// The canonical mixed block of width r that blends into a leading 1-run and
// a trailing 1bar-run.
void null_block(int r, std::vector<int>& tops, std::vector<int>& bots) {
  int lo = r / 2, hi = r - lo;  // odd width puts the extra column in the middle
  tops.clear();
  bots.clear();
  for (int i = 0; i < lo; ++i) tops.push_back(1);
  for (int i = lo; i < r; ++i) tops.push_back(2);
  for (int i = 0; i < hi; ++i) bots.push_back(-2);
  for (int i = hi; i < r; ++i) bots.push_back(-1);
}

}  // namespace

std::optional<Rows> iota(const Rows& t, int i2, int n) {
  const int i1 = width(t);
  if (i2 < 0) return std::nullopt;
  if (i2 == i1) return t;
  SkewTwoRow sk = reduced_form(t);
  if (i2 > i1) {
    for (int d = 0; d < i2 - i1; ++d) sk = expansion_pass(sk, n);
  } else {
    for (int d = 0; d < i1 - i2; ++d) {
      if (sk.offset == 0) return std::nullopt;
      if (sk.top.empty()) {
        --sk.offset;
      } else {
        auto r = contraction_pass(sk, n);
        if (!r.exited_top) return std::nullopt;
        sk = r.skew;
      }
    }
  }
  const int t1 = sk.offset;
  const int t2 = i2 - static_cast<int>(sk.bottom.size());
  if (t1 < 0 || t1 > i2 || t2 < 0 || t2 > i2) return std::nullopt;
  if (static_cast<int>(sk.top.size()) != i2 - t1)
    throw std::logic_error("slide changed the top-row length at " + show(t));
  const int r2 = std::max(0, t1 + t2 - i2);
  const int r1 = t1 - r2, r3 = t2 - r2;
  std::vector<int> tops, bots;
  null_block(r2, tops, bots);
  Rows out(2);
  out[0].assign(r1, 1);
  out[0].insert(out[0].end(), tops.begin(), tops.end());
  out[0].insert(out[0].end(), sk.top.begin(), sk.top.end());
  out[1] = sk.bottom;
  out[1].insert(out[1].end(), bots.begin(), bots.end());
  out[1].insert(out[1].end(), r3, -1);
  if (out[0].empty()) out = Rows{};
  if (!out.empty() && !validate_D(out, n).empty()) {
    if (i2 < i1) return std::nullopt;
    throw std::logic_error("widening produced an invalid tableau from " + show(t));
  }
  return out;
}

Rows upsilon(const Rows& T, int n, int s) { return fill_columns(drop_columns(T, n), n, s); }

// ---------------------------------------------------------------------------
// Assembly of the affine crystal.

namespace {

struct Ctx {
  int n, s;
  std::vector<CrystalGraph> G;                 // classical components, width 0..s
  std::vector<std::vector<int>> comp_of;       // per width, vertex -> component
  std::vector<BranchDecomposition> dec;        // per width
  std::vector<std::vector<int>> complement;    // per width, component -> component
  std::vector<std::vector<std::pair<int, int>>> parent;  // per width, vertex -> (parent, color)
  std::vector<std::map<int, std::pair<int, int>>> sigma_cache;  // per width

  Ctx(int n_, int s_, size_t cap) : n(n_), s(s_) {
    G.reserve(s + 1);
    for (int k = 0; k <= s; ++k) {
      if (k == 0) {
        CrystalGraph g;
        for (int i = 1; i <= n; ++i) g.colors.push_back(i);
        g.vertices = {Rows{}};
        g.index[Rows{}] = 0;
        g.f_edge.resize(1);
        g.e_edge.resize(1);
        g.weight = {std::vector<int>(n, 0)};
        G.push_back(std::move(g));
      } else {
        G.push_back(generate_B({k, k}, n, cap));
      }
    }
    comp_of.resize(s + 1);
    complement.resize(s + 1);
    parent.resize(s + 1);
    sigma_cache.resize(s + 1);
    for (int k = 0; k <= s; ++k) {
      dec.push_back(branch_decompose(G[k], n));
      const auto& comps = dec[k].components;
      comp_of[k].assign(G[k].size(), -1);
      for (size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c].members) comp_of[k][v] = static_cast<int>(c);
      // Complementary component: same label, opposite stratum.
      std::map<std::pair<std::vector<int>, int>, int> by_key;
      for (size_t c = 0; c < comps.size(); ++c)
        by_key[{comps[c].label, comps[c].stratum}] = static_cast<int>(c);
      complement[k].resize(comps.size());
      for (size_t c = 0; c < comps.size(); ++c) {
        auto it = by_key.find({comps[c].label, -comps[c].stratum});
        if (it == by_key.end())
          throw std::logic_error("branching component without a complement");
        complement[k][c] = it->second;
      }
      // Transport trees: each vertex is reachable from its component's
      // highest weight vertex by f-arrows of colors 2..n.
      parent[k].assign(G[k].size(), {-1, -1});
      std::vector<int> order;
      for (const auto& c : comps) order.push_back(c.hw_vertex);
      std::vector<bool> seen(G[k].size(), false);
      for (int h : order) seen[h] = true;
      for (size_t q = 0; q < order.size(); ++q) {
        int v = order[q];
        for (int i = 2; i <= n; ++i) {
          int w = G[k].f(v, i);
          if (w >= 0 && !seen[w]) {
            seen[w] = true;
            parent[k][w] = {v, i};
            order.push_back(w);
          }
        }
      }
      for (bool b : seen)
        if (!b) throw std::logic_error("transport tree did not reach every vertex");
    }
  }

  // The stratum-reversing involution within a classical component pair.
  int diamond(int k, int v) const {
    std::vector<int> colors_path;
    for (int w = v; parent[k][w].first >= 0; w = parent[k][w].first)
      colors_path.push_back(parent[k][w].second);
    int c = comp_of[k][v];
    int w = dec[k].components[complement[k][c]].hw_vertex;
    for (auto it = colors_path.rbegin(); it != colors_path.rend(); ++it) {
      w = G[k].f(w, *it);
      if (w < 0) throw std::logic_error("transport path broke in the complementary component");
    }
    return w;
  }

  std::pair<int, int> sigma(int k, int v) {
    auto it = sigma_cache[k].find(v);
    if (it != sigma_cache[k].end()) return it->second;
    const auto& comp = dec[k].components[comp_of[k][v]];
    int ell = comp.label.empty() ? 0 : comp.label[0];
    int k2 = s + ell - k;
    if (k2 < 0 || k2 > s) throw std::logic_error("sigma target width out of range");
    int vd = diamond(k, v);
    auto tt = iota(G[k].vertices[vd], k2, n);
    if (!tt) throw std::logic_error("sigma embedding failed");
    int v2 = G[k2].find(*tt);
    if (v2 < 0) throw std::logic_error("sigma image is not a vertex");
    auto res = std::make_pair(k2, v2);
    sigma_cache[k][v] = res;
    sigma_cache[k2][v2] = {k, v};
    return res;
  }
};

}  // namespace

AffineCrystal build_affine(int n, int s, size_t cap) {
  auto ctx = std::make_shared<Ctx>(n, s, cap);
  auto locate = [ctx](const Rows& T) {
    Rows t = drop_columns(T, ctx->n);
    int k = width(t);
    int v = ctx->G[k].find(t);
    if (v < 0) throw std::logic_error("affine vertex with unknown classical drop");
    return std::make_pair(k, v);
  };
  StepFn step = [ctx, locate](const Rows& T, int color, bool is_f) -> std::optional<Rows> {
    auto [k, v] = locate(T);
    if (color >= 1) {
      int w = is_f ? ctx->G[k].f(v, color) : ctx->G[k].e(v, color);
      if (w < 0) return std::nullopt;
      return fill_columns(ctx->G[k].vertices[w], ctx->n, ctx->s);
    }
    auto [k1, v1] = ctx->sigma(k, v);
    int w = is_f ? ctx->G[k1].f(v1, 1) : ctx->G[k1].e(v1, 1);
    if (w < 0) return std::nullopt;
    auto [k2, v2] = ctx->sigma(k1, w);
    return fill_columns(ctx->G[k2].vertices[v2], ctx->n, ctx->s);
  };
  std::vector<int> colors;
  for (int i = 0; i <= n; ++i) colors.push_back(i);
  WeightFn wfn = [n](const Rows& T) { return weight_D(T, n); };
  Rows seed = (s == 0) ? Rows{} : highest_weight_tableau({s, s}, n);
  AffineCrystal B;
  B.n = n;
  B.s = s;
  B.g = generate(seed, step, colors, wfn, cap);

  size_t expect = 0;
  for (const auto& g : ctx->G) expect += g.size();
  if (B.g.size() != expect)
    throw std::logic_error("affine crystal did not reach every classical vertex");

  const int V = static_cast<int>(B.g.size());
  B.component.resize(V);
  B.stratum.resize(V);
  B.bc_label1.resize(V);
  B.sigma.resize(V);
  for (int v = 0; v < V; ++v) {
    auto [k, cv] = locate(B.g.vertices[v]);
    B.component[v] = k;
    B.stratum[v] = B.g.weight[v].empty() ? 0 : B.g.weight[v][0];
    const auto& comp = ctx->dec[k].components[ctx->comp_of[k][cv]];
    B.bc_label1[v] = comp.label.empty() ? 0 : comp.label[0];
    auto [k2, v2] = ctx->sigma(k, cv);
    int sv = B.g.find(fill_columns(ctx->G[k2].vertices[v2], n, s));
    if (sv < 0) throw std::logic_error("sigma image missing from the affine graph");
    B.sigma[v] = sv;
  }
  B.u_vertex.resize(s + 1);
  for (int k = 0; k <= s; ++k) {
    Rows uk = (k == 0) ? Rows{} : highest_weight_tableau({k, k}, n);
    int v = B.g.find(fill_columns(uk, n, s));
    if (v < 0) throw std::logic_error("classical highest weight vertex missing");
    B.u_vertex[k] = v;
  }
  return B;
}

int level_of(const AffineCrystal& B, int v) {
  auto cd = cartan_D_affine(B.n);
  int total = 0;
  for (size_t p = 0; p < cd.nodes.size(); ++p)
    total += cd.central_coeffs[p] * B.g.eps(v, cd.nodes[p]);
  return total;
}

std::vector<int> minimal_elements(const AffineCrystal& B) {
  const int V = static_cast<int>(B.g.size());
  std::vector<int> lev(V);
  int best = INT32_MAX;
  for (int v = 0; v < V; ++v) best = std::min(best, lev[v] = level_of(B, v));
  std::vector<int> out;
  for (int v = 0; v < V; ++v)
    if (lev[v] == best) out.push_back(v);
  return out;
}

std::vector<std::vector<int>> level_weights(int n, int ell) {
  std::vector<int> coeff(n + 1, 2);
  coeff[0] = coeff[1] = coeff[n - 1] = coeff[n] = 1;
  std::vector<std::vector<int>> out;
  std::vector<int> k(n + 1, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n + 1) {
      if (left == 0) out.push_back(k);
      return;
    }
    for (int x = 0; x * coeff[i] <= left; ++x) {
      k[i] = x;
      rec(i + 1, left - x * coeff[i]);
    }
    k[i] = 0;
  };
  rec(0, ell);
  return out;
}

Rows construct_minimal(const std::vector<int>& k, int n, int s) {
  if (static_cast<int>(k.size()) != n + 1)
    throw std::invalid_argument("weight vector needs n+1 coefficients");
  {
    int lev = 0;
    std::vector<int> coeff(n + 1, 2);
    coeff[0] = coeff[1] = coeff[n - 1] = coeff[n] = 1;
    for (int i = 0; i <= n; ++i) {
      if (k[i] < 0) throw std::invalid_argument("negative weight coefficient");
      lev += coeff[i] * k[i];
    }
    if (lev != s) throw std::invalid_argument("weight is not of level s");
  }
  std::vector<std::pair<int, int>> cols;  // (top, bottom)
  for (int i = 2; i <= n - 2; ++i)
    for (int c = 0; c < k[i]; ++c) cols.push_back({i - 1, i});
  {
    int p = k[n - 1], q = k[n];
    int lo = std::min(p, q), df = std::abs(q - p);
    int hi = q >= p ? n : -n;  // the letter favored by the larger coefficient
    for (int c = 0; c < lo; ++c) cols.push_back({n - 2, n - 1});
    for (int c = 0; c < df / 2; ++c) cols.push_back({n - 1, hi});
    if (df % 2 == 1) cols.push_back({-hi, hi});
    for (int c = 0; c < df / 2; ++c) cols.push_back({-hi, -(n - 1)});
    for (int c = 0; c < lo; ++c) cols.push_back({-(n - 1), -(n - 2)});
  }
  for (int i = n - 2; i >= 2; --i)
    for (int c = 0; c < k[i]; ++c) cols.push_back({-i, -(i - 1)});
  Rows t;
  if (!cols.empty()) {
    t.assign(2, {});
    for (auto [a, b] : cols) {
      t[0].push_back(a);
      t[1].push_back(b);
    }
  }
  const int sp = width(t);
  auto widened = iota(t, sp + k[1], n);
  if (!widened) throw std::logic_error("minimal tableau construction failed to widen");
  return fill_columns(*widened, n, s);
}

// ---------------------------------------------------------------------------
// Perfectness checks and the combinatorial R-matrix.

namespace {

struct Stats {
  std::vector<std::vector<int>> eps, phi;  // [color 0..n][vertex]
  explicit Stats(const AffineCrystal& B) {
    const int V = static_cast<int>(B.g.size());
    eps.assign(B.n + 1, std::vector<int>(V));
    phi.assign(B.n + 1, std::vector<int>(V));
    for (int i = 0; i <= B.n; ++i)
      for (int v = 0; v < V; ++v) {
        eps[i][v] = B.g.eps(v, i);
        phi[i][v] = B.g.phi(v, i);
      }
  }
};

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void join(int a, int b) { p[find(a)] = find(b); }
};

// One tensor step on (a (x) b) with a in Bx (left) and b in By: the left
// factor absorbs the operator when its eps beats (f) or exceeds (e) the
// right factor's phi.
std::pair<int, int> tensor_step(const Stats& sx, const CrystalGraph& gx, const Stats& sy,
                                const CrystalGraph& gy, int a, int b, int i, bool is_f) {
  bool left = is_f ? sx.eps[i][a] >= sy.phi[i][b] : sx.eps[i][a] > sy.phi[i][b];
  if (left) {
    int w = is_f ? gx.f(a, i) : gx.e(a, i);
    return {w, w < 0 ? -1 : b};
  }
  int w = is_f ? gy.f(b, i) : gy.e(b, i);
  return {w < 0 ? -1 : a, w};
}

}  // namespace

PerfectReport check_perfect(const AffineCrystal& B, int ell) {
  PerfectReport rep;
  Stats st(B);
  const int V = static_cast<int>(B.g.size());

  {  // Item 1: B (x) B connected over all colors.
    DSU dsu(V * V);
    for (int a = 0; a < V; ++a)
      for (int b = 0; b < V; ++b)
        for (int i = 0; i <= B.n; ++i) {
          auto [fa, fb] = tensor_step(st, B.g, st, B.g, a, b, i, true);
          if (fa >= 0 && fb >= 0) dsu.join(a * V + b, fa * V + fb);
        }
    int roots = 0;
    for (int p = 0; p < V * V; ++p)
      if (dsu.find(p) == p) ++roots;
    rep.tensor_connected = roots == 1;
    if (!rep.tensor_connected) rep.detail += "tensor square has " + std::to_string(roots) + " components; ";
  }

  {  // Item 2: unique extremal-weight vertex, all weights below it.
    const auto& lambda = B.g.weight[B.u(B.s)];
    int hits = 0;
    bool ok = true;
    for (int v = 0; v < V && ok; ++v) {
      const auto& w = B.g.weight[v];
      if (w == lambda) ++hits;
      std::vector<long long> d(B.n);
      for (int i = 0; i < B.n; ++i) d[i] = lambda[i] - w[i];
      long long run = 0;
      std::vector<long long> c(B.n + 1, 0);
      for (int i = 1; i <= B.n - 2; ++i) {
        run += d[i - 1];
        c[i] = run;
      }
      long long S = run + d[B.n - 2];
      c[B.n - 1] = S - d[B.n - 1];
      c[B.n] = S + d[B.n - 1];
      if (c[B.n - 1] % 2 || c[B.n] % 2) ok = false;
      c[B.n - 1] /= 2;
      c[B.n] /= 2;
      for (int i = 1; i <= B.n; ++i)
        if (c[i] < 0) ok = false;
    }
    rep.extremal_unique = ok && hits == 1;
    if (!rep.extremal_unique) rep.detail += "extremal weight condition failed; ";
  }

  {  // Items 4 and 5.
    std::vector<int> lev(V);
    rep.min_level = INT32_MAX;
    for (int v = 0; v < V; ++v) rep.min_level = std::min(rep.min_level, lev[v] = level_of(B, v));
    rep.level_bound = rep.min_level == ell;
    if (!rep.level_bound) rep.detail += "minimum level is not ell; ";

    auto target = level_weights(B.n, ell);
    std::set<std::vector<int>> want(target.begin(), target.end());
    std::set<std::vector<int>> eps_seen, phi_seen;
    int count = 0;
    for (int v = 0; v < V; ++v)
      if (lev[v] == rep.min_level) {
        ++count;
        std::vector<int> e(B.n + 1), p(B.n + 1);
        for (int i = 0; i <= B.n; ++i) {
          e[i] = st.eps[i][v];
          p[i] = st.phi[i][v];
        }
        eps_seen.insert(e);
        phi_seen.insert(p);
      }
    rep.eps_phi_bijections = rep.min_level == ell &&
                             count == static_cast<int>(want.size()) && eps_seen == want &&
                             phi_seen == want;
    if (!rep.eps_phi_bijections) rep.detail += "eps/phi maps on the minimal set are not bijections; ";
  }
  return rep;
}

RMatrix combinatorial_R(const AffineCrystal& B2, const AffineCrystal& B1) {
  Stats s2(B2), s1(B1);
  const int N2 = static_cast<int>(B2.g.size()), N1 = static_cast<int>(B1.g.size());
  RMatrix R;
  R.image.assign(N2 * N1, -1);
  const int seed = B2.u(B2.s) * N1 + B1.u(B1.s);
  R.image[seed] = B1.u(B1.s) * N2 + B2.u(B2.s);
  std::vector<int> queue = {seed};
  for (size_t h = 0; h < queue.size(); ++h) {
    int p = queue[h];
    int a = p / N1, b = p % N1;
    int b1p = R.image[p] / N2, b2p = R.image[p] % N2;
    for (int i = 0; i <= B2.n; ++i)
      for (bool is_f : {true, false}) {
        auto [na, nb] = tensor_step(s2, B2.g, s1, B1.g, a, b, i, is_f);
        if (na < 0) continue;
        auto [nb1, nb2] = tensor_step(s1, B1.g, s2, B2.g, b1p, b2p, i, is_f);
        if (nb1 < 0)
          throw std::runtime_error("R propagation: image edge missing");
        int q = na * N1 + nb, iq = nb1 * N2 + nb2;
        if (R.image[q] < 0) {
          R.image[q] = iq;
          queue.push_back(q);
        } else if (R.image[q] != iq) {
          throw std::runtime_error("R propagation conflict: not a crystal isomorphism");
        }
      }
  }
  for (int p = 0; p < N2 * N1; ++p)
    if (R.image[p] < 0) throw std::runtime_error("tensor product not connected; R undefined");

  // Local energy: constant across classical edges, stepped across 0-edges.
  R.H.assign(N2 * N1, INT32_MIN);
  R.H[seed] = 0;
  auto delta = [&](int p) {  // the increment H(e_0 p) - H(p)
    int a = p / N1, b = p % N1;
    int b1p = R.image[p] / N2, b2p = R.image[p] % N2;
    bool gt_left = s2.eps[0][a] > s1.phi[0][b];
    bool gt_right = s1.eps[0][b1p] > s2.phi[0][b2p];
    if (gt_left && gt_right) return -1;
    if (!gt_left && !gt_right) return 1;
    return 0;
  };
  queue = {seed};
  for (size_t h = 0; h < queue.size(); ++h) {
    int p = queue[h];
    int a = p / N1, b = p % N1;
    for (int i = 0; i <= B2.n; ++i)
      for (bool is_f : {true, false}) {
        auto [na, nb] = tensor_step(s2, B2.g, s1, B1.g, a, b, i, is_f);
        if (na < 0) continue;
        int q = na * N1 + nb;
        int hq;
        if (i >= 1)
          hq = R.H[p];
        else if (!is_f)  // q = e_0(p)
          hq = R.H[p] + delta(p);
        else  // p = e_0(q)
          hq = R.H[p] - delta(q);
        if (R.H[q] == INT32_MIN) {
          R.H[q] = hq;
          queue.push_back(q);
        } else if (R.H[q] != hq) {
          throw std::runtime_error("local energy propagation conflict");
        }
      }
  }
  return R;
}

std::vector<int> energy(const AffineCrystal& B) {
  const int V = static_cast<int>(B.g.size());
  int natural = -1;
  for (int v = 0; v < V; ++v) {
    bool ok = B.g.phi(v, 0) == B.s;
    for (int i = 1; i <= B.n && ok; ++i) ok = B.g.phi(v, i) == 0;
    if (ok) {
      if (natural >= 0) throw std::logic_error("two natural vertices");
      natural = v;
    }
  }
  if (natural < 0) throw std::logic_error("no vertex with phi = s Lambda_0");
  RMatrix R = combinatorial_R(B, B);
  const int u = B.u(B.s);
  std::vector<int> D(V);
  for (int v = 0; v < V; ++v) D[v] = R.H[v * V + natural] - R.H[u * V + natural];
  return D;
}

std::map<int, long long> one_dim_sum(const AffineCrystal& B, const std::vector<int>& lambda,
                                     int shift) {
  auto D = energy(B);
  std::map<int, long long> out;
  for (size_t v = 0; v < B.g.size(); ++v)
    if (B.g.weight[v] == lambda) ++out[D[v] + shift];
  return out;
}

std::map<int, long long> one_dim_sum_pair(const AffineCrystal& B2, const AffineCrystal& B1,
                                          const std::vector<int>& lambda, int shift) {
  auto R = combinatorial_R(B2, B1);
  auto D2 = energy(B2), D1 = energy(B1);
  const int N2 = static_cast<int>(B2.g.size()), N1 = static_cast<int>(B1.g.size());
  std::map<int, long long> out;
  for (int a = 0; a < N2; ++a)
    for (int b = 0; b < N1; ++b) {
      std::vector<int> w = B2.g.weight[a];
      for (int i = 0; i < B2.n; ++i) w[i] += B1.g.weight[b][i];
      if (w != lambda) continue;
      int p = a * N1 + b;
      int b2p = R.image[p] % N2;
      out[R.H[p] + D1[b] + D2[b2p] + shift] += 1;
    }
  return out;
}

}  // namespace crystal
