#include "crystal/plactic.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <stdexcept>

#include "crystal/dtableau.hpp"
#include "crystal/letters.hpp"

namespace crystal {

bool is_admissible_column(const std::vector<int>& top_to_bottom, int n) {
  const int L = static_cast<int>(top_to_bottom.size());
  if (L > n) return false;
  for (int z = 1; z <= n; ++z) {
    int N = 0;
    for (int x : top_to_bottom)
      if (letter_leq(x, z, n) || letter_leq(-z, x, n)) ++N;
    if (N > z) return false;
  }
  return true;
}

bool is_column_word(const std::vector<int>& w, int n) {
  for (size_t k = 0; k + 1 < w.size(); ++k)
    if (letter_leq(w[k], w[k + 1], n)) return false;
  return true;
}

namespace {

using Tri = std::array<int, 3>;

struct Ruleset {
  std::map<Tri, std::vector<Tri>> rel;
};

const Ruleset& ruleset_for(int n) {
  static std::map<int, Ruleset> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  Ruleset rs;
  auto add = [&](Tri u, Tri v) {
    rs.rel[u].push_back(v);
    rs.rel[v].push_back(u);
  };
  std::vector<int> letters;
  for (int a = 1; a <= n; ++a) {
    letters.push_back(a);
    letters.push_back(-a);
  }

  // Three-letter exchanges with the x != z-bar proviso.
  for (int x : letters)
    for (int y : letters)
      for (int z : letters) {
        if (x == -z) continue;
        if (letter_leq(x, y, n) && letter_lt(y, z, n)) add({x, z, y}, {z, x, y});
        if (letter_lt(x, y, n) && letter_leq(y, z, n)) add({y, z, x}, {y, x, z});
      }
  // Pair conversions x-bar x <-> (x-1)(x-1-bar) in context.
  for (int x = 2; x < n; ++x)
    for (int y : letters)
      if (letter_leq(x, y, n) && letter_leq(y, -x, n)) {
        add({x - 1, -(x - 1), y}, {-x, x, y});
        add({y, -x, x}, {y, x - 1, -(x - 1)});
      }
  // Exchanges involving the incomparable pair {n, n-bar}.
  for (int x = 1; x < n; ++x) {
    add({n, -x, -n}, {n, -n, -x});
    add({-n, -x, n}, {-n, n, -x});
    add({x, n, -n}, {n, x, -n});
    add({x, -n, n}, {-n, x, n});
  }
  add({-n, -n, n}, {-n, n - 1, -(n - 1)});
  add({n, n, -n}, {n, n - 1, -(n - 1)});
  add({n - 1, -(n - 1), -n}, {n, -n, -n});
  add({n - 1, -(n - 1), n}, {-n, n, n});

  for (auto& [k, v] : rs.rel) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return cache.emplace(n, std::move(rs)).first->second;
}

// Erase the redundant (z, z-bar) pair from a minimally non-admissible column
// subword; empty result means the contraction does not apply.
std::optional<std::vector<int>> contract_column_subword(const std::vector<int>& sub, int n) {
  int z = 0;
  for (int c = 1; c <= n && !z; ++c) {
    int N = 0;
    for (int x : sub)
      if (letter_leq(x, c, n) || letter_leq(-c, x, n)) ++N;
    if (N > c) z = c;
  }
  if (!z) return std::nullopt;
  std::vector<int> out;
  if (z < n) {
    int want_pos = 1, want_neg = 1;
    for (int x : sub) {
      if (x == z && want_pos) {
        --want_pos;
        continue;
      }
      if (x == -z && want_neg) {
        --want_neg;
        continue;
      }
      out.push_back(x);
    }
    if (want_pos || want_neg) return std::nullopt;
  } else {
    // Erase one consecutive {n, n-bar} pair (either order).
    size_t at = sub.size();
    for (size_t k = 0; k + 1 < sub.size(); ++k)
      if (sub[k] == -sub[k + 1] && std::abs(sub[k]) == n) {
        at = k;
        break;
      }
    if (at == sub.size()) return std::nullopt;
    for (size_t k = 0; k < sub.size(); ++k)
      if (k != at && k != at + 1) out.push_back(sub[k]);
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> lecouvey_neighbors(const std::vector<int>& w, int n) {
  std::vector<std::vector<int>> out;
  const auto& rs = ruleset_for(n);
  for (size_t k = 0; k + 3 <= w.size(); ++k) {
    Tri win = {w[k], w[k + 1], w[k + 2]};
    auto it = rs.rel.find(win);
    if (it == rs.rel.end()) continue;
    for (const Tri& img : it->second) {
      auto v = w;
      v[k] = img[0];
      v[k + 1] = img[1];
      v[k + 2] = img[2];
      out.push_back(std::move(v));
    }
  }
  // Column contractions on minimally non-admissible consecutive subwords.
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t L = 2; i + L <= w.size() && L <= static_cast<size_t>(n) + 1; ++L) {
      std::vector<int> sub(w.begin() + i, w.begin() + i + L);
      if (!is_column_word(sub, n)) break;  // longer windows cannot be columns either
      if (is_admissible_column(sub, n)) continue;
      std::vector<int> head(sub.begin(), sub.end() - 1), tail(sub.begin() + 1, sub.end());
      if (!is_admissible_column(head, n) || !is_admissible_column(tail, n)) continue;
      auto contracted = contract_column_subword(sub, n);
      if (!contracted) continue;
      std::vector<int> v(w.begin(), w.begin() + i);
      v.insert(v.end(), contracted->begin(), contracted->end());
      v.insert(v.end(), w.begin() + i + L, w.end());
      out.push_back(std::move(v));
    }
  return out;
}

std::set<std::vector<int>> lecouvey_closure(const std::vector<int>& w, int n, size_t cap) {
  std::set<std::vector<int>> seen = {w};
  std::deque<std::vector<int>> queue = {w};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (auto& nb : lecouvey_neighbors(cur, n))
      if (seen.insert(nb).second) {
        if (seen.size() > cap) throw std::runtime_error("word closure cap exceeded");
        queue.push_back(std::move(nb));
      }
  }
  return seen;
}

namespace {

void partitions_of(int total, int max_part, std::vector<int>& cur, int max_rows,
                   std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == max_rows) return;
  for (int p = std::min(total, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_of(total - p, p, cur, max_rows, out);
    cur.pop_back();
  }
}

std::vector<Rows> straight_tableaux_with_word(const std::vector<int>& w, int n) {
  std::vector<Rows> out;
  const int L = static_cast<int>(w.size());
  if (L == 0) return {Rows{}};
  std::vector<std::vector<int>> shapes;
  std::vector<int> cur;
  partitions_of(L, L, cur, n - 1, shapes);
  for (const auto& shape : shapes) {
    Rows t;
    for (int len : shape) t.push_back(std::vector<int>(len, 0));
    auto cells = column_word_cells(t);
    for (size_t k = 0; k < cells.size(); ++k) t[cells[k].first][cells[k].second] = w[k];
    if (validate_D(t, n).empty()) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

std::optional<Rows> rectify_word_via_closure(const std::vector<int>& w, int n, size_t cap) {
  std::set<Rows> found;
  std::set<std::vector<int>> seen = {w};
  std::deque<std::vector<int>> queue = {w};
  auto consider = [&](const std::vector<int>& word) {
    for (auto& t : straight_tableaux_with_word(word, n)) found.insert(t);
  };
  consider(w);
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (auto& nb : lecouvey_neighbors(cur, n))
      if (seen.insert(nb).second) {
        if (seen.size() > cap) return std::nullopt;
        consider(nb);
        queue.push_back(std::move(nb));
      }
  }
  if (found.size() > 1) throw std::logic_error("word class contains two straight tableaux");
  if (found.empty()) return std::nullopt;
  return *found.begin();
}

std::optional<Rows> dual_letterwise_two_rows(const Rows& t, int n, size_t guard) {
  if (t.size() > 2) throw std::invalid_argument("letterwise dual needs at most two rows");
  auto w = column_word(t);
  std::reverse(w.begin(), w.end());
  for (int& x : w)
    if (!(n % 2 != 0 && std::abs(x) == n)) x = -x;
  return rectify_word_via_closure(w, n, guard);
}

// ---------------------------------------------------------------------------
// Two-row sliding engines.

namespace {

struct Grid {
  std::map<int, int> top, bot;  // column -> letter
  static Grid of(const SkewTwoRow& s) {
    Grid g;
    for (size_t k = 0; k < s.top.size(); ++k) g.top[s.offset + static_cast<int>(k)] = s.top[k];
    for (size_t k = 0; k < s.bottom.size(); ++k) g.bot[static_cast<int>(k)] = s.bottom[k];
    return g;
  }
  SkewTwoRow pack() const {
    SkewTwoRow s;
    if (!top.empty()) {
      s.offset = top.begin()->first;
      int expect = s.offset;
      for (auto [c, v] : top) {
        if (c != expect++) throw std::logic_error("top row not contiguous after slide");
        s.top.push_back(v);
      }
    }
    int expect = 0;
    for (auto [c, v] : bot) {
      if (c != expect++) throw std::logic_error("bottom row not contiguous after slide");
      s.bottom.push_back(v);
    }
    return s;
  }
  std::optional<int> at(bool top_row, int c) const {
    const auto& m = top_row ? top : bot;
    auto it = m.find(c);
    if (it == m.end()) return std::nullopt;
    return it->second;
  }
};

[[noreturn]] void slide_error(const char* what) {
  throw std::logic_error(std::string("slide rule not applicable: ") + what);
}

}  // namespace

SlideResult contraction_pass(const SkewTwoRow& s, int n) {
  if (s.offset <= 0 || s.top.empty())
    throw std::invalid_argument("contraction needs a nonempty top row with a positive offset");
  Grid g = Grid::of(s);
  bool in_top = true;
  int c = s.offset - 1;
  for (;;) {
    if (in_top) {
      auto T = g.at(true, c + 1), B = g.at(false, c), Z = g.at(false, c + 1);
      if (T && Z && *Z == -*T) {
        int newTL;
        if (std::abs(*T) == n) newTL = n - 1;
        else if (*T > 1) newTL = *T - 1;
        else slide_error("pair move from letter 1");
        g.top[c] = newTL;
        g.bot[c + 1] = -newTL;
        g.top.erase(c + 1);
        ++c;
      } else if (B && Z && *Z == -*B && *B > 0) {
        // Horizontal pair (B, -B) below the hole.
        if (T) {
          int newc = 0;
          if (*B <= n - 2 && letter_leq(*B + 1, *T, n) && letter_leq(*T, -(*B + 1), n))
            newc = *B + 1;
          else if (*B == n - 1 && std::abs(*T) == n)
            newc = *T;
          if (newc != 0) {
            // The pair turns into the vertical column (newc / -newc) and the
            // hole exits into the bottom row.
            g.top[c] = newc;
            g.bot[c] = -newc;
            g.bot.erase(c + 1);
            in_top = false;
            ++c;
          } else if (letter_lt(*T, *B, n)) {
            g.top[c] = *T;
            g.top.erase(c + 1);
            ++c;
          } else {
            slide_error("pair under hole with incomparable top letter");
          }
        } else {
          g.top[c] = *B;
          g.bot.erase(c);
          in_top = false;
        }
      } else if (T && B) {
        if (letter_leq(*B, *T, n)) {
          g.top[c] = *B;
          g.bot.erase(c);
          in_top = false;
        } else {
          g.top[c] = *T;
          g.top.erase(c + 1);
          ++c;
        }
      } else if (T) {
        g.top[c] = *T;
        g.top.erase(c + 1);
        ++c;
      } else if (B) {
        g.top[c] = *B;
        g.bot.erase(c);
        in_top = false;
      } else {
        return {g.pack(), true};
      }
    } else {
      auto Z = g.at(false, c + 1);
      if (!Z) return {g.pack(), false};
      auto A = g.at(true, c), Bp = g.at(true, c + 1);
      if (A && *Z == -*A) {
        int Ap;
        if (*A >= 1 && *A <= n - 2) Ap = *A + 1;
        else if (*A == n - 1 && Bp && std::abs(*Bp) == n) Ap = *Bp;
        else slide_error("bottom pair move");
        g.top[c] = Ap;
        g.bot[c] = -Ap;
        g.bot.erase(c + 1);
        ++c;
      } else {
        g.bot[c] = *Z;
        g.bot.erase(c + 1);
        ++c;
      }
    }
  }
}

SkewTwoRow expansion_pass(const SkewTwoRow& s, int n) {
  if (s.top.empty()) {
    // No letters to move: the hole enters at the (empty) right end of the
    // top row and immediately becomes the new inner corner.
    SkewTwoRow out = s;
    ++out.offset;
    return out;
  }
  Grid g = Grid::of(s);
  int c = s.offset + static_cast<int>(s.top.size());
  while (c > s.offset) {
    int u = g.top.at(c - 1);
    auto y = g.at(false, c - 1), z = g.at(false, c);
    if (z && *z == -u) {
      int up;
      if (u >= 1 && u <= n - 2) up = u + 1;
      else if (u == n - 1 && y && std::abs(*y) == n) up = -*y;
      else slide_error("expansion pair move");
      g.top[c] = up;
      g.bot[c] = -up;
    } else {
      g.top[c] = u;
    }
    g.top.erase(c - 1);
    --c;
  }
  auto out = g.pack();
  if (out.offset != s.offset + 1) throw std::logic_error("expansion did not grow the inner shape");
  return out;
}

Rows rectify(SkewTwoRow s, int n) {
  while (s.offset > 0 && !s.top.empty()) s = contraction_pass(s, n).skew;
  s.offset = 0;
  Rows out;
  if (!s.top.empty()) out.push_back(s.top);
  if (!s.bottom.empty()) {
    if (s.top.size() < s.bottom.size())
      throw std::logic_error("rectified skew is not a straight tableau");
    out.push_back(s.bottom);
  }
  return out;
}

std::optional<std::pair<int, int>> find_null_configuration(const Rows& t) {
  if (t.size() != 2 || t[0].size() != t[1].size()) return std::nullopt;
  const int m = static_cast<int>(t[0].size());
  int L1 = 0;
  while (L1 < m && t[0][L1] == 1) ++L1;
  auto column_is = [&](int c, int topv, int botv) {
    return t[0][c] == topv && t[1][c] == botv;
  };
  for (int r = m; r >= 1; --r) {
    int a = r / 2;
    int c = L1 - a;
    if (c < 0 || c + r > m) continue;
    bool ok = true;
    for (int k = 0; k < r && ok; ++k) {
      int col = c + k;
      if (r % 2 == 0)
        ok = k < a ? column_is(col, 1, -2) : column_is(col, 2, -1);
      else if (k < a)
        ok = column_is(col, 1, -2);
      else if (k == a)
        ok = column_is(col, 2, -2);
      else
        ok = column_is(col, 2, -1);
    }
    for (int j = c + r; j < m && ok; ++j) ok = (t[1][j] == -1);
    if (ok) return std::make_pair(c, r);
  }
  return std::nullopt;
}

SkewTwoRow reduced_form(const Rows& t) {
  SkewTwoRow s;
  if (t.empty()) return s;
  if (t.size() != 2 || t[0].size() != t[1].size())
    throw std::invalid_argument("reduced_form needs a two-row rectangle");
  const int m = static_cast<int>(t[0].size());
  int r1, r2, r3;
  if (auto nc = find_null_configuration(t)) {
    r1 = nc->first;
    r2 = nc->second;
    r3 = m - r1 - r2;
  } else {
    r2 = 0;
    r1 = 0;
    while (r1 < m && t[0][r1] == 1) ++r1;
    r3 = 0;
    while (r3 < m && t[1][m - 1 - r3] == -1) ++r3;
  }
  s.offset = r1 + r2;
  s.top.assign(t[0].begin() + s.offset, t[0].end());
  s.bottom.assign(t[1].begin(), t[1].begin() + (m - r2 - r3));
  return s;
}

Rows completely_reduced_form(const Rows& t, int n) { return rectify(reduced_form(t), n); }

}  // namespace crystal
