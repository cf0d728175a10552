#include "crystal/dtableau.hpp"

#include <algorithm>
#include <sstream>

#include "crystal/letters.hpp"
#include "crystal/signature.hpp"

namespace crystal {

std::vector<int> shape_of(const Rows& t) {
  std::vector<int> s;
  s.reserve(t.size());
  for (const auto& row : t) s.push_back(static_cast<int>(row.size()));
  return s;
}

bool is_partition(const std::vector<int>& parts) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) return false;
    if (i && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

namespace {

// Row index of `letter` in column c of t, or -1.  Valid columns have
// pairwise distinct entries, so the position is unique.
int pos_in_col(const Rows& t, int c, int letter) {
  for (size_t r = 0; r < t.size(); ++r)
    if (c < static_cast<int>(t[r].size()) && t[r][c] == letter)
      return static_cast<int>(r);
  return -1;
}

int col_height(const Rows& t, int c) {
  int h = 0;
  for (const auto& row : t)
    if (c < static_cast<int>(row.size())) ++h;
  return h;
}

std::string cell_str(int r, int c, int v) {
  std::ostringstream os;
  os << "(" << r << "," << c << ")=" << v;
  return os.str();
}

}  // namespace

namespace {

std::vector<Violation> validate_core(const Rows& t, int n, bool partial) {
  std::vector<Violation> out;
  auto add = [&](int item, int r, int c, std::string d) {
    out.push_back({item, r, c, std::move(d)});
  };

  if (!is_partition(shape_of(t))) {
    add(0, 0, 0, "row lengths are not a partition");
    return out;
  }
  for (size_t r = 0; r < t.size(); ++r)
    for (size_t c = 0; c < t[r].size(); ++c) {
      if (partial && t[r][c] == 0) continue;
      if (!letter_valid(t[r][c], n)) {
        add(0, (int)r, (int)c, "letter out of range: " + cell_str((int)r, (int)c, t[r][c]));
        return out;
      }
    }

  const int nrows = static_cast<int>(t.size());
  const int width = nrows ? static_cast<int>(t[0].size()) : 0;

  // Item 1: rows weakly increase (a <= b for horizontal neighbors a, b).
  for (int r = 0; r < nrows; ++r)
    for (size_t c = 0; c + 1 < t[r].size(); ++c)
      if (t[r][c] && t[r][c + 1] && !letter_leq(t[r][c], t[r][c + 1], n))
        add(1, r, (int)c,
            "row not weakly increasing: " + cell_str(r, (int)c, t[r][c]) + " then " +
                cell_str(r, (int)c + 1, t[r][c + 1]));

  // Item 2: columns: for vertical neighbors a over b, b must not be <= a.
  for (int r = 0; r + 1 < nrows; ++r)
    for (size_t c = 0; c < t[r + 1].size(); ++c)
      if (t[r][c] && t[r + 1][c] && letter_leq(t[r + 1][c], t[r][c], n))
        add(2, r, (int)c,
            "column violation: " + cell_str(r, (int)c, t[r][c]) + " over " +
                cell_str(r + 1, (int)c, t[r + 1][c]));
  if (!out.empty()) return out;  // later items assume distinct column entries

  // Item 3: a and a-bar in one column of height N at rows p < q (1-based
  // difference q - p) require (q - p) + a > N.
  for (int c = 0; c < width; ++c) {
    int N = col_height(t, c);
    for (int a = 1; a <= n; ++a) {
      int p = pos_in_col(t, c, a), q = pos_in_col(t, c, -a);
      if (p < 0 || q < 0) continue;
      if (p > q) std::swap(p, q);
      if ((q - p) + a <= N)
        add(3, p, c,
            "column " + std::to_string(c) + " holds " + std::to_string(a) + " and its bar with gap " +
                std::to_string(q - p) + " in height " + std::to_string(N));
    }
  }

  // Items 4 and 5: odd configurations across two adjacent columns.
  for (int c = 0; c + 1 < width; ++c) {
    const int cL = c, cR = c + 1;
    for (int a = 1; a < n; ++a) {
      // Item 4, first configuration: a in the left column at p; b, b-bar,
      // a-bar stacked in the right column at q < r < s with p <= q.
      {
        int p = pos_in_col(t, cL, a), s = pos_in_col(t, cR, -a);
        if (p >= 0 && s >= 0)
          for (int b = a + 1; b < n; ++b) {
            int q = pos_in_col(t, cR, b), r = pos_in_col(t, cR, -b);
            if (q >= 0 && r >= 0 && p <= q && q < r && r < s &&
                (q - p) + (s - r) >= b - a)
              add(4, p, cL,
                  "odd configuration a=" + std::to_string(a) + " b=" + std::to_string(b) +
                      " at columns " + std::to_string(cL) + "," + std::to_string(cR));
          }
      }
      // Item 4, second configuration: a, b, b-bar stacked in the left column
      // at p < q < r; a-bar in the right column at s with r <= s.
      {
        int p = pos_in_col(t, cL, a), s = pos_in_col(t, cR, -a);
        if (p >= 0 && s >= 0)
          for (int b = a + 1; b < n; ++b) {
            int q = pos_in_col(t, cL, b), r = pos_in_col(t, cL, -b);
            if (q >= 0 && r >= 0 && p < q && q < r && r <= s &&
                (q - p) + (s - r) >= b - a)
              add(4, p, cL,
                  "odd configuration a=" + std::to_string(a) + " b=" + std::to_string(b) +
                      " at columns " + std::to_string(cL) + "," + std::to_string(cR));
          }
      }
      // Item 5: a,a horizontally adjacent with a-bar lower in the right
      // column; or a-bar,a-bar horizontally adjacent with a higher in the
      // left column.
      for (int i = 0; i < nrows; ++i) {
        if (cR < static_cast<int>(t[i].size()) && t[i][cL] == a && t[i][cR] == a) {
          int j = pos_in_col(t, cR, -a);
          if (j > i)
            add(5, i, cL, "a,a pair with a-bar below-right, a=" + std::to_string(a));
        }
        if (cR < static_cast<int>(t[i].size()) && t[i][cL] == -a && t[i][cR] == -a) {
          int j = pos_in_col(t, cL, a);
          if (j >= 0 && j < i)
            add(5, i, cL, "abar,abar pair with a above-left, a=" + std::to_string(a));
        }
      }
      // Item 6: the item-4 configurations with the {b, b-bar} pair replaced
      // by a vertically adjacent {n, n-bar} pair (either order); the bound
      // becomes s - p - 1 < n - a.
      {
        int p = pos_in_col(t, cL, a), s = pos_in_col(t, cR, -a);
        if (p >= 0 && s >= 0) {
          int qn = pos_in_col(t, cR, n), qb = pos_in_col(t, cR, -n);
          if (qn >= 0 && qb >= 0 && std::abs(qn - qb) == 1) {
            int q = std::min(qn, qb), r = q + 1;
            if (p <= q && r < s && s - p - 1 >= n - a)
              add(6, p, cL, "n-pair configuration (right column), a=" + std::to_string(a));
          }
          int pn = pos_in_col(t, cL, n), pb = pos_in_col(t, cL, -n);
          if (pn >= 0 && pb >= 0 && std::abs(pn - pb) == 1) {
            int q = std::min(pn, pb), r = q + 1;
            if (p < q && r <= s && s - p - 1 >= n - a)
              add(6, p, cL, "n-pair configuration (left column), a=" + std::to_string(a));
          }
        }
      }
      // Item 8: a at (p, left), an n-letter at (q, right), an n-letter at
      // (r, left), a-bar at (s, right) with p <= q <= r <= s.  The staircase
      // constraint s - p < n - a applies when the two n-letters agree with
      // r - q odd, or differ with r - q even.  (The parity is calibrated
      // against the dimension oracle: counting fillings of many shapes
      // matches the Weyl dimension formula exactly with this pairing and
      // with weak row inequalities.)
      {
        int p = pos_in_col(t, cL, a), s = pos_in_col(t, cR, -a);
        if (p >= 0 && s >= 0)
          for (int x : {n, -n})
            for (int y : {n, -n}) {
              int q = pos_in_col(t, cR, x), r = pos_in_col(t, cL, y);
              if (q < 0 || r < 0 || !(p <= q && q <= r && r <= s)) continue;
              bool fires = (x == y) ? ((r - q) % 2 != 0) : ((r - q) % 2 == 0);
              if (fires && s - p >= n - a)
                add(8, p, cL, "n-letter parity configuration, a=" + std::to_string(a));
            }
      }
    }
  }

  // Item 7: no n-letter strictly down-and-right of another n-letter.
  {
    std::vector<std::pair<int, int>> ncells;
    for (int r = 0; r < nrows; ++r)
      for (size_t c = 0; c < t[r].size(); ++c)
        if (std::abs(t[r][c]) == n) ncells.push_back({r, (int)c});
    for (auto [r1, c1] : ncells)
      for (auto [r2, c2] : ncells)
        if (r2 > r1 && c2 > c1)
          add(7, r1, c1,
              "n-letter at (" + std::to_string(r2) + "," + std::to_string(c2) +
                  ") strictly down-right of (" + std::to_string(r1) + "," + std::to_string(c1) + ")");
  }

  return out;
}

}  // namespace

std::vector<Violation> validate_D(const Rows& t, int n) {
  for (const auto& row : t)
    for (int x : row)
      if (x == 0) return {{0, 0, 0, "empty cell in full validation"}};
  return validate_core(t, n, false);
}

std::vector<Violation> validate_D_partial(const Rows& t, int n) {
  return validate_core(t, n, true);
}

std::vector<std::pair<int, int>> column_word_cells(const Rows& t) {
  std::vector<std::pair<int, int>> cells;
  int width = t.empty() ? 0 : static_cast<int>(t[0].size());
  for (int c = 0; c < width; ++c)
    for (int r = static_cast<int>(t.size()) - 1; r >= 0; --r)
      if (c < static_cast<int>(t[r].size())) cells.push_back({r, c});
  return cells;
}

std::vector<int> column_word(const Rows& t) {
  std::vector<int> w;
  for (auto [r, c] : column_word_cells(t)) w.push_back(t[r][c]);
  return w;
}

std::vector<int> weight_D(const Rows& t, int n) {
  std::vector<int> w(n, 0);
  for (const auto& row : t)
    for (int x : row) w[std::abs(x) - 1] += (x > 0 ? 1 : -1);
  return w;
}

std::optional<Rows> kashiwara(const Rows& t, int i, bool is_f, int n) {
  auto word = column_word(t);
  bool ok = act_word(
      word, is_f, [&](int x) { return phi_letter_D(x, i, n); },
      [&](int x) { return eps_letter_D(x, i, n); },
      [&](int x) { return is_f ? f_letter_D(x, i, n) : e_letter_D(x, i, n); });
  if (!ok) return std::nullopt;
  Rows out = t;
  auto cells = column_word_cells(t);
  for (size_t k = 0; k < cells.size(); ++k) out[cells[k].first][cells[k].second] = word[k];
  return out;
}

Rows highest_weight_tableau(const std::vector<int>& shape, int n) {
  if (!is_partition(shape)) throw std::invalid_argument("shape is not a partition");
  if (static_cast<int>(shape.size()) > n - 1)
    throw std::invalid_argument("shape has too many rows for the rank");
  Rows t;
  for (size_t r = 0; r < shape.size(); ++r)
    t.push_back(std::vector<int>(shape[r], static_cast<int>(r) + 1));
  return t;
}

CrystalGraph generate_B(const std::vector<int>& shape, int n, size_t cap) {
  Rows seed = highest_weight_tableau(shape, n);
  std::vector<int> colors;
  for (int i = 1; i <= n; ++i) colors.push_back(i);
  StepFn step = [n](const Rows& v, int i, bool is_f) -> std::optional<Rows> {
    auto img = kashiwara(v, i, is_f, n);
    if (img && !validate_D(*img, n).empty())
      throw std::logic_error("operator image fails tableau validation");
    return img;
  };
  WeightFn wfn = [n](const Rows& v) { return weight_D(v, n); };
  return generate(seed, step, colors, wfn, cap);
}

int tau_D(int i, int n) {
  if (n % 2 != 0) {
    if (i == n) return n - 1;
    if (i == n - 1) return n;
  }
  return i;
}

std::vector<int> dual_map(const CrystalGraph& b, int n) {
  auto hw = b.highest_weight_vertices();
  if (hw.size() != 1) throw std::invalid_argument("dual_map needs a connected crystal");
  std::vector<int> lw;
  for (size_t v = 0; v < b.size(); ++v) {
    bool low = true;
    for (int i : b.colors)
      if (b.f(static_cast<int>(v), i) >= 0) {
        low = false;
        break;
      }
    if (low) lw.push_back(static_cast<int>(v));
  }
  if (lw.size() != 1) throw std::invalid_argument("lowest weight vertex not unique");

  std::vector<int> d(b.size(), -1);
  d[hw[0]] = lw[0];
  std::vector<int> stack = {hw[0]};
  auto push_image = [&](int w, int img, std::vector<int>& st) {
    if (img < 0) throw std::logic_error("dual transport hit a missing edge");
    if (d[w] < 0) {
      d[w] = img;
      st.push_back(w);
    } else if (d[w] != img) {
      throw std::logic_error("dual transport is inconsistent");
    }
  };
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int i : b.colors) {
      int w = b.f(v, i);
      if (w >= 0) push_image(w, b.e(d[v], tau_D(i, n)), stack);
      w = b.e(v, i);
      if (w >= 0) push_image(w, b.f(d[v], tau_D(i, n)), stack);
    }
  }
  for (int x : d)
    if (x < 0) throw std::logic_error("dual transport did not reach every vertex");
  return d;
}

}  // namespace crystal
