#include "crystal/c2.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "crystal/letters.hpp"
#include "crystal/signature.hpp"

namespace crystal {

std::vector<Violation> validate_C2(const Rows& t) {
  std::vector<Violation> out;
  if (t.empty()) return out;
  if (t.size() > 2) {
    out.push_back({0, 0, 0, "more than two rows"});
    return out;
  }
  if (t.size() == 2 && t[1].size() > t[0].size()) {
    out.push_back({0, 1, 0, "second row longer than first"});
    return out;
  }
  for (size_t r = 0; r < t.size(); ++r)
    for (size_t c = 0; c < t[r].size(); ++c) {
      int x = t[r][c];
      if (x != 1 && x != 2 && x != -2 && x != -1) {
        out.push_back({0, static_cast<int>(r), static_cast<int>(c), "invalid letter"});
        return out;
      }
    }
  for (size_t r = 0; r < t.size(); ++r)
    for (size_t c = 0; c + 1 < t[r].size(); ++c)
      if (!c2_leq(t[r][c], t[r][c + 1]))
        out.push_back({1, static_cast<int>(r), static_cast<int>(c), "row decreases"});
  if (t.size() == 2) {
    for (size_t c = 0; c < t[1].size(); ++c) {
      if (!c2_lt(t[0][c], t[1][c]))
        out.push_back({2, 0, static_cast<int>(c), "column not strictly increasing"});
      if (t[0][c] == 1 && t[1][c] == -1)
        out.push_back({3, 0, static_cast<int>(c), "column contains 1 and 1bar"});
    }
    for (size_t c = 0; c + 1 < t[1].size(); ++c)
      if (t[0][c] == 2 && t[1][c + 1] == -2)
        out.push_back({4, 0, static_cast<int>(c), "2 over-left of 2bar square"});
  }
  return out;
}

std::vector<int> weight_C2(const Rows& t) {
  std::vector<int> w(2, 0);
  for (const auto& row : t)
    for (int x : row) {
      if (std::abs(x) == 1) w[0] += x > 0 ? 1 : -1;
      else w[1] += x > 0 ? 1 : -1;
    }
  return w;
}

std::vector<std::pair<int, int>> c2_column_word_cells(const Rows& t) {
  std::vector<std::pair<int, int>> cells;
  const size_t two = t.size() == 2 ? t[1].size() : 0;
  for (size_t c = 0; c < two; ++c) {
    cells.push_back({1, static_cast<int>(c)});
    cells.push_back({0, static_cast<int>(c)});
  }
  if (!t.empty())
    for (size_t c = two; c < t[0].size(); ++c) cells.push_back({0, static_cast<int>(c)});
  return cells;
}

std::vector<int> c2_column_word(const Rows& t) {
  std::vector<int> w;
  for (auto [r, c] : c2_column_word_cells(t)) w.push_back(t[r][c]);
  return w;
}

namespace {

char sig_symbol(int x, int i) {
  if (i == 1) return (x == 1 || x == -2) ? '-' : '+';
  if (x == 2) return '-';
  if (x == -2) return '+';
  return '*';
}

Signature tableau_signature(const Rows& t, int i) {
  Signature s;
  auto w = c2_column_word(t);
  for (size_t k = 0; k < w.size(); ++k) {
    s.symbols.push_back(sig_symbol(w[k], i));
    s.origins.push_back(static_cast<int>(k));
  }
  return s;
}

}  // namespace

std::string c2_signature(const Rows& t, int i) { return tableau_signature(t, i).symbols; }

std::optional<Rows> c2_op(const Rows& t, int i, bool is_f) {
  Signature red = reduce_signature(tableau_signature(t, i));
  int pos = is_f ? rightmost_minus_origin(red) : leftmost_plus_origin(red);
  if (pos < 0) return std::nullopt;
  auto cells = c2_column_word_cells(t);
  auto [r, c] = cells[pos];
  int x = t[r][c];
  int y = is_f ? f_letter_C2(x, i) : e_letter_C2(x, i);
  if (y == 0) throw std::logic_error("signature pointed at an inert letter");
  Rows out = t;
  out[r][c] = y;
  if (!validate_C2(out).empty()) throw std::logic_error("operator produced an invalid tableau");
  return out;
}

Rows c2_highest_weight(const std::vector<int>& shape) {
  Rows t;
  for (size_t r = 0; r < shape.size(); ++r)
    if (shape[r] > 0) t.push_back(std::vector<int>(shape[r], static_cast<int>(r) + 1));
  return t;
}

CrystalGraph generate_C2(const std::vector<int>& shape, size_t cap) {
  StepFn step = [](const Rows& t, int color, bool is_f) { return c2_op(t, color, is_f); };
  return generate(c2_highest_weight(shape), step, {1, 2},
                  [](const Rows& t) { return weight_C2(t); }, cap);
}

ABCDStats abcd(const Rows& t) {
  ABCDStats s;
  if (t.empty()) return s;
  for (int x : t[0]) {
    if (x == -2) ++s.A;
    if (x == 2) ++s.C;
  }
  s.B = s.C;
  if (t.size() == 2)
    for (int x : t[1]) {
      if (x == -1) ++s.B;
      if (x == -2) ++s.D;
    }
  return s;
}

Block block_of_action(const Rows& t, int i) {
  auto s = abcd(t);
  if (i == 1) return s.A < s.B ? Block::left : Block::right;
  return s.C < s.D ? Block::left : Block::right;
}

Block actual_block(const Rows& t, int i) {
  Signature red = reduce_signature(tableau_signature(t, i));
  int pos = leftmost_plus_origin(red);
  if (pos < 0) throw std::invalid_argument("e_i kills the tableau");
  auto [r, c] = c2_column_word_cells(t)[pos];
  int x = t[r][c];
  if (i == 1) {
    if ((r == 0 && x == 2) || (r == 1 && x == -1)) return Block::left;
    if (r == 0 && x == -1) return Block::right;
  } else {
    if (r == 1 && x == -2) return Block::left;
    if (r == 0 && x == -2) return Block::right;
  }
  throw std::logic_error("acted entry fits no block");
}

int predict_degree(const Rows& t) {
  auto s = abcd(t);
  if (s.C < s.D) return 2;
  int col;  // 0: A<B, 1: A=B, 2: A=B+1, 3: A>B+1
  if (s.A < s.B) col = 0;
  else if (s.A == s.B) col = 1;
  else if (s.A == s.B + 1) col = 2;
  else col = 3;
  static const int eq[4] = {4, 7, 4, 2};
  static const int gt[4] = {2, 5, 4, 2};
  return s.C == s.D ? eq[col] : gt[col];
}

std::optional<MinRelation> find_min_relation(const CrystalGraph& g, int v, int max_len) {
  for (int len = 2; len <= max_len; ++len) {
    // endpoint keyed by (#e_2 in the sequence, final vertex), grouped by the
    // first color applied.
    std::map<std::pair<int, int>, std::vector<int>> by_first[3];  // index 1, 2
    for (int mask = 0; mask < (1 << len); ++mask) {
      std::vector<int> seq;
      int w = v, twos = 0;
      bool ok = true;
      for (int p = 0; p < len && ok; ++p) {
        int color = (mask >> p) & 1 ? 2 : 1;
        seq.push_back(color);
        twos += color == 2;
        w = g.e(w, color);
        ok = w >= 0;
      }
      if (!ok) continue;
      auto& slot = by_first[seq[0]][{twos, w}];
      if (slot.empty()) slot = seq;
    }
    for (auto& [key, s2] : by_first[1]) {
      auto it = by_first[2].find(key);
      if (it != by_first[2].end()) {
        MinRelation rel;
        rel.degree = len;
        rel.seq1 = it->second;  // starts with e_2
        rel.seq2 = s2;          // starts with e_1
        return rel;
      }
    }
  }
  return std::nullopt;
}

}  // namespace crystal
