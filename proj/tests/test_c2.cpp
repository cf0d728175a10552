#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "crystal/c2.hpp"
#include "crystal/cartan.hpp"

using namespace crystal;

TEST_CASE("worked example: validity, column word, signatures") {
  Rows T{{1, 1, 2, 2, -2, -2, -1}, {2, 2, -2, -1}};
  CHECK(validate_C2(T).empty());
  CHECK(c2_column_word(T) == std::vector<int>{2, 1, 2, 1, -2, 2, -1, 2, -2, -2, -1});
  CHECK(c2_signature(T, 1) == "+-+--+++--+");
  CHECK(c2_signature(T, 2) == "-*-*+-*-++*");
}

TEST_CASE("worked example: all four operators") {
  Rows T{{1, 1, 2, 2, -2, -2, -1}, {2, 2, -2, -1}};
  auto f1 = c2_op(T, 1, true);
  REQUIRE(f1.has_value());
  CHECK(*f1 == Rows{{1, 1, 2, 2, -2, -2, -1}, {2, 2, -1, -1}});
  auto f2 = c2_op(T, 2, true);
  REQUIRE(f2.has_value());
  CHECK(*f2 == Rows{{1, 1, 2, -2, -2, -2, -1}, {2, 2, -2, -1}});
  auto e1 = c2_op(T, 1, false);
  REQUIRE(e1.has_value());
  CHECK(*e1 == Rows{{1, 1, 1, 2, -2, -2, -1}, {2, 2, -2, -1}});
  auto e2 = c2_op(T, 2, false);
  REQUIRE(e2.has_value());
  CHECK(*e2 == Rows{{1, 1, 2, 2, 2, -2, -1}, {2, 2, -2, -1}});
}

TEST_CASE("validity rules") {
  // Column with 1 and 1bar.
  CHECK_FALSE(validate_C2({{1}, {-1}}).empty());
  // The excluded 2 / 2bar square.
  CHECK_FALSE(validate_C2({{2, 2}, {-2, -2}}).empty());
  CHECK(validate_C2({{1, 2}, {2, -2}}).empty());
  // Rows must weakly increase, columns strictly.
  CHECK_FALSE(validate_C2({{2, 1}}).empty());
  CHECK_FALSE(validate_C2({{2}, {2}}).empty());
}

TEST_CASE("ABCD statistics of the worked example") {
  Rows t{{1, 1, 2, -2, -2, -1}, {2, -2, -2, -1}};
  auto s = abcd(t);
  CHECK(s.A == 2);
  CHECK(s.B == 2);
  CHECK(s.C == 1);
  CHECK(s.D == 2);
}

TEST_CASE("block claims on the four reference tableaux") {
  Rows t1{{1, 2, 2, -2, -2, -1}, {2, -2, -1}};
  auto s1 = abcd(t1);
  CHECK(s1.A == 2);
  CHECK(s1.B == 3);
  CHECK(block_of_action(t1, 1) == Block::left);
  CHECK(actual_block(t1, 1) == Block::left);
  auto r1 = c2_op(t1, 1, false);
  REQUIRE(r1.has_value());
  CHECK((*r1)[0][1] == 1);  // leftmost top-row 2

  Rows t2{{1, 1, 2, -2, -2, -1}, {2, 2, -1}};
  auto s2 = abcd(t2);
  CHECK(s2.A == 2);
  CHECK(s2.B == 2);
  CHECK(block_of_action(t2, 1) == Block::right);
  CHECK(actual_block(t2, 1) == Block::right);
  auto r2 = c2_op(t2, 1, false);
  REQUIRE(r2.has_value());
  CHECK((*r2)[0][5] == -2);  // top-row 1bar

  Rows t3{{1, 1, 2, -2, -2, -1}, {-2, -2, -1}};
  CHECK(block_of_action(t3, 2) == Block::left);
  CHECK(actual_block(t3, 2) == Block::left);
  auto r3 = c2_op(t3, 2, false);
  REQUIRE(r3.has_value());
  CHECK((*r3)[1][0] == 2);  // bottom-row 2bar

  Rows t4{{1, 2, 2, -2, -2, -1}, {-2, -2, -1}};
  CHECK(block_of_action(t4, 2) == Block::right);
  CHECK(actual_block(t4, 2) == Block::right);
  auto r4 = c2_op(t4, 2, false);
  REQUIRE(r4.has_value());
  CHECK((*r4)[0][3] == 2);  // top-row 2bar
}

TEST_CASE("dimension oracle up to shape (4,3)") {
  CHECK(weyl_dim_C2(1, 0) == 4);
  CHECK(weyl_dim_C2(1, 1) == 5);
  CHECK(weyl_dim_C2(4, 3) == 80);
  for (int a = 1; a <= 4; ++a)
    for (int b = 0; b <= std::min(a, 3); ++b) {
      auto g = generate_C2({a, b});
      CHECK(static_cast<long long>(g.size()) == weyl_dim_C2(a, b));
      CHECK(g.highest_weight_vertices().size() == 1);
    }
}

TEST_CASE("transition laws, blocks, and relation degrees up to (4,3)") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 0; b <= std::min(a, 3); ++b) {
      auto g = generate_C2({a, b});
      for (size_t v = 0; v < g.size(); ++v) {
        const Rows& t = g.vertices[v];
        for (int i : {1, 2}) {
          int w = g.e(v, i);
          if (w < 0) continue;
          auto s = abcd(t), s2 = abcd(g.vertices[w]);
          if (i == 1) {
            if (s.A < s.B) {
              CHECK(s2.A == s.A);
              CHECK(s2.B == s.B - 1);
              CHECK(s2.C - s2.D == s.C - s.D - 1);
            } else {
              CHECK(s2.A == s.A + 1);
              CHECK(s2.B == s.B);
              CHECK(s2.C == s.C);
              CHECK(s2.D == s.D);
            }
          } else {
            if (s.C < s.D) {
              CHECK(s2.A == s.A);
              CHECK(s2.B == s.B);
              CHECK(s2.C == s.C);
              CHECK(s2.D == s.D - 1);
            } else {
              CHECK(s2.A == s.A - 1);
              CHECK(s2.B == s.B + 1);
              CHECK(s2.C == s.C + 1);
              CHECK(s2.D == s.D);
            }
          }
          CHECK(block_of_action(t, i) == actual_block(t, i));
        }
        if (g.e(v, 1) >= 0 && g.e(v, 2) >= 0) {
          auto rel = find_min_relation(g, static_cast<int>(v));
          REQUIRE(rel.has_value());
          CHECK(rel->degree == predict_degree(t));
          bool in_set = rel->degree == 2 || rel->degree == 4 || rel->degree == 5 ||
                        rel->degree == 7;
          CHECK(in_set);
        }
      }
    }
}

namespace {

int apply_seq(const CrystalGraph& g, int v, const std::vector<int>& colors) {
  for (int c : colors) {
    if (v < 0) return -1;
    v = g.e(v, c);
  }
  return v;
}

/// First vertex in any crystal up to (4,3) with the given statistics and both
/// raising operators defined.
std::pair<CrystalGraph, int> find_witness(const ABCDStats& want) {
  for (int a = 1; a <= 4; ++a)
    for (int b = 0; b <= std::min(a, 3); ++b) {
      auto g = generate_C2({a, b});
      for (size_t v = 0; v < g.size(); ++v)
        if (g.e(v, 1) >= 0 && g.e(v, 2) >= 0 && abcd(g.vertices[v]) == want)
          return {g, static_cast<int>(v)};
    }
  throw std::runtime_error("no witness found");
}

}  // namespace

TEST_CASE("degree five sequence identities on a (2,2,1,0) witness") {
  auto [g, v] = find_witness({2, 2, 1, 0});
  CHECK(predict_degree(g.vertices[v]) == 5);
  // In application order (first operator first).
  int x1 = apply_seq(g, v, {2, 1, 1, 1, 2});  // e2 e1^3 e2
  int x2 = apply_seq(g, v, {1, 2, 1, 2, 1});  // e1 e2 e1 e2 e1
  int x3 = apply_seq(g, v, {1, 2, 2, 1, 1});  // e1^2 e2^2 e1
  REQUIRE(x1 >= 0);
  CHECK(x1 == x2);
  CHECK(x1 == x3);
  auto rel = find_min_relation(g, v);
  REQUIRE(rel.has_value());
  CHECK(rel->degree == 5);
}

TEST_CASE("degree seven sequence identities on a (1,1,0,0) witness") {
  auto [g, v] = find_witness({1, 1, 0, 0});
  CHECK(predict_degree(g.vertices[v]) == 7);
  auto rel = find_min_relation(g, v);
  REQUIRE(rel.has_value());
  CHECK(rel->degree == 7);
  // The four degree-seven words, for one assignment of the two colors.
  bool ok = false;
  for (int i : {1, 2}) {
    int j = 3 - i;
    int y1 = apply_seq(g, v, {j, i, i, j, j, j, i});  // e_i e_j^3 e_i^2 e_j
    int y2 = apply_seq(g, v, {j, i, j, i, j, j, i});  // e_i e_j^2 e_i e_j e_i e_j
    int y3 = apply_seq(g, v, {i, j, j, j, i, i, j});  // e_j e_i^2 e_j^3 e_i
    int y4 = apply_seq(g, v, {i, j, j, i, j, i, j});  // e_j e_i e_j e_i e_j^2 e_i
    if (y1 >= 0 && y1 == y2 && y1 == y3 && y1 == y4) ok = true;
  }
  CHECK(ok);
}
