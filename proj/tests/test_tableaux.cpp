#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crystal/cartan.hpp"
#include "crystal/dtableau.hpp"

using namespace crystal;

TEST_CASE("worked rank-four tableau: validity and column word") {
  Rows T{{1, 2, 4, -3, -3}, {3, -4, -4, -2, -1}};
  CHECK(validate_D(T, 4).empty());
  CHECK(column_word(T) == std::vector<int>{3, 1, -4, 2, -4, 4, -2, -3, -1, -3});
}

TEST_CASE("single cell and empty tableau column words") {
  CHECK(column_word({{5}}) == std::vector<int>{5});
  CHECK(column_word({}) == std::vector<int>{});
}

TEST_CASE("column violations are reported") {
  // A column with a non-increasing pair.
  Rows bad{{2}, {2}};
  auto v = validate_D(bad, 4);
  REQUIRE_FALSE(v.empty());
  CHECK(v[0].item == 2);
  // The excluded (n-1 / n)(n / n-1 bar) row pair in a two-row shape.
  Rows bad2{{3, 4}, {4, -3}};
  CHECK_FALSE(validate_D(bad2, 4).empty());
}

TEST_CASE("worked Kashiwara operator examples") {
  Rows T{{1, 2, 4, -3, -3}, {3, -4, -4, -2, -1}};
  auto f2 = kashiwara(T, 2, true, 4);
  REQUIRE(f2.has_value());
  CHECK(*f2 == Rows{{1, 2, 4, -3, -2}, {3, -4, -4, -2, -1}});
  auto f4 = kashiwara(T, 4, true, 4);
  REQUIRE(f4.has_value());
  CHECK(*f4 == Rows{{1, 2, 4, -3, -3}, {-4, -4, -4, -2, -1}});
  auto e4 = kashiwara(T, 4, false, 4);
  REQUIRE(e4.has_value());
  CHECK(*e4 == Rows{{1, 2, 4, -3, -3}, {3, 3, -4, -2, -1}});
  CHECK_FALSE(kashiwara(T, 2, false, 4).has_value());
}

TEST_CASE("f then e is the identity across a generated crystal") {
  auto g = generate_B({2, 1}, 4);
  for (size_t v = 0; v < g.size(); ++v)
    for (int i = 1; i <= 4; ++i) {
      auto fi = kashiwara(g.vertices[v], i, true, 4);
      if (!fi) continue;
      auto back = kashiwara(*fi, i, false, 4);
      REQUIRE(back.has_value());
      CHECK(*back == g.vertices[v]);
    }
}

TEST_CASE("highest weight tableaux are killed by every raising operator") {
  for (auto [shape, n] : std::vector<std::pair<std::vector<int>, int>>{
           {{2, 2}, 4}, {{}, 4}, {{2, 2, 1, 1}, 5}}) {
    Rows hw = highest_weight_tableau(shape, n);
    for (int i = 1; i <= n; ++i) CHECK_FALSE(kashiwara(hw, i, false, n).has_value());
  }
  Rows hw22 = highest_weight_tableau({2, 2}, 4);
  CHECK(hw22 == Rows{{1, 1}, {2, 2}});
}

TEST_CASE("generated crystals have a unique highest weight vertex") {
  for (auto [shape, n] : std::vector<std::pair<std::vector<int>, int>>{
           {{1}, 4}, {{1, 1}, 4}, {{2, 1}, 3}, {{3, 1}, 3}}) {
    auto g = generate_B(shape, n);
    CHECK(g.highest_weight_vertices().size() == 1);
    CHECK(static_cast<long long>(g.size()) ==
          weyl_dim_D(std::vector<long long>(shape.begin(), shape.end()), n));
  }
}

TEST_CASE("graph statistics match the signature rule statistics") {
  int n = 4;
  auto g = generate_B({2, 1}, n);
  for (size_t v = 0; v < g.size(); ++v)
    for (int i = 1; i <= n; ++i) {
      // Walk the i-string explicitly with the tableau operator.
      int eps = 0;
      for (auto t = kashiwara(g.vertices[v], i, false, n); t;
           t = kashiwara(*t, i, false, n))
        ++eps;
      int phi = 0;
      for (auto t = kashiwara(g.vertices[v], i, true, n); t;
           t = kashiwara(*t, i, true, n))
        ++phi;
      CHECK(eps == g.eps(v, i));
      CHECK(phi == g.phi(v, i));
    }
}

TEST_CASE("dual map worked example, transport vs letterwise") {
  auto b = generate_B({3, 1}, 3);
  auto d = dual_map(b, 3);
  Rows T{{1, 1, 2}, {-3}};
  int v = b.find(T);
  REQUIRE(v >= 0);
  Rows expect{{-3, -1, -1}, {-2}};
  CHECK(b.vertices[d[v]] == expect);
  auto lw = dual_letterwise_two_rows(T, 3);
  REQUIRE(lw.has_value());
  CHECK(*lw == expect);
}

TEST_CASE("dual map is an involution sending hw to lw") {
  for (auto [shape, n] : std::vector<std::pair<std::vector<int>, int>>{
           {{1, 1}, 4}, {{3, 1}, 3}}) {
    auto b = generate_B(shape, n);
    auto d = dual_map(b, n);
    for (size_t v = 0; v < b.size(); ++v) CHECK(d[d[v]] == static_cast<int>(v));
    int hw = b.highest_weight_vertices().at(0);
    for (int i = 1; i <= n; ++i) CHECK(b.f(d[hw], i) == -1);
  }
}

TEST_CASE("dual map conjugates the operators") {
  int n = 4;
  auto b = generate_B({1, 1}, n);
  auto d = dual_map(b, n);
  for (size_t v = 0; v < b.size(); ++v)
    for (int i = 1; i <= n; ++i) {
      int w = b.f(v, i);
      if (w >= 0) CHECK(b.e(d[v], tau_D(i, n)) == d[w]);
    }
}

TEST_CASE("tau swaps the fork nodes exactly for odd rank") {
  CHECK(tau_D(3, 3) == 2);
  CHECK(tau_D(2, 3) == 3);
  CHECK(tau_D(1, 3) == 1);
  CHECK(tau_D(3, 4) == 3);
  CHECK(tau_D(4, 4) == 4);
  CHECK(tau_D(5, 5) == 4);
}

TEST_CASE("every generated vertex is a valid tableau") {
  int n = 4;
  auto g = generate_B({2, 2}, n);
  for (const auto& t : g.vertices) CHECK(validate_D(t, n).empty());
  CHECK(static_cast<long long>(g.size()) == weyl_dim_D({2, 2, 0, 0}, n));
}
