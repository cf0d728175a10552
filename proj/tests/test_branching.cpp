#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "crystal/branching.hpp"
#include "crystal/dtableau.hpp"

using namespace crystal;

TEST_CASE("rank five branching of the (2,2,1,1) crystal") {
  int n = 5;
  auto g = generate_B({2, 2, 1, 1}, n);
  CHECK(g.size() == 5940);
  auto dec = branch_decompose(g, n);
  CHECK(dec.components.size() == 20);

  // Multiplicities over the non-conjugate components (the nine-row table).
  std::map<std::vector<int>, int> nonconj;
  for (const auto& c : dec.components)
    if (!c.conjugate) ++nonconj[c.label];
  std::map<std::vector<int>, int> expect{
      {{1, 1}, 1},       {{1, 1, 1}, 2},    {{1, 1, 1, 1}, 1},
      {{2, 1}, 2},       {{2, 1, 1}, 4},    {{2, 1, 1, 1}, 2},
      {{2, 2}, 1},       {{2, 2, 1}, 2},    {{2, 2, 1, 1}, 1}};
  CHECK(nonconj == expect);

  // Conjugate partners exist exactly for full-height labels, with equal
  // multiplicities.
  std::map<std::vector<int>, int> conj;
  for (const auto& c : dec.components)
    if (c.conjugate) ++conj[c.label];
  std::map<std::vector<int>, int> expect_conj{
      {{1, 1, 1, 1}, 1}, {{2, 1, 1, 1}, 2}, {{2, 2, 1, 1}, 1}};
  CHECK(conj == expect_conj);

  // Component sizes add up.
  size_t total = 0;
  for (const auto& c : dec.components) total += c.members.size();
  CHECK(total == g.size());
}

TEST_CASE("plus minus diagrams biject with non-conjugate components") {
  int n = 5;
  auto g = generate_B({2, 2, 1, 1}, n);
  auto dec = branch_decompose(g, n);
  auto pms = enumerate_pm_diagrams({2, 2, 1, 1});
  CHECK(pms.size() == 16);

  std::set<int> hw_nonconj;
  for (const auto& c : dec.components)
    if (!c.conjugate) hw_nonconj.insert(c.hw_vertex);

  std::set<int> hit;
  std::map<std::vector<int>, int> pm_mult;
  for (const auto& d : pms) {
    std::vector<int> lab = d.lambda;
    while (!lab.empty() && lab.back() == 0) lab.pop_back();
    ++pm_mult[lab];
    Rows t = pm_to_hw_tableau(d, n);
    int v = g.find(t);
    REQUIRE(v >= 0);
    for (int i = 2; i <= n; ++i) CHECK(g.e(v, i) == -1);
    CHECK(hit.insert(v).second);  // distinct diagrams hit distinct vertices
  }
  CHECK(hit == hw_nonconj);

  std::map<std::vector<int>, int> nonconj;
  for (const auto& c : dec.components)
    if (!c.conjugate) ++nonconj[c.label];
  CHECK(pm_mult == nonconj);
}

TEST_CASE("branching component graphs of rectangles match the prediction") {
  CHECK(bc_graph(generate_B({1}, 4), 4) == predicted_bc_rectangle(1, 1));
  CHECK(bc_graph(generate_B({2}, 4), 4) == predicted_bc_rectangle(1, 2));
  CHECK(bc_graph(generate_B({1, 1}, 4), 4) == predicted_bc_rectangle(2, 1));
  CHECK(bc_graph(generate_B({2, 2}, 4), 4) == predicted_bc_rectangle(2, 2));
  CHECK(bc_graph(generate_B({3, 3}, 4), 4) == predicted_bc_rectangle(2, 3));
  CHECK(bc_graph(generate_B({2, 2}, 5), 5) == predicted_bc_rectangle(2, 2));
}

TEST_CASE("structural properties of branching component graphs") {
  for (auto [shape, n] : std::vector<std::pair<std::vector<int>, int>>{
           {{2, 2}, 4}, {{3, 3}, 4}, {{2, 1}, 4}, {{2, 2}, 5}}) {
    auto bc = bc_graph(generate_B(shape, n), n);
    CHECK(bc_is_stratum_symmetric(bc));
    CHECK(bc_edges_one_box(bc));
    CHECK(bc_edges_adjacent_strata(bc));
  }
}

TEST_CASE("strata are constant along components and shifted by color one") {
  int n = 4;
  auto g = generate_B({2, 2}, n);
  auto dec = branch_decompose(g, n);
  for (const auto& c : dec.components)
    for (int v : c.members) CHECK(g.weight[v][0] == c.stratum);
  for (size_t v = 0; v < g.size(); ++v) {
    int w = g.f(v, 1);
    if (w >= 0) CHECK(g.weight[w][0] == g.weight[v][0] - 1);
  }
}

TEST_CASE("pm diagram counts for small shapes") {
  // One-row shapes: lambda <= mu <= Lambda gives triangular counts.
  CHECK(enumerate_pm_diagrams({1}).size() == 3);
  CHECK(enumerate_pm_diagrams({2}).size() == 6);
  // Single box column of height two.
  CHECK(enumerate_pm_diagrams({1, 1}).size() == 4);
}
