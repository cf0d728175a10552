#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "crystal/cartan.hpp"
#include "crystal/dtableau.hpp"
#include "crystal/io.hpp"
#include "crystal/letters.hpp"
#include "crystal/signature.hpp"
#include "crystal/stembridge.hpp"

using namespace crystal;

namespace {

Signature sig_from_string(const std::string& s) {
  Signature sig;
  sig.symbols = s;
  for (size_t i = 0; i < s.size(); ++i) sig.origins.push_back(static_cast<int>(i));
  return sig;
}

/// Reference reducer: repeatedly cancel one applicable (+, -) pair chosen at
/// random, until none applies.  Used to test confluence of reduce_signature.
Signature reduce_randomized(Signature sig, std::mt19937& rng) {
  for (;;) {
    std::vector<std::pair<size_t, size_t>> cancellable;
    for (size_t i = 0; i < sig.symbols.size(); ++i) {
      if (sig.symbols[i] != '+') continue;
      size_t j = i + 1;
      while (j < sig.symbols.size() && sig.symbols[j] == '*') ++j;
      if (j < sig.symbols.size() && sig.symbols[j] == '-') cancellable.push_back({i, j});
    }
    if (cancellable.empty()) return sig;
    auto [i, j] = cancellable[rng() % cancellable.size()];
    sig.symbols[i] = sig.symbols[j] = '*';
  }
}

std::string random_symbols(std::mt19937& rng, size_t len) {
  static const char alphabet[] = "+-*";
  std::string s;
  for (size_t i = 0; i < len; ++i) s += alphabet[rng() % 3];
  return s;
}

}  // namespace

TEST_CASE("signature reduction examples") {
  CHECK(compact_signature(reduce_signature(sig_from_string("+-+--"))) == "-");
  CHECK(compact_signature(reduce_signature(sig_from_string("-++-++"))) == "-+++");
  CHECK(reduce_signature(sig_from_string("-*-*+-*-++*")).symbols == "-*-****-++*");
}

TEST_CASE("signature reduction is idempotent and confluent") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 500; ++trial) {
    Signature sig = sig_from_string(random_symbols(rng, 1 + rng() % 20));
    Signature red = reduce_signature(sig);
    CHECK(reduce_signature(red).symbols == red.symbols);
    Signature ref = reduce_randomized(sig, rng);
    CHECK(ref.symbols == red.symbols);
  }
}

TEST_CASE("reduced signature shape is -^a *^k +^b") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    std::string s = reduce_signature(sig_from_string(random_symbols(rng, 15))).symbols;
    std::string nostars;
    for (char c : s)
      if (c != '*') nostars += c;
    CHECK(std::is_sorted(nostars.begin(), nostars.end(),
                         [](char a, char b) { return a == '-' && b == '+'; }));
  }
}

TEST_CASE("signature act on the worked ten-letter word") {
  std::vector<int> w{3, 1, -4, 2, -4, 4, -2, -3, -1, -3};
  int n = 4, i = 2;
  auto phi = [&](int x) { return phi_letter_D(x, i, n); };
  auto eps = [&](int x) { return eps_letter_D(x, i, n); };
  auto stepf = [&](int x) { return f_letter_D(x, i, n); };
  auto stepe = [&](int x) { return e_letter_D(x, i, n); };
  auto w2 = w;
  CHECK(act_word(w2, true, phi, eps, stepf));
  std::vector<int> want{3, 1, -4, 2, -4, 4, -2, -3, -1, -2};
  CHECK(w2 == want);
  auto w3 = w;
  CHECK_FALSE(act_word(w3, false, phi, eps, stepe));
  std::vector<int> empty;
  CHECK_FALSE(act_word(empty, true, phi, eps, stepf));
}

TEST_CASE("vector representation of rank four") {
  auto b = generate_B({1}, 4);
  REQUIRE(b.size() == 8);
  int v2 = b.find({{2}});
  REQUIRE(v2 >= 0);
  CHECK(b.eps(v2, 1) == 1);
  CHECK(b.phi(v2, 1) == 0);
  CHECK(b.eps(v2, 2) == 0);
  CHECK(b.phi(v2, 2) == 1);
  // chain 1 -> 2 -> 3 -> {4, 4bar} -> 3bar -> 2bar -> 1bar
  CHECK(b.f(b.find({{1}}), 1) == b.find({{2}}));
  CHECK(b.f(b.find({{3}}), 4) == b.find({{-4}}));
  CHECK(b.f(b.find({{4}}), 4) == b.find({{-3}}));
  CHECK(b.f(b.find({{-2}}), 1) == b.find({{-1}}));
}

TEST_CASE("single vertex graph") {
  StepFn nullstep = [](const Rows&, int, bool) { return std::nullopt; };
  auto g = generate({{7}}, nullstep, {1, 2},
                    [](const Rows&) { return std::vector<int>{0}; });
  CHECK(g.size() == 1);
  auto rep = check_stembridge(g, cartan_D(4));
  CHECK(rep.all_pass());
}

TEST_CASE("weight decreases by the simple root along every edge") {
  for (int n : {3, 4}) {
    auto g = generate_B({2, 1}, n);
    for (size_t v = 0; v < g.size(); ++v)
      for (const auto& [i, w] : g.f_edge[v]) {
        auto a = g.weight[v];
        auto root = simple_root_D(i, n);
        for (int k = 0; k < n; ++k) a[k] -= root[k];
        CHECK(a == g.weight[w]);
      }
  }
}

TEST_CASE("string length identity and f-then-e inverse") {
  auto g = generate_B({1, 1}, 4);
  REQUIRE(g.size() == 28);
  for (size_t v = 0; v < g.size(); ++v)
    for (int i = 1; i <= 4; ++i) {
      CHECK(g.phi(v, i) - g.eps(v, i) == pairing_D(i, g.weight[v], 4));
      int w = g.f(v, i);
      if (w >= 0) CHECK(g.e(w, i) == static_cast<int>(v));
    }
  for (int hw : g.highest_weight_vertices())
    for (int i = 1; i <= 4; ++i) CHECK(g.eps(hw, i) == 0);
}

TEST_CASE("weight multiset is invariant under simple reflections") {
  int n = 4;
  auto g = generate_B({2, 1}, n);
  std::multiset<std::vector<int>> weights(g.weight.begin(), g.weight.end());
  for (int i = 1; i <= n; ++i) {
    std::multiset<std::vector<int>> reflected;
    for (auto w : g.weight) {
      long long p = pairing_D(i, w, n);
      auto root = simple_root_D(i, n);
      for (int k = 0; k < n; ++k) w[k] -= static_cast<int>(p) * root[k];
      reflected.insert(w);
    }
    CHECK(reflected == weights);
  }
}

TEST_CASE("C2 Cartan convention satisfies the string length identity") {
  auto cd = cartan_C2();
  CHECK(cd.aij(1, 2) == -2);
  CHECK(cd.aij(2, 1) == -1);
  CHECK(cd.aij(1, 1) == 2);
}

TEST_CASE("affine Cartan data") {
  auto cd = cartan_D_affine(4);
  CHECK(cd.central_coeffs == std::vector<int>{1, 1, 2, 1, 1});
  auto cd5 = cartan_D_affine(5);
  CHECK(cd5.central_coeffs == std::vector<int>{1, 1, 2, 2, 1, 1});
  for (size_t i = 0; i < cd.nodes.size(); ++i) {
    CHECK(cd.a[i][i] == 2);
    for (size_t j = 0; j < cd.nodes.size(); ++j)
      if (i != j) CHECK(cd.a[i][j] <= 0);
  }
}

TEST_CASE("stembridge axioms on a rank-four crystal") {
  auto g = generate_B({2, 1}, 4);
  auto rep = check_stembridge(g, cartan_D(4));
  for (const auto& a : rep.axioms) {
    INFO(a.name, ": ", a.counterexample);
    CHECK(a.pass);
  }
  bool p3_fired = false;
  for (const auto& a : rep.axioms)
    if (a.name == "P3" && a.checked > 0) p3_fired = true;
  CHECK(p3_fired);
}

TEST_CASE("JSON round-trip is graph-identical") {
  auto g = generate_B({1, 1}, 4);
  auto g2 = graph_from_json(graph_to_json(g));
  CHECK(g2.vertices == g.vertices);
  CHECK(g2.colors == g.colors);
  CHECK(g2.weight == g.weight);
  CHECK(g2.f_edge == g.f_edge);
  CHECK(g2.e_edge == g.e_edge);
  CHECK(g2.index == g.index);
}

TEST_CASE("DOT output is deterministic") {
  auto g = generate_B({1}, 4);
  std::string d1 = graph_to_dot(g);
  std::string d2 = graph_to_dot(generate_B({1}, 4));
  CHECK(d1 == d2);
  CHECK(d1.find("digraph") == 0);
  CHECK(d1.find("rank=same") != std::string::npos);
  // distinct pen colors per color
  CHECK(pen_color(1) != pen_color(2));
  CHECK(pen_color(0) != pen_color(1));
}
