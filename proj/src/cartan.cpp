#include "crystal/cartan.hpp"

#include <numeric>
#include <stdexcept>

namespace crystal {

int CartanData::node_pos(int i) const {
  for (size_t k = 0; k < nodes.size(); ++k)
    if (nodes[k] == i) return static_cast<int>(k);
  throw std::invalid_argument("unknown Dynkin node");
}

int CartanData::aij(int i, int j) const { return a[node_pos(i)][node_pos(j)]; }

static std::vector<std::vector<int>> identity2(int m) {
  std::vector<std::vector<int>> a(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i) a[i][i] = 2;
  return a;
}

CartanData cartan_D(int n) {
  if (n < 3) throw std::invalid_argument("type D needs rank >= 3");
  CartanData c;
  c.type_tag = "D";
  c.rank = n;
  for (int i = 1; i <= n; ++i) c.nodes.push_back(i);
  c.a = identity2(n);
  auto link = [&](int i, int j) { c.a[i - 1][j - 1] = c.a[j - 1][i - 1] = -1; };
  for (int i = 1; i <= n - 2; ++i) link(i, i + 1);
  link(n - 2, n);
  return c;
}

CartanData cartan_D_affine(int n) {
  CartanData fin = cartan_D(n);
  CartanData c;
  c.type_tag = "D_affine";
  c.rank = n;
  for (int i = 0; i <= n; ++i) c.nodes.push_back(i);
  c.a = identity2(n + 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) c.a[i][j] = fin.a[i - 1][j - 1];
  c.a[0][2] = c.a[2][0] = -1;  // node 0 attaches at node 2
  c.central_coeffs.assign(n + 1, 2);
  c.central_coeffs[0] = c.central_coeffs[1] = 1;
  c.central_coeffs[n - 1] = c.central_coeffs[n] = 1;
  return c;
}

CartanData cartan_C2() {
  CartanData c;
  c.type_tag = "C2";
  c.rank = 2;
  c.nodes = {1, 2};
  c.a = {{2, -2}, {-1, 2}};
  return c;
}

std::vector<int> simple_root_D(int i, int n) {
  std::vector<int> r(n, 0);
  if (i < 1 || i > n) throw std::invalid_argument("bad node");
  if (i < n) {
    r[i - 1] = 1;
    r[i] = -1;
  } else {
    r[n - 2] = 1;
    r[n - 1] = 1;
  }
  return r;
}

std::vector<int> simple_root_C2(int i) {
  if (i == 1) return {1, -1};
  if (i == 2) return {0, 2};
  throw std::invalid_argument("bad node");
}

long long pairing_D(int i, const std::vector<int>& w, int n) {
  if (i < 1 || i > n || static_cast<int>(w.size()) != n)
    throw std::invalid_argument("bad pairing input");
  if (i < n) return w[i - 1] - w[i];
  return w[n - 2] + w[n - 1];
}

long long pairing_C2(int i, const std::vector<int>& w) {
  if (w.size() != 2) throw std::invalid_argument("bad C2 weight");
  if (i == 1) return w[0] - w[1];
  if (i == 2) return w[1];
  throw std::invalid_argument("bad node");
}

namespace {
// Exact rational accumulator with eager gcd reduction.
struct Rat {
  long long num = 1, den = 1;
  void mul(long long p, long long q) {
    if (q == 0) throw std::overflow_error("division by zero");
    long long g1 = std::gcd(std::abs(p), std::abs(den));
    long long g2 = std::gcd(std::abs(q), std::abs(num));
    p /= g1 ? g1 : 1;
    den /= g1 ? g1 : 1;
    q /= g2 ? g2 : 1;
    num /= g2 ? g2 : 1;
    num *= p;
    den *= q;
    long long g = std::gcd(std::abs(num), std::abs(den));
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
};
}  // namespace

long long weyl_dim_D(std::vector<long long> lambda, int n) {
  lambda.resize(n, 0);
  for (int i = 0; i + 1 < n; ++i)
    if (lambda[i] < lambda[i + 1]) throw std::invalid_argument("not a partition");
  std::vector<long long> l(n), r(n);
  for (int i = 0; i < n; ++i) {
    r[i] = n - 1 - i;
    l[i] = lambda[i] + r[i];
  }
  Rat acc;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      acc.mul(l[i] - l[j], r[i] - r[j]);
      acc.mul(l[i] + l[j], r[i] + r[j]);
    }
  if (acc.den != 1) throw std::logic_error("Weyl dimension is not integral");
  return acc.num;
}

long long weyl_dim_C2(long long l1, long long l2) {
  if (l1 < l2 || l2 < 0) throw std::invalid_argument("not a partition");
  long long p = (l1 - l2 + 1) * (l2 + 1) * (l1 + 2) * (l1 + l2 + 3);
  if (p % 6 != 0) throw std::logic_error("Weyl dimension is not integral");
  return p / 6;
}

}  // namespace crystal
