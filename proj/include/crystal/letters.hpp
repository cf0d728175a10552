#pragma once

#include <cstdlib>
#include <stdexcept>

namespace crystal {

/// Letters of the type D_n vector-representation alphabet are encoded as
/// nonzero signed integers: +i is the unbarred letter i, -i is the barred
/// letter i-bar.  The order is 1 < 2 < ... < n-1 < {n, n-bar} < n-1-bar <
/// ... < 1-bar, with n and n-bar incomparable.

/// Position of a letter in the chain; n and n-bar share a rank but are
/// distinct (and incomparable).
inline int letter_rank(int x, int n) {
  if (x == 0 || std::abs(x) > n) throw std::invalid_argument("bad letter");
  return x > 0 ? x : 2 * n - (-x);
}

inline bool letter_valid(int x, int n) { return x != 0 && std::abs(x) <= n; }

/// Partial order: a <= b.
inline bool letter_leq(int a, int b, int n) {
  if (a == b) return true;
  return letter_rank(a, n) < letter_rank(b, n);
}

/// Strict order: a < b (false when incomparable or equal).
inline bool letter_lt(int a, int b, int n) {
  return a != b && letter_rank(a, n) < letter_rank(b, n);
}

inline bool letter_incomparable(int a, int b, int n) {
  return a != b && letter_rank(a, n) == letter_rank(b, n);
}

inline int bar(int x) { return -x; }

/// f_i on the vector representation B(varpi_1); returns 0 when undefined.
/// For i < n:  i -> i+1 and -(i+1) -> -i  (this includes n-1 -> n and
/// -n -> -(n-1)).  For i = n:  n-1 -> -n and n -> -(n-1).
inline int f_letter_D(int x, int i, int n) {
  if (i < n) {
    if (x == i) return i + 1;
    if (x == -(i + 1)) return -i;
    return 0;
  }
  if (x == n - 1) return -n;
  if (x == n) return -(n - 1);
  return 0;
}

/// e_i on the vector representation; inverse of f_letter_D.
inline int e_letter_D(int x, int i, int n) {
  if (i < n) {
    if (x == i + 1) return i;
    if (x == -i) return -(i + 1);
    return 0;
  }
  if (x == -n) return n - 1;
  if (x == -(n - 1)) return n;
  return 0;
}

inline int phi_letter_D(int x, int i, int n) { return f_letter_D(x, i, n) ? 1 : 0; }
inline int eps_letter_D(int x, int i, int n) { return e_letter_D(x, i, n) ? 1 : 0; }

/// C2 alphabet: 1 < 2 < 2-bar < 1-bar (total order), same signed encoding.
inline int c2_rank(int x) {
  switch (x) {
    case 1: return 1;
    case 2: return 2;
    case -2: return 3;
    case -1: return 4;
  }
  throw std::invalid_argument("bad C2 letter");
}

inline bool c2_leq(int a, int b) { return c2_rank(a) <= c2_rank(b); }
inline bool c2_lt(int a, int b) { return c2_rank(a) < c2_rank(b); }

/// f_1: 1 -> 2, 2-bar -> 1-bar; f_2: 2 -> 2-bar.  Returns 0 when undefined.
inline int f_letter_C2(int x, int i) {
  if (i == 1) {
    if (x == 1) return 2;
    if (x == -2) return -1;
    return 0;
  }
  if (x == 2) return -2;
  return 0;
}

inline int e_letter_C2(int x, int i) {
  if (i == 1) {
    if (x == 2) return 1;
    if (x == -1) return -2;
    return 0;
  }
  if (x == -2) return 2;
  return 0;
}

}  // namespace crystal
