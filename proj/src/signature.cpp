#include "crystal/signature.hpp"

namespace crystal {

Signature reduce_signature(const Signature& sig) {
  Signature out = sig;
  if (out.origins.empty() && !out.symbols.empty())
    out.origins.assign(out.symbols.size(), 0);
  std::vector<size_t> plus_stack;
  for (size_t k = 0; k < out.symbols.size(); ++k) {
    char c = out.symbols[k];
    if (c == '+') {
      plus_stack.push_back(k);
    } else if (c == '-') {
      if (!plus_stack.empty()) {
        out.symbols[plus_stack.back()] = '*';
        out.symbols[k] = '*';
        plus_stack.pop_back();
      }
    }
  }
  return out;
}

std::string compact_signature(const Signature& reduced) {
  std::string s;
  for (char c : reduced.symbols)
    if (c != '*') s.push_back(c);
  return s;
}

Signature make_signature(const std::vector<int>& word,
                         const std::function<int(int)>& phi_letter,
                         const std::function<int(int)>& eps_letter) {
  Signature sig;
  for (size_t k = 0; k < word.size(); ++k) {
    char c = '*';
    if (phi_letter(word[k]) == 1)
      c = '-';
    else if (eps_letter(word[k]) == 1)
      c = '+';
    sig.symbols.push_back(c);
    sig.origins.push_back(static_cast<int>(k));
  }
  return sig;
}

int count_plus(const Signature& reduced) {
  int c = 0;
  for (char s : reduced.symbols) c += (s == '+');
  return c;
}

int count_minus(const Signature& reduced) {
  int c = 0;
  for (char s : reduced.symbols) c += (s == '-');
  return c;
}

int rightmost_minus_origin(const Signature& reduced) {
  for (size_t k = reduced.symbols.size(); k-- > 0;)
    if (reduced.symbols[k] == '-') return reduced.origins[k];
  return -1;
}

int leftmost_plus_origin(const Signature& reduced) {
  for (size_t k = 0; k < reduced.symbols.size(); ++k)
    if (reduced.symbols[k] == '+') return reduced.origins[k];
  return -1;
}

bool act_word(std::vector<int>& word, bool direction_f,
              const std::function<int(int)>& phi_letter,
              const std::function<int(int)>& eps_letter,
              const std::function<int(int)>& letter_step) {
  Signature sig = reduce_signature(make_signature(word, phi_letter, eps_letter));
  int pos = direction_f ? rightmost_minus_origin(sig) : leftmost_plus_origin(sig);
  if (pos < 0) return false;
  int img = letter_step(word[pos]);
  if (img == 0) return false;  // should not happen for a well-formed signature
  word[pos] = img;
  return true;
}

}  // namespace crystal
