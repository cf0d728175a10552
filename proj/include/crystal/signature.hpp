#pragma once

#include <functional>
#include <string>
#include <vector>

namespace crystal {

/// A signature is a word over {+, -, *} together with, for each symbol, the
/// index of the originating letter in the underlying word.
struct Signature {
  std::string symbols;
  std::vector<int> origins;
};

/// Reduce a signature to its fixpoint under the rule
///   "+ *^k -"  ->  "*^{k+2}".
/// Equivalently: scan left to right keeping a stack of uncancelled '+'
/// positions; every '-' cancels the nearest uncancelled '+' to its left, and
/// both become '*'.  Origins are preserved.  Idempotent.
Signature reduce_signature(const Signature& sig);

/// Reduced signature with the '*' symbols dropped (the star-free display
/// used for type D examples); matches the pattern -^a +^b.
std::string compact_signature(const Signature& reduced);

/// Build the signature of a word: each letter contributes '-' if
/// phi_i(letter) = 1, '+' if eps_i(letter) = 1, and '*' otherwise.
Signature make_signature(const std::vector<int>& word,
                         const std::function<int(int)>& phi_letter,
                         const std::function<int(int)>& eps_letter);

/// Number of uncancelled '+' (= eps_i) and '-' (= phi_i) in a reduced
/// signature.
int count_plus(const Signature& reduced);
int count_minus(const Signature& reduced);

/// Index (into the underlying word) of the letter carrying the rightmost
/// uncancelled '-' (where f_i acts), or -1 if none.
int rightmost_minus_origin(const Signature& reduced);

/// Index of the letter carrying the leftmost uncancelled '+' (where e_i
/// acts), or -1 if none.
int leftmost_plus_origin(const Signature& reduced);

/// Apply f_i (direction_f = true) or e_i to a word via the signature rule:
/// the acted letter is replaced by its image under letter_step; returns an
/// empty optional-like flag by returning false when the operator kills the
/// word.  On success the word is modified in place.
bool act_word(std::vector<int>& word, bool direction_f,
              const std::function<int(int)>& phi_letter,
              const std::function<int(int)>& eps_letter,
              const std::function<int(int)>& letter_step);

}  // namespace crystal
