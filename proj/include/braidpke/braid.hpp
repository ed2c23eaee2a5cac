#pragma once

#include <cstdint>
#include <vector>

#include "braidpke/rng.hpp"

namespace braidpke {

/// Largest strand count accepted by the word formats.
inline constexpr int kMaxStrands = 64;

/// A free word in the signed Artin generators of B_n. Letter +i stands for
/// sigma_i, letter -i for its inverse; valid indices are 1..n-1. The empty
/// word is the identity. Words are not reduced automatically and two words
/// may represent the same group element; use equals() for element equality.
struct BraidWord {
  int n = 1;
  std::vector<std::int16_t> letters;

  BraidWord() = default;
  explicit BraidWord(int strands) : n(strands) { validate_index(); }
  BraidWord(int strands, std::vector<std::int16_t> ls);

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  /// Letter-sequence identity, not group equality.
  friend bool operator==(const BraidWord& a, const BraidWord& b) = default;

 private:
  void validate_index() const;
};

/// Concatenation of a and b followed by free reduction.
BraidWord compose(const BraidWord& a, const BraidWord& b);

/// Letters reversed with signs flipped; compose(a, inverse(a)) reduces to
/// the empty word.
BraidWord inverse(const BraidWord& a);

/// Deletes adjacent (e, -e) pairs until none remain.
BraidWord free_reduce(const BraidWord& a);

/// The positive half twist Delta_n built by the recursion
/// Delta_n = Delta_{n-1} sigma_{n-1} ... sigma_1, Delta_1 empty.
BraidWord fundamental_braid(int n);

/// Word of exactly `length` letters drawn uniformly from {+-1..+-(n-1)}.
/// No free reduction is applied, so the represented element may be shorter.
BraidWord random_word(int n, std::size_t length, Rng& rng);

/// Underlying permutation of the word (one-line, table[i] is the final
/// position of the strand starting at position i+1, values 1..n).
std::vector<std::uint8_t> permutation_of_word(const BraidWord& w);

/// Throws DomainError unless the two words live in the same group.
void require_same_group(const BraidWord& a, const BraidWord& b);

}  // namespace braidpke
