#pragma once

#include <cstdint>
#include <vector>

#include "braidpke/braid.hpp"

namespace braidpke {

/// A positive braid in which any two strands cross at most once, stored as
/// the permutation it induces (one-line notation, values 1..n). These are
/// the factors of the left canonical form.
struct PermutationBraid {
  int n = 1;
  std::vector<std::uint8_t> table;

  static PermutationBraid identity(int n);
  static PermutationBraid delta(int n);

  /// Builds the permutation braid represented by a positive word; throws
  /// DomainError if some strand pair would cross twice.
  static PermutationBraid of_positive_word(const BraidWord& w);

  bool is_identity() const;
  bool is_delta() const;

  /// Number of crossings (= inversion count of the permutation).
  int crossings() const;

  /// Indices i such that sigma_i is a left divisor (descents of the
  /// permutation).
  std::vector<int> starting_set() const;

  /// Indices i such that sigma_i is a right divisor (descents of the
  /// inverse permutation).
  std::vector<int> finishing_set() const;

  /// A positive word spelling this braid (deterministic choice).
  BraidWord word() const;

  friend bool operator==(const PermutationBraid&,
                         const PermutationBraid&) = default;
};

/// The left canonical form Delta^k A_1 ... A_s of a braid: k is the infimum
/// exponent, factors are permutation braids none of which is the identity
/// or Delta, and every adjacent pair (A, B) is left-weighted: every
/// generator starting B finishes A. The representation is unique per group
/// element, which makes it the basis for equality and hashing.
struct CanonicalForm {
  int n = 1;
  std::int64_t k = 0;
  std::vector<PermutationBraid> factors;

  bool is_trivial() const { return k == 0 && factors.empty(); }

  /// A word spelling the represented element (freely reduced).
  BraidWord word() const;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Left-greedy Garside normal form of the element represented by w.
CanonicalForm left_canonical_form(const BraidWord& w);

/// Group-element equality via canonical forms.
bool equals(const BraidWord& a, const BraidWord& b);

/// True iff (A, B) satisfies the left-weighted condition
/// starting_set(B) subset-of finishing_set(A).
bool left_weighted(const PermutationBraid& a, const PermutationBraid& b);

}  // namespace braidpke
