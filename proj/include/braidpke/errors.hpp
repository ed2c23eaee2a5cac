#pragma once

#include <stdexcept>
#include <string>

namespace braidpke {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Precondition violations on braid-domain values (strand mismatch,
/// out-of-range generator index, invalid subgroup letter, ...).
struct DomainError : Error {
  using Error::Error;
};

/// Malformed textual or binary input.
struct ParseError : Error {
  using Error::Error;
};

/// AEAD tag verification failed; the ciphertext or key is wrong.
struct AuthenticationError : Error {
  using Error::Error;
};

/// A brute-force enumeration would exceed its candidate budget.
struct BudgetError : Error {
  using Error::Error;
};

}  // namespace braidpke
