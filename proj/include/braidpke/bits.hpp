#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidpke/rng.hpp"

namespace braidpke {

/// A bit string of explicit length. Bits are packed MSB-first; unused low
/// bits of the final byte are kept zero so equal bit strings compare equal
/// bytewise.
struct BitString {
  std::vector<std::uint8_t> bytes;
  std::size_t nbits = 0;

  static BitString zeros(std::size_t nbits);
  static BitString ones(std::size_t nbits);
  static BitString random(std::size_t nbits, Rng& rng);

  /// Takes the first nbits bits of the given bytes (masking the tail).
  static BitString truncate_of(std::vector<std::uint8_t> data,
                               std::size_t nbits);

  bool bit(std::size_t i) const;
  void flip_bit(std::size_t i);

  BitString xored(const BitString& other) const;

  std::string to_hex() const;
  static BitString from_hex(const std::string& hex, std::size_t nbits);

  friend bool operator==(const BitString&, const BitString&) = default;
};

std::string bytes_to_hex(const std::vector<std::uint8_t>& data);
std::vector<std::uint8_t> bytes_from_hex(const std::string& hex);

}  // namespace braidpke
