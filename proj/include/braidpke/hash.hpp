#pragma once

#include <cstdint>
#include <vector>

#include "braidpke/bits.hpp"
#include "braidpke/braid.hpp"

namespace braidpke {

/// SHAKE-256 extendable-output hash of the given bytes.
std::vector<std::uint8_t> shake256(const std::uint8_t* data, std::size_t len,
                                   std::size_t out_bytes);

/// Hash of a braid group element: SHAKE-256 over the canonical-form
/// serialization, truncated to out_bits. Words representing the same
/// element always hash identically.
BitString hash_braid(const BraidWord& z, std::size_t out_bits);

}  // namespace braidpke
