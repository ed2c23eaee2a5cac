#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidpke/braid.hpp"
#include "braidpke/canonical.hpp"

namespace braidpke {

/// Text form "B<n>:" followed by comma-separated signed letters, e.g.
/// "B4:1,-3,2"; the empty word is "B4:".
std::string word_to_text(const BraidWord& w);
BraidWord word_from_text(const std::string& text);

/// Binary form: n as 2-byte big-endian unsigned, letter count as 4-byte
/// big-endian unsigned, then each letter as 2-byte big-endian signed.
std::vector<std::uint8_t> word_to_bytes(const BraidWord& w);
BraidWord word_from_bytes(const std::vector<std::uint8_t>& bytes);

/// Canonical-form text "CF|n=<n>|k=<k>|" then the factors as one-line
/// permutations ("p1 p2 ... pn") separated by "|". Injective on canonical
/// forms, so equal group elements always serialize identically.
std::string canonical_to_text(const CanonicalForm& cf);

}  // namespace braidpke
