#pragma once

#include <cstdint>
#include <vector>

#include "braidpke/braid.hpp"
#include "braidpke/canonical.hpp"
#include "braidpke/subgroup.hpp"

namespace braidpke {

/// Word-level byte bridge: every byte becomes a fixed-length block of
/// positive generators, one generator per base-(n-1) digit. The map is
/// injective on letter sequences and braid_to_bytes inverts it exactly on
/// codec-produced words; words outside the image are rejected. Note that
/// distinct byte strings can still represent the same group element (far
/// generators commute), so this codec cannot survive re-normalization; see
/// CanonicalByteCodec for the element-level encoding.
BraidWord bytes_to_braid(const std::vector<std::uint8_t>& data,
                         const SplitParams& p);
std::vector<std::uint8_t> braid_to_bytes(const BraidWord& w,
                                         const SplitParams& p);

/// Element-level byte codec built on canonical-form factors. Each byte
/// becomes a fixed-length block of base-(n-1) digits and each digit one
/// factor from a fixed family of permutation braids chosen so that any
/// factor may follow any other in a left-weighted sequence. The encoded
/// word is therefore its own left canonical form, the byte string can be
/// read back from the canonical form of any word representing the element,
/// and uniqueness of that form makes the map injective on group elements. Requires n >= 6 so the family has at least n-1 members.
class CanonicalByteCodec {
 public:
  explicit CanonicalByteCodec(const SplitParams& p);

  BraidWord encode(const std::vector<std::uint8_t>& data) const;

  /// Decodes from the element represented by w (input words need not be in
  /// any particular spelling). Throws DomainError when the element is not
  /// in the codec image.
  std::vector<std::uint8_t> decode(const BraidWord& w) const;

  int base() const { return static_cast<int>(digits_.size()); }
  int digits_per_byte() const { return digits_per_byte_; }

 private:
  int n_;
  int digits_per_byte_;
  std::vector<PermutationBraid> digits_;       // digit -> factor
  std::vector<BraidWord> digit_words_;         // digit -> factor word
};

}  // namespace braidpke
