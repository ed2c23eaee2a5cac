#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace braidpke {

inline constexpr std::size_t kAeadKeyBytes = 32;
inline constexpr std::size_t kAeadNonceBytes = 12;
inline constexpr std::size_t kAeadTagBytes = 16;

using AeadKey = std::array<std::uint8_t, kAeadKeyBytes>;
using AeadNonce = std::array<std::uint8_t, kAeadNonceBytes>;

/// ChaCha20-Poly1305 seal: returns ciphertext with the 16-byte tag
/// appended.
std::vector<std::uint8_t> aead_seal(const AeadKey& key, const AeadNonce& nonce,
                                    const std::uint8_t* msg, std::size_t len);

/// Open; throws AuthenticationError if the tag does not verify. Never
/// returns unauthenticated plaintext.
std::vector<std::uint8_t> aead_open(const AeadKey& key, const AeadNonce& nonce,
                                    const std::uint8_t* blob, std::size_t len);

}  // namespace braidpke
