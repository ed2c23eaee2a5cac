#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "braidpke/aead.hpp"
#include "braidpke/bits.hpp"
#include "braidpke/braid.hpp"
#include "braidpke/rng.hpp"
#include "braidpke/subgroup.hpp"

namespace braidpke {

inline constexpr int kDefaultWordLength = 32;
inline constexpr std::size_t kDefaultHashBits = 256;

/// (g, X = x g x^{-1}) with x from the left subgroup.
struct PublicKey {
  SplitParams params;
  BraidWord g;
  BraidWord X;
};

/// The conjugator x (left-subgroup letters only) plus the shared base g.
struct SecretKey {
  SplitParams params;
  BraidWord x;
  BraidWord g;
};

struct KeyPair {
  PublicKey pub;
  SecretKey sec;
};

/// Samples g from the full group and x from the left subgroup, both of the
/// given length, and certifies X = x g x^{-1}.
KeyPair keygen(const SplitParams& p, int secret_length, Rng& rng);

/// Deterministic key construction from explicit parts (test hook); x must
/// be a left-subgroup word.
KeyPair keypair_from_parts(const SplitParams& p, const BraidWord& g,
                           const BraidWord& x);

// --- Algorithm 1: ElGamal-analog with braid messages -----------------------

struct CiphertextA1 {
  BraidWord Y;
  BraidWord c;

  friend bool operator==(const CiphertextA1&, const CiphertextA1&) = default;
};

CiphertextA1 enc_a1(const PublicKey& pk, const BraidWord& m, Rng& rng,
                    int ephemeral_length = kDefaultWordLength);
CiphertextA1 enc_a1_with_ephemeral(const PublicKey& pk, const BraidWord& m,
                                   const BraidWord& y);

/// Recovers the plaintext as its canonical-form word; compare with equals().
BraidWord dec_a1(const SecretKey& sk, const CiphertextA1& ct);

// --- Algorithm 2: hashed one-time pad ---------------------------------------

struct CiphertextA2 {
  BraidWord Y;
  BitString c;

  friend bool operator==(const CiphertextA2&, const CiphertextA2&) = default;
};

CiphertextA2 enc_a2(const PublicKey& pk, const BitString& m, Rng& rng,
                    int ephemeral_length = kDefaultWordLength);
CiphertextA2 enc_a2_with_ephemeral(const PublicKey& pk, const BitString& m,
                                   const BraidWord& y);
BitString dec_a2(const SecretKey& sk, const CiphertextA2& ct);

// --- Algorithm 3: hybrid KEM-DEM --------------------------------------------

struct CiphertextA3 {
  BraidWord Y;
  AeadNonce nonce{};
  std::vector<std::uint8_t> blob;

  friend bool operator==(const CiphertextA3&, const CiphertextA3&) = default;
};

CiphertextA3 enc_a3(const PublicKey& pk, const std::vector<std::uint8_t>& m,
                    Rng& rng, int ephemeral_length = kDefaultWordLength);
CiphertextA3 enc_a3_with_ephemeral(const PublicKey& pk,
                                   const std::vector<std::uint8_t>& m,
                                   const BraidWord& y, const AeadNonce& nonce);

/// Throws AuthenticationError on any tampering; never returns garbage.
std::vector<std::uint8_t> dec_a3(const SecretKey& sk, const CiphertextA3& ct);

/// The shared secret H input: y X y^{-1} on the encrypt side,
/// x Y x^{-1} on the decrypt side.
AeadKey session_key(const BraidWord& shared);

}  // namespace braidpke
