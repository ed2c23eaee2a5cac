#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "braidpke/schemes.hpp"

namespace braidpke {

enum class Algorithm { kA1, kA2, kA3 };

std::string algorithm_name(Algorithm alg);
Algorithm algorithm_from_name(const std::string& name);

/// Line-oriented key files:
///   braidpke v1
///   alg=<a1|a2|a3>
///   l=<l>
///   r=<r>
///   g=<word text>
///   X=<word text>
/// The secret file carries the same lines plus x=<word text>.
void write_public_key(std::ostream& out, Algorithm alg, const PublicKey& pk);
void write_secret_key(std::ostream& out, Algorithm alg, const KeyPair& kp);

struct LoadedPublicKey {
  Algorithm alg;
  PublicKey pk;
};

struct LoadedSecretKey {
  Algorithm alg;
  KeyPair kp;
};

LoadedPublicKey read_public_key(std::istream& in);
LoadedSecretKey read_secret_key(std::istream& in);

/// Ciphertext files:
///   ct v1
///   alg=<a1|a2|a3>
/// then per block "Y=<word>" followed by "c=<word text>" (a1) or
/// "c=<hex bits>" (a2), or a single "Y=", "nonce=<hex>", "blob=<hex>"
/// group for a3. The block form lets the CLI split long inputs into
/// l(k)-bit pieces under a2.
struct CiphertextFile {
  Algorithm alg = Algorithm::kA3;
  std::vector<CiphertextA1> a1_blocks;
  std::vector<CiphertextA2> a2_blocks;
  std::optional<CiphertextA3> a3;
};

void write_ciphertext(std::ostream& out, const CiphertextFile& file);
CiphertextFile read_ciphertext(std::istream& in, std::size_t a2_bits);

}  // namespace braidpke
