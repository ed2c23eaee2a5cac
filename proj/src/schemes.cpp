#include "braidpke/schemes.hpp"

#include <algorithm>

#include "braidpke/canonical.hpp"
#include "braidpke/errors.hpp"
#include "braidpke/hash.hpp"

namespace braidpke {

KeyPair keygen(const SplitParams& p, int secret_length, Rng& rng) {
  if (secret_length < 1) throw DomainError("secret length must be >= 1");
  BraidWord g = random_word(p.strands(), secret_length, rng);
  BraidWord x = sample_left(p, secret_length, rng);
  return keypair_from_parts(p, g, x);
}

KeyPair keypair_from_parts(const SplitParams& p, const BraidWord& g,
                           const BraidWord& x) {
  if (g.n != p.strands()) throw DomainError("g strand count mismatch");
  if (!is_left_word(p, x)) {
    throw DomainError("secret conjugator must use left-subgroup letters");
  }
  KeyPair kp;
  kp.pub = PublicKey{p, g, conjugate(x, g)};
  kp.sec = SecretKey{p, x, g};
  return kp;
}

CiphertextA1 enc_a1_with_ephemeral(const PublicKey& pk, const BraidWord& m,
                                   const BraidWord& y) {
  if (m.n != pk.g.n) throw DomainError("message strand count mismatch");
  if (!is_right_word(pk.params, y)) {
    throw DomainError("ephemeral must use right-subgroup letters");
  }
  CiphertextA1 ct;
  ct.Y = conjugate(y, pk.g);
  ct.c = compose(conjugate(y, pk.X), m);
  return ct;
}

CiphertextA1 enc_a1(const PublicKey& pk, const BraidWord& m, Rng& rng,
                    int ephemeral_length) {
  return enc_a1_with_ephemeral(pk, m,
                               sample_right(pk.params, ephemeral_length, rng));
}

BraidWord dec_a1(const SecretKey& sk, const CiphertextA1& ct) {
  BraidWord shared = conjugate(sk.x, ct.Y);
  return left_canonical_form(compose(inverse(shared), ct.c)).word();
}

CiphertextA2 enc_a2_with_ephemeral(const PublicKey& pk, const BitString& m,
                                   const BraidWord& y) {
  if (!is_right_word(pk.params, y)) {
    throw DomainError("ephemeral must use right-subgroup letters");
  }
  CiphertextA2 ct;
  ct.Y = conjugate(y, pk.g);
  ct.c = hash_braid(conjugate(y, pk.X), m.nbits).xored(m);
  return ct;
}

CiphertextA2 enc_a2(const PublicKey& pk, const BitString& m, Rng& rng,
                    int ephemeral_length) {
  return enc_a2_with_ephemeral(pk, m,
                               sample_right(pk.params, ephemeral_length, rng));
}

BitString dec_a2(const SecretKey& sk, const CiphertextA2& ct) {
  return hash_braid(conjugate(sk.x, ct.Y), ct.c.nbits).xored(ct.c);
}

AeadKey session_key(const BraidWord& shared) {
  BitString bits = hash_braid(shared, 8 * kAeadKeyBytes);
  AeadKey key{};
  std::copy(bits.bytes.begin(), bits.bytes.end(), key.begin());
  return key;
}

CiphertextA3 enc_a3_with_ephemeral(const PublicKey& pk,
                                   const std::vector<std::uint8_t>& m,
                                   const BraidWord& y, const AeadNonce& nonce) {
  if (!is_right_word(pk.params, y)) {
    throw DomainError("ephemeral must use right-subgroup letters");
  }
  CiphertextA3 ct;
  ct.Y = conjugate(y, pk.g);
  ct.nonce = nonce;
  AeadKey key = session_key(conjugate(y, pk.X));
  ct.blob = aead_seal(key, nonce, m.data(), m.size());
  return ct;
}

CiphertextA3 enc_a3(const PublicKey& pk, const std::vector<std::uint8_t>& m,
                    Rng& rng, int ephemeral_length) {
  AeadNonce nonce{};
  rng.fill_bytes(nonce.data(), nonce.size());
  return enc_a3_with_ephemeral(
      pk, m, sample_right(pk.params, ephemeral_length, rng), nonce);
}

std::vector<std::uint8_t> dec_a3(const SecretKey& sk, const CiphertextA3& ct) {
  AeadKey key = session_key(conjugate(sk.x, ct.Y));
  return aead_open(key, ct.nonce, ct.blob.data(), ct.blob.size());
}

}  // namespace braidpke
