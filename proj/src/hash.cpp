#include "braidpke/hash.hpp"

#include <openssl/evp.h>

#include <memory>

#include "braidpke/canonical.hpp"
#include "braidpke/errors.hpp"
#include "braidpke/serialize.hpp"

namespace braidpke {

std::vector<std::uint8_t> shake256(const std::uint8_t* data, std::size_t len,
                                   std::size_t out_bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(
      EVP_MD_CTX_new(), EVP_MD_CTX_free);
  std::vector<std::uint8_t> out(out_bytes);
  if (!ctx || !EVP_DigestInit_ex(ctx.get(), EVP_shake256(), nullptr) ||
      !EVP_DigestUpdate(ctx.get(), data, len) ||
      !EVP_DigestFinalXOF(ctx.get(), out.data(), out.size())) {
    throw Error("SHAKE-256 failed");
  }
  return out;
}

BitString hash_braid(const BraidWord& z, std::size_t out_bits) {
  if (out_bits == 0) throw DomainError("hash output must be at least 1 bit");
  const std::string text = canonical_to_text(left_canonical_form(z));
  auto digest = shake256(reinterpret_cast<const std::uint8_t*>(text.data()),
                         text.size(), (out_bits + 7) / 8);
  return BitString::truncate_of(std::move(digest), out_bits);
}

}  // namespace braidpke
