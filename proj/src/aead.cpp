#include "braidpke/aead.hpp"

#include <openssl/evp.h>

#include <memory>

#include "braidpke/errors.hpp"

namespace braidpke {

namespace {
using CtxPtr = std::unique_ptr<EVP_CIPHER_CTX, decltype(&EVP_CIPHER_CTX_free)>;
}

std::vector<std::uint8_t> aead_seal(const AeadKey& key, const AeadNonce& nonce,
                                    const std::uint8_t* msg, std::size_t len) {
  CtxPtr ctx(EVP_CIPHER_CTX_new(), EVP_CIPHER_CTX_free);
  if (!ctx || !EVP_EncryptInit_ex(ctx.get(), EVP_chacha20_poly1305(), nullptr,
                                  key.data(), nonce.data())) {
    throw Error("AEAD init failed");
  }
  std::vector<std::uint8_t> out(len + kAeadTagBytes);
  int produced = 0;
  if (len > 0 &&
      !EVP_EncryptUpdate(ctx.get(), out.data(), &produced, msg,
                         static_cast<int>(len))) {
    throw Error("AEAD encrypt failed");
  }
  int tail = 0;
  if (!EVP_EncryptFinal_ex(ctx.get(), out.data() + produced, &tail) ||
      !EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_AEAD_GET_TAG, kAeadTagBytes,
                           out.data() + len)) {
    throw Error("AEAD tag failed");
  }
  return out;
}

std::vector<std::uint8_t> aead_open(const AeadKey& key, const AeadNonce& nonce,
                                    const std::uint8_t* blob, std::size_t len) {
  if (len < kAeadTagBytes) {
    throw AuthenticationError("ciphertext shorter than the tag");
  }
  const std::size_t body = len - kAeadTagBytes;
  CtxPtr ctx(EVP_CIPHER_CTX_new(), EVP_CIPHER_CTX_free);
  if (!ctx || !EVP_DecryptInit_ex(ctx.get(), EVP_chacha20_poly1305(), nullptr,
                                  key.data(), nonce.data())) {
    throw Error("AEAD init failed");
  }
  std::vector<std::uint8_t> out(body);
  int produced = 0;
  if (body > 0 &&
      !EVP_DecryptUpdate(ctx.get(), out.data(), &produced, blob,
                         static_cast<int>(body))) {
    throw AuthenticationError("decryption failure");
  }
  // Tag check happens in final; reject loudly instead of returning garbage.
  std::vector<std::uint8_t> tag(blob + body, blob + len);
  if (!EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_AEAD_SET_TAG, kAeadTagBytes,
                           tag.data())) {
    throw Error("AEAD tag set failed");
  }
  int tail = 0;
  if (EVP_DecryptFinal_ex(ctx.get(), out.data() + produced, &tail) <= 0) {
    throw AuthenticationError("decryption failure: authentication tag mismatch");
  }
  return out;
}

}  // namespace braidpke
