#include "braidpke/bits.hpp"

#include "braidpke/errors.hpp"

namespace braidpke {

namespace {

void mask_tail(std::vector<std::uint8_t>& bytes, std::size_t nbits) {
  if (nbits % 8 != 0 && !bytes.empty()) {
    bytes.back() &= static_cast<std::uint8_t>(0xff << (8 - nbits % 8));
  }
}

int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  throw ParseError(std::string("invalid hex character '") + c + "'");
}

}  // namespace

BitString BitString::zeros(std::size_t nbits) {
  BitString out;
  out.nbits = nbits;
  out.bytes.assign((nbits + 7) / 8, 0);
  return out;
}

BitString BitString::ones(std::size_t nbits) {
  BitString out;
  out.nbits = nbits;
  out.bytes.assign((nbits + 7) / 8, 0xff);
  mask_tail(out.bytes, nbits);
  return out;
}

BitString BitString::random(std::size_t nbits, Rng& rng) {
  BitString out;
  out.nbits = nbits;
  out.bytes = rng.bytes((nbits + 7) / 8);
  mask_tail(out.bytes, nbits);
  return out;
}

BitString BitString::truncate_of(std::vector<std::uint8_t> data,
                                 std::size_t nbits) {
  if (data.size() < (nbits + 7) / 8) {
    throw DomainError("not enough bytes for requested bit length");
  }
  BitString out;
  out.nbits = nbits;
  data.resize((nbits + 7) / 8);
  out.bytes = std::move(data);
  mask_tail(out.bytes, nbits);
  return out;
}

bool BitString::bit(std::size_t i) const {
  return (bytes[i / 8] >> (7 - i % 8)) & 1;
}

void BitString::flip_bit(std::size_t i) {
  bytes[i / 8] ^= static_cast<std::uint8_t>(1u << (7 - i % 8));
}

BitString BitString::xored(const BitString& other) const {
  if (nbits != other.nbits) {
    throw DomainError("bit-string length mismatch in xor");
  }
  BitString out = *this;
  for (std::size_t i = 0; i < bytes.size(); ++i) out.bytes[i] ^= other.bytes[i];
  return out;
}

std::string BitString::to_hex() const { return bytes_to_hex(bytes); }

BitString BitString::from_hex(const std::string& hex, std::size_t nbits) {
  return truncate_of(bytes_from_hex(hex), nbits);
}

std::string bytes_to_hex(const std::vector<std::uint8_t>& data) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(2 * data.size());
  for (std::uint8_t b : data) {
    out += digits[b >> 4];
    out += digits[b & 0xf];
  }
  return out;
}

std::vector<std::uint8_t> bytes_from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw ParseError("odd-length hex string");
  std::vector<std::uint8_t> out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>((hex_nibble(hex[2 * i]) << 4) |
                                       hex_nibble(hex[2 * i + 1]));
  }
  return out;
}

}  // namespace braidpke
