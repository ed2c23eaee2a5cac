#include "braidpke/serialize.hpp"

#include <charconv>
#include <cstring>

#include "braidpke/errors.hpp"

namespace braidpke {

namespace {

int parse_int(std::string_view s, int min, int max, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(std::string("malformed ") + what + ": '" +
                     std::string(s) + "'");
  }
  if (value < min || value > max) {
    throw ParseError(std::string(what) + " out of range: " +
                     std::to_string(value));
  }
  return value;
}

}  // namespace

std::string word_to_text(const BraidWord& w) {
  std::string out = "B" + std::to_string(w.n) + ":";
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w.letters[i]);
  }
  return out;
}

BraidWord word_from_text(const std::string& text) {
  if (text.empty() || text[0] != 'B') {
    throw ParseError("word text must start with 'B<n>:'");
  }
  std::size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw ParseError("word text missing ':'");
  }
  int n = parse_int(std::string_view(text).substr(1, colon - 1), 1,
                    kMaxStrands, "strand count");
  BraidWord out(n);
  std::size_t pos = colon + 1;
  if (pos == text.size()) return out;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view item =
        std::string_view(text).substr(pos, comma == std::string::npos
                                               ? std::string::npos
                                               : comma - pos);
    int letter = parse_int(item, -kMaxStrands, kMaxStrands, "letter");
    if (letter == 0 || std::abs(letter) > n - 1) {
      throw ParseError("letter out of range for B_" + std::to_string(n) +
                       ": " + std::to_string(letter));
    }
    out.letters.push_back(static_cast<std::int16_t>(letter));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<std::uint8_t> word_to_bytes(const BraidWord& w) {
  std::vector<std::uint8_t> out;
  out.reserve(6 + 2 * w.letters.size());
  out.push_back(static_cast<std::uint8_t>(w.n >> 8));
  out.push_back(static_cast<std::uint8_t>(w.n & 0xff));
  std::uint32_t count = static_cast<std::uint32_t>(w.letters.size());
  for (int shift = 24; shift >= 0; shift -= 8) {
    out.push_back(static_cast<std::uint8_t>((count >> shift) & 0xff));
  }
  for (std::int16_t e : w.letters) {
    std::uint16_t u = static_cast<std::uint16_t>(e);
    out.push_back(static_cast<std::uint8_t>(u >> 8));
    out.push_back(static_cast<std::uint8_t>(u & 0xff));
  }
  return out;
}

BraidWord word_from_bytes(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 6) throw ParseError("word binary too short");
  int n = (bytes[0] << 8) | bytes[1];
  if (n < 1 || n > kMaxStrands) {
    throw ParseError("strand count out of range: " + std::to_string(n));
  }
  std::uint32_t count = (std::uint32_t(bytes[2]) << 24) |
                        (std::uint32_t(bytes[3]) << 16) |
                        (std::uint32_t(bytes[4]) << 8) | bytes[5];
  if (bytes.size() != 6 + 2 * static_cast<std::size_t>(count)) {
    throw ParseError("word binary length does not match letter count");
  }
  BraidWord out(n);
  out.letters.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    std::uint16_t u = static_cast<std::uint16_t>(
        (bytes[6 + 2 * i] << 8) | bytes[7 + 2 * i]);
    std::int16_t e = static_cast<std::int16_t>(u);
    if (e == 0 || std::abs(e) > n - 1) {
      throw ParseError("letter out of range in binary word");
    }
    out.letters.push_back(e);
  }
  return out;
}

std::string canonical_to_text(const CanonicalForm& cf) {
  std::string out =
      "CF|n=" + std::to_string(cf.n) + "|k=" + std::to_string(cf.k) + "|";
  for (std::size_t j = 0; j < cf.factors.size(); ++j) {
    if (j) out += '|';
    const auto& table = cf.factors[j].table;
    for (std::size_t v = 0; v < table.size(); ++v) {
      if (v) out += ' ';
      out += std::to_string(int(table[v]));
    }
  }
  return out;
}

}  // namespace braidpke
