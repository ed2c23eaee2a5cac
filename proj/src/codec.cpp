#include "braidpke/codec.hpp"

#include <algorithm>
#include <map>

#include "braidpke/errors.hpp"

namespace braidpke {

namespace {

int digits_needed(int base) {
  int d = 0;
  long long reach = 1;
  while (reach < 256) {
    reach *= base;
    ++d;
  }
  return d;
}

}  // namespace

BraidWord bytes_to_braid(const std::vector<std::uint8_t>& data,
                         const SplitParams& p) {
  const int n = p.strands();
  if (n < 3) throw DomainError("byte codec needs at least 3 strands");
  const int base = n - 1;
  const int per_byte = digits_needed(base);
  BraidWord out(n);
  out.letters.reserve(data.size() * per_byte);
  for (std::uint8_t byte : data) {
    int v = byte;
    // most significant digit first
    for (int d = per_byte - 1; d >= 0; --d) {
      int digit = v;
      for (int t = 0; t < d; ++t) digit /= base;
      digit %= base;
      out.letters.push_back(static_cast<std::int16_t>(digit + 1));
    }
  }
  return out;
}

std::vector<std::uint8_t> braid_to_bytes(const BraidWord& w,
                                         const SplitParams& p) {
  const int n = p.strands();
  if (n < 3) throw DomainError("byte codec needs at least 3 strands");
  if (w.n != n) throw DomainError("strand count does not match the codec");
  const int base = n - 1;
  const int per_byte = digits_needed(base);
  if (w.letters.size() % per_byte != 0) {
    throw DomainError("word length is not a whole number of byte blocks");
  }
  std::vector<std::uint8_t> out;
  out.reserve(w.letters.size() / per_byte);
  for (std::size_t at = 0; at < w.letters.size(); at += per_byte) {
    long long v = 0;
    for (int d = 0; d < per_byte; ++d) {
      std::int16_t letter = w.letters[at + d];
      if (letter <= 0) {
        throw DomainError("negative letter outside the codec image");
      }
      if (letter > base) {
        throw DomainError("letter outside the codec digit range");
      }
      v = v * base + (letter - 1);
    }
    if (v > 255) throw DomainError("digit block exceeds byte range");
    out.push_back(static_cast<std::uint8_t>(v));
  }
  return out;
}

CanonicalByteCodec::CanonicalByteCodec(const SplitParams& p)
    : n_(p.strands()) {
  if (n_ < 6) {
    throw DomainError("canonical byte codec needs at least 6 strands");
  }
  // Family: one-line tables [sorted S | sorted complement] where S has
  // j = n/2 members, contains j+1 and avoids j. Every member starts
  // exactly with sigma_j and finishes with sigma_j, so any factor may
  // follow any other in a left-weighted sequence.
  const int j = n_ / 2;
  std::vector<int> pool;
  for (int v = 1; v <= n_; ++v) {
    if (v != j && v != j + 1) pool.push_back(v);
  }
  const int pick = j - 1;
  std::vector<PermutationBraid> family;
  std::vector<int> select(pick);
  // enumerate pick-subsets of pool in lexicographic order
  for (int t = 0; t < pick; ++t) select[t] = t;
  for (;;) {
    std::vector<std::uint8_t> s = {static_cast<std::uint8_t>(j + 1)};
    for (int t : select) s.push_back(static_cast<std::uint8_t>(pool[t]));
    std::sort(s.begin(), s.end());
    std::vector<char> members(n_ + 1, 0);
    for (auto v : s) members[v] = 1;
    PermutationBraid pb;
    pb.n = n_;
    pb.table = s;
    for (int v = 1; v <= n_; ++v) {
      if (!members[v]) pb.table.push_back(static_cast<std::uint8_t>(v));
    }
    family.push_back(std::move(pb));
    int pos = pick - 1;
    while (pos >= 0 &&
           select[pos] == static_cast<int>(pool.size()) - (pick - pos)) {
      --pos;
    }
    if (pos < 0) break;
    ++select[pos];
    for (int t = pos + 1; t < pick; ++t) select[t] = select[t - 1] + 1;
  }

  const int base = n_ - 1;
  if (static_cast<int>(family.size()) < base) {
    throw DomainError("factor family too small for base-(n-1) digits");
  }
  // Shortest factors first; ties broken by table order for determinism.
  std::stable_sort(family.begin(), family.end(),
                   [](const PermutationBraid& a, const PermutationBraid& b) {
                     int ca = a.crossings(), cb = b.crossings();
                     if (ca != cb) return ca < cb;
                     return a.table < b.table;
                   });
  digits_.assign(family.begin(), family.begin() + base);
  for (const auto& f : digits_) digit_words_.push_back(f.word());
  digits_per_byte_ = digits_needed(base);
}

BraidWord CanonicalByteCodec::encode(
    const std::vector<std::uint8_t>& data) const {
  const int base = static_cast<int>(digits_.size());
  BraidWord out(n_);
  for (std::uint8_t byte : data) {
    for (int d = digits_per_byte_ - 1; d >= 0; --d) {
      int digit = byte;
      for (int t = 0; t < d; ++t) digit /= base;
      digit %= base;
      const auto& fw = digit_words_[digit];
      out.letters.insert(out.letters.end(), fw.letters.begin(),
                         fw.letters.end());
    }
  }
  return out;
}

std::vector<std::uint8_t> CanonicalByteCodec::decode(const BraidWord& w) const {
  if (w.n != n_) throw DomainError("strand count does not match the codec");
  const CanonicalForm cf = left_canonical_form(w);
  if (cf.k != 0) {
    throw DomainError("element outside the codec image (nonzero infimum)");
  }
  if (cf.factors.size() % digits_per_byte_ != 0) {
    throw DomainError("factor count is not a whole number of byte blocks");
  }
  std::map<std::vector<std::uint8_t>, int> lookup;
  for (std::size_t d = 0; d < digits_.size(); ++d) {
    lookup[digits_[d].table] = static_cast<int>(d);
  }
  const int base = static_cast<int>(digits_.size());
  std::vector<std::uint8_t> out;
  out.reserve(cf.factors.size() / digits_per_byte_);
  for (std::size_t at = 0; at < cf.factors.size(); at += digits_per_byte_) {
    long long v = 0;
    for (int d = 0; d < digits_per_byte_; ++d) {
      auto it = lookup.find(cf.factors[at + d].table);
      if (it == lookup.end()) {
        throw DomainError("factor outside the codec family");
      }
      v = v * base + it->second;
    }
    if (v > 255) throw DomainError("digit block exceeds byte range");
    out.push_back(static_cast<std::uint8_t>(v));
  }
  return out;
}

}  // namespace braidpke
