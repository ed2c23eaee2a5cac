#include "braidpke/braid.hpp"

#include <numeric>
#include <string>

#include "braidpke/errors.hpp"

namespace braidpke {

namespace {

void check_letter(int n, int letter) {
  int idx = letter < 0 ? -letter : letter;
  if (letter == 0 || idx > n - 1) {
    throw DomainError("letter " + std::to_string(letter) +
                      " out of range for B_" + std::to_string(n));
  }
}

}  // namespace

void BraidWord::validate_index() const {
  if (n < 1 || n > kMaxStrands) {
    throw DomainError("strand count must be in 1.." +
                      std::to_string(kMaxStrands));
  }
}

BraidWord::BraidWord(int strands, std::vector<std::int16_t> ls)
    : n(strands), letters(std::move(ls)) {
  validate_index();
  for (int16_t e : letters) check_letter(n, e);
}

void require_same_group(const BraidWord& a, const BraidWord& b) {
  if (a.n != b.n) {
    throw DomainError("strand count mismatch: B_" + std::to_string(a.n) +
                      " vs B_" + std::to_string(b.n));
  }
}

BraidWord free_reduce(const BraidWord& a) {
  BraidWord out(a.n);
  out.letters.reserve(a.letters.size());
  for (std::int16_t e : a.letters) {
    if (!out.letters.empty() && out.letters.back() == -e) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(e);
    }
  }
  return out;
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  require_same_group(a, b);
  BraidWord out(a.n);
  out.letters.reserve(a.letters.size() + b.letters.size());
  out.letters = a.letters;
  for (std::int16_t e : b.letters) {
    if (!out.letters.empty() && out.letters.back() == -e) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(e);
    }
  }
  return out;
}

BraidWord inverse(const BraidWord& a) {
  BraidWord out(a.n);
  out.letters.reserve(a.letters.size());
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) {
    out.letters.push_back(static_cast<std::int16_t>(-*it));
  }
  return out;
}

BraidWord fundamental_braid(int n) {
  BraidWord out(n);
  for (int m = 2; m <= n; ++m) {
    for (int i = m - 1; i >= 1; --i) {
      out.letters.push_back(static_cast<std::int16_t>(i));
    }
  }
  return out;
}

BraidWord random_word(int n, std::size_t length, Rng& rng) {
  BraidWord out(n);
  if (length == 0) return out;
  if (n < 2) {
    throw DomainError("B_1 has no generators; cannot sample letters");
  }
  out.letters.reserve(length);
  const std::uint64_t alphabet = 2 * static_cast<std::uint64_t>(n - 1);
  for (std::size_t i = 0; i < length; ++i) {
    std::uint64_t v = rng.below(alphabet);
    int idx = static_cast<int>(v / 2) + 1;
    out.letters.push_back(static_cast<std::int16_t>((v & 1) ? -idx : idx));
  }
  return out;
}

std::vector<std::uint8_t> permutation_of_word(const BraidWord& w) {
  std::vector<std::uint8_t> perm(w.n);
  std::iota(perm.begin(), perm.end(), std::uint8_t{1});
  // Appending sigma_i swaps the values i and i+1 in one-line notation.
  std::vector<std::uint8_t> pos(w.n + 1);
  for (int i = 0; i < w.n; ++i) pos[perm[i]] = static_cast<std::uint8_t>(i);
  for (std::int16_t e : w.letters) {
    int i = e < 0 ? -e : e;
    std::uint8_t a = pos[i], b = pos[i + 1];
    perm[a] = static_cast<std::uint8_t>(i + 1);
    perm[b] = static_cast<std::uint8_t>(i);
    pos[i] = b;
    pos[i + 1] = a;
  }
  return perm;
}

}  // namespace braidpke
