#include "braidpke/subgroup.hpp"

#include <algorithm>

#include "braidpke/canonical.hpp"
#include "braidpke/errors.hpp"
#include "braidpke/serialize.hpp"

namespace braidpke {

SplitParams::SplitParams(int left, int right) : l(left), r(right) {
  if (l < 2 || r < 2) {
    throw DomainError("both subgroup blocks need at least 2 strands");
  }
  if (l + r > kMaxStrands) {
    throw DomainError("l + r exceeds the supported strand count");
  }
}

std::vector<int> SplitParams::left_indices() const {
  std::vector<int> out;
  for (int i = 1; i <= l - 1; ++i) out.push_back(i);
  return out;
}

std::vector<int> SplitParams::right_indices() const {
  std::vector<int> out;
  for (int i = l + 1; i <= l + r - 1; ++i) out.push_back(i);
  return out;
}

namespace {

BraidWord sample_over(const std::vector<int>& indices, int n,
                      std::size_t length, Rng& rng) {
  BraidWord out(n);
  out.letters.reserve(length);
  for (std::size_t t = 0; t < length; ++t) {
    std::uint64_t v = rng.below(2 * indices.size());
    int idx = indices[v / 2];
    out.letters.push_back(static_cast<std::int16_t>((v & 1) ? -idx : idx));
  }
  return out;
}

}  // namespace

BraidWord sample_left(const SplitParams& p, std::size_t length, Rng& rng) {
  return sample_over(p.left_indices(), p.strands(), length, rng);
}

BraidWord sample_right(const SplitParams& p, std::size_t length, Rng& rng) {
  return sample_over(p.right_indices(), p.strands(), length, rng);
}

bool is_left_word(const SplitParams& p, const BraidWord& w) {
  if (w.n != p.strands()) return false;
  return std::all_of(w.letters.begin(), w.letters.end(), [&](std::int16_t e) {
    return p.is_left_index(e < 0 ? -e : e);
  });
}

bool is_right_word(const SplitParams& p, const BraidWord& w) {
  if (w.n != p.strands()) return false;
  return std::all_of(w.letters.begin(), w.letters.end(), [&](std::int16_t e) {
    return p.is_right_index(e < 0 ? -e : e);
  });
}

BraidWord conjugate(const BraidWord& a, const BraidWord& g) {
  require_same_group(a, g);
  return compose(a, compose(g, inverse(a)));
}

bool commute_check(const SplitParams& p, const BraidWord& x,
                   const BraidWord& y) {
  if (!is_left_word(p, x)) {
    throw DomainError("x is not a left-subgroup word");
  }
  if (!is_right_word(p, y)) {
    throw DomainError("y is not a right-subgroup word");
  }
  return equals(compose(x, y), compose(y, x));
}

DcsTuple dcs_make(const SplitParams& p, bool real, const BraidWord& g,
                  const BraidWord& x, const BraidWord& y, const BraidWord& z) {
  DcsTuple t;
  t.params = p;
  t.label = real;
  t.g1 = g;
  t.g2 = conjugate(x, g);
  t.g3 = conjugate(y, g);
  t.g4 = real ? conjugate(compose(x, y), g) : conjugate(z, g);
  t.x = x;
  t.y = y;
  if (!real) t.z = z;
  return t;
}

DcsTuple dcs_sample(const SplitParams& p, bool real, const DcsLengths& lengths,
                    Rng& rng) {
  const int n = p.strands();
  BraidWord g = random_word(n, lengths.base, rng);
  BraidWord x = sample_left(p, lengths.subgroup, rng);
  BraidWord y = sample_right(p, lengths.subgroup, rng);
  BraidWord z =
      real ? BraidWord(n) : random_word(n, lengths.base, rng);
  return dcs_make(p, real, g, x, y, z);
}

std::string DcsTuple::dump() const {
  std::string out;
  out += "g1:" + word_to_text(g1) + "\n";
  out += "g2:" + word_to_text(g2) + "\n";
  out += "g3:" + word_to_text(g3) + "\n";
  out += "g4:" + word_to_text(g4) + "\n";
  out += std::string("label:") + (label ? "D" : "R") + "\n";
  return out;
}

std::optional<BraidWord> brute_force_conjugacy_search(
    const ConjugacyInstance& inst) {
  require_same_group(inst.x, inst.y);
  const int n = inst.x.n;
  std::vector<int> gens = inst.generator_set;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (int i : gens) {
    if (i < 1 || i > n - 1) {
      throw DomainError("generator index out of range");
    }
  }
  if (inst.bound < 0) throw DomainError("negative search bound");

  // Alphabet in enumeration order: +i, -i with indices ascending.
  std::vector<std::int16_t> alphabet;
  for (int i : gens) {
    alphabet.push_back(static_cast<std::int16_t>(i));
    alphabet.push_back(static_cast<std::int16_t>(-i));
  }

  // Budget check before enumerating anything.
  const std::uint64_t a = alphabet.size();
  std::uint64_t total = 1, layer = 1;
  for (int len = 1; len <= inst.bound; ++len) {
    if (a != 0 && layer > kEnumerationBudget / a) {
      throw BudgetError("conjugacy enumeration budget exceeded");
    }
    layer *= a;
    total += layer;
    if (total > kEnumerationBudget) {
      throw BudgetError("conjugacy enumeration budget exceeded");
    }
  }

  BraidWord candidate(n);
  if (equals(conjugate(candidate, inst.x), inst.y)) return candidate;
  if (a == 0) return std::nullopt;

  std::vector<std::size_t> odometer;
  for (int len = 1; len <= inst.bound; ++len) {
    odometer.assign(len, 0);
    for (;;) {
      candidate.letters.clear();
      for (std::size_t d : odometer) candidate.letters.push_back(alphabet[d]);
      if (equals(conjugate(candidate, inst.x), inst.y)) return candidate;
      // advance: last position is least significant
      int pos = len - 1;
      while (pos >= 0 && odometer[pos] + 1 == a) {
        odometer[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++odometer[pos];
    }
  }
  return std::nullopt;
}

ConjugacyAnswer conjugacy_decision_bounded(const BraidWord& x,
                                           const BraidWord& y, int bound) {
  require_same_group(x, y);
  ConjugacyInstance inst;
  inst.x = x;
  inst.y = y;
  for (int i = 1; i <= x.n - 1; ++i) inst.generator_set.push_back(i);
  inst.bound = bound;
  return brute_force_conjugacy_search(inst).has_value()
             ? ConjugacyAnswer::kYes
             : ConjugacyAnswer::kNoWithinBound;
}

}  // namespace braidpke
