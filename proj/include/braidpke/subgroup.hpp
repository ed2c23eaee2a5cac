#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidpke/braid.hpp"
#include "braidpke/rng.hpp"

namespace braidpke {

/// Split of B_{l+r} into commuting blocks. The left subgroup is generated
/// by sigma_1..sigma_{l-1}, the right one by sigma_{l+1}..sigma_{l+r-1};
/// index l belongs to neither, which is what makes every left element
/// commute with every right element.
struct SplitParams {
  int l = 5;
  int r = 5;

  SplitParams() = default;
  SplitParams(int left, int right);

  int strands() const { return l + r; }
  bool is_left_index(int i) const { return i >= 1 && i <= l - 1; }
  bool is_right_index(int i) const { return i >= l + 1 && i <= l + r - 1; }
  std::vector<int> left_indices() const;
  std::vector<int> right_indices() const;
};

/// Word over the left-subgroup generators only.
BraidWord sample_left(const SplitParams& p, std::size_t length, Rng& rng);

/// Word over the right-subgroup generators only.
BraidWord sample_right(const SplitParams& p, std::size_t length, Rng& rng);

bool is_left_word(const SplitParams& p, const BraidWord& w);
bool is_right_word(const SplitParams& p, const BraidWord& w);

/// a g a^{-1}.
BraidWord conjugate(const BraidWord& a, const BraidWord& g);

/// Element equality of xy and yx. Inputs must come from the left and right
/// subgroups respectively; anything else is a precondition violation.
bool commute_check(const SplitParams& p, const BraidWord& x,
                   const BraidWord& y);

/// One sample of the R or D four-tuple. The conjugator witnesses and the
/// label are carried for the test harness; dump() writes only the public
/// lines.
struct DcsTuple {
  SplitParams params;
  BraidWord g1, g2, g3, g4;
  bool label = false;  // true: D tuple, false: R tuple
  BraidWord x, y, z;   // witnesses (z only set in R tuples)

  std::string dump() const;
};

struct DcsLengths {
  std::size_t base = 32;      // length of g (and z)
  std::size_t subgroup = 32;  // length of x and y
};

DcsTuple dcs_sample(const SplitParams& p, bool real, const DcsLengths& lengths,
                    Rng& rng);

/// Deterministic tuple construction from explicit witnesses (test hook).
/// real=true ignores z and builds the D tuple.
DcsTuple dcs_make(const SplitParams& p, bool real, const BraidWord& g,
                  const BraidWord& x, const BraidWord& y, const BraidWord& z);

/// Bounded conjugacy search instance: find a over +-generator_set with
/// length <= bound such that y = a x a^{-1}.
struct ConjugacyInstance {
  BraidWord x;
  BraidWord y;
  std::vector<int> generator_set;
  int bound = 0;
};

inline constexpr std::uint64_t kEnumerationBudget = 10'000'000;

/// Enumerates candidate conjugators in length-then-lexicographic order
/// (alphabet +i1, -i1, +i2, -i2, ... with indices ascending) and returns
/// the first match, or nullopt when no conjugator exists within the bound.
/// Throws BudgetError when the candidate count would exceed the budget.
std::optional<BraidWord> brute_force_conjugacy_search(
    const ConjugacyInstance& inst);

enum class ConjugacyAnswer { kYes, kNoWithinBound };

/// Bounded semi-decision of conjugacy over the full generator set.
ConjugacyAnswer conjugacy_decision_bounded(const BraidWord& x,
                                           const BraidWord& y, int bound);

}  // namespace braidpke
