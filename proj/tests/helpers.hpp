#pragma once

// Test-only oracles, independent of the library's normal-form machinery.

#include <vector>

#include "braidpke/braid.hpp"
#include "braidpke/rng.hpp"

namespace testutil {

using braidpke::BraidWord;
using braidpke::Rng;

// Counts how often each strand pair crosses in a positive word by direct
// simulation. A word is a permutation braid iff every entry is <= 1.
inline int max_pair_crossings(const BraidWord& w) {
  int n = w.n;
  std::vector<int> strand_at(n + 1);  // position -> strand id
  for (int p = 1; p <= n; ++p) strand_at[p] = p;
  std::vector<std::vector<int>> crossed(n + 1, std::vector<int>(n + 1, 0));
  int worst = 0;
  for (auto e : w.letters) {
    int i = e < 0 ? -e : e;
    int a = strand_at[i], b = strand_at[i + 1];
    int lo = a < b ? a : b, hi = a < b ? b : a;
    worst = std::max(worst, ++crossed[lo][hi]);
    strand_at[i] = b;
    strand_at[i + 1] = a;
  }
  return worst;
}

// Applies one random element-preserving rewrite to the word: a free
// insertion, a free cancellation, a far-commutation swap, or a braid-move
// on an adjacent all-positive or all-negative triple. Returns the word
// unchanged when the chosen rewrite has no applicable site.
inline BraidWord random_rewrite(const BraidWord& w, Rng& rng) {
  const int n = w.n;
  BraidWord out = w;
  auto& ls = out.letters;
  switch (rng.below(4)) {
    case 0: {  // insert (e, -e) at a random site
      if (n < 2) return out;
      std::size_t at = rng.below(ls.size() + 1);
      int idx = static_cast<int>(rng.below(n - 1)) + 1;
      std::int16_t e = rng.coin() ? idx : -idx;
      ls.insert(ls.begin() + at, {e, static_cast<std::int16_t>(-e)});
      return out;
    }
    case 1: {  // cancel one adjacent inverse pair
      std::vector<std::size_t> sites;
      for (std::size_t p = 0; p + 1 < ls.size(); ++p) {
        if (ls[p] == -ls[p + 1]) sites.push_back(p);
      }
      if (sites.empty()) return out;
      std::size_t p = sites[rng.below(sites.size())];
      ls.erase(ls.begin() + p, ls.begin() + p + 2);
      return out;
    }
    case 2: {  // far commutation: swap adjacent letters with |i-j| >= 2
      std::vector<std::size_t> sites;
      for (std::size_t p = 0; p + 1 < ls.size(); ++p) {
        int a = std::abs(ls[p]), b = std::abs(ls[p + 1]);
        if (std::abs(a - b) >= 2) sites.push_back(p);
      }
      if (sites.empty()) return out;
      std::size_t p = sites[rng.below(sites.size())];
      std::swap(ls[p], ls[p + 1]);
      return out;
    }
    default: {  // braid move on an adjacent triple, same sign throughout
      std::vector<std::size_t> sites;
      for (std::size_t p = 0; p + 2 < ls.size(); ++p) {
        auto a = ls[p], b = ls[p + 1], c = ls[p + 2];
        bool all_pos = a > 0 && b > 0 && c > 0;
        bool all_neg = a < 0 && b < 0 && c < 0;
        if (!all_pos && !all_neg) continue;
        if (a == c && std::abs(std::abs(a) - std::abs(b)) == 1) {
          sites.push_back(p);
        }
      }
      if (sites.empty()) return out;
      std::size_t p = sites[rng.below(sites.size())];
      std::swap(ls[p], ls[p + 1]);
      ls[p + 2] = ls[p];
      return out;
    }
  }
}

inline BraidWord rewrite_many(const BraidWord& w, int steps, Rng& rng) {
  BraidWord out = w;
  for (int s = 0; s < steps; ++s) out = random_rewrite(out, rng);
  return out;
}

// Complete equality oracle for positive words: two positive words represent
// the same element iff they are connected by braid moves and far
// commutations alone (both preserve length), so the BFS closure of one word
// decides equality exactly.
inline std::set<std::vector<std::int16_t>> positive_class(const BraidWord& w) {
  std::set<std::vector<std::int16_t>> seen{w.letters};
  std::vector<std::vector<std::int16_t>> frontier{w.letters};
  while (!frontier.empty()) {
    std::vector<std::vector<std::int16_t>> next;
    for (const auto& ls : frontier) {
      for (std::size_t p = 0; p + 1 < ls.size(); ++p) {
        if (std::abs(ls[p] - ls[p + 1]) >= 2) {
          auto moved = ls;
          std::swap(moved[p], moved[p + 1]);
          if (seen.insert(moved).second) next.push_back(moved);
        }
        if (p + 2 < ls.size() && ls[p] == ls[p + 2] &&
            std::abs(ls[p] - ls[p + 1]) == 1) {
          auto moved = ls;
          std::swap(moved[p], moved[p + 1]);
          moved[p + 2] = moved[p];
          if (seen.insert(moved).second) next.push_back(moved);
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline long long exponent_sum(const BraidWord& w) {
  long long sum = 0;
  for (auto e : w.letters) sum += e > 0 ? 1 : -1;
  return sum;
}

}  // namespace testutil
