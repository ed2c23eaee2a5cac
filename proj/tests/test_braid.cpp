#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "braidpke/braid.hpp"
#include "braidpke/canonical.hpp"
#include "braidpke/errors.hpp"
#include "helpers.hpp"

using namespace braidpke;

namespace {
BraidWord w(int n, std::vector<std::int16_t> ls) {
  return BraidWord(n, std::move(ls));
}
}  // namespace

TEST_CASE("compose concatenates and freely reduces") {
  CHECK(compose(w(3, {1}), w(3, {-1})).letters.empty());
  CHECK(compose(w(4, {1, 3}), w(4, {2})) == w(4, {1, 3, 2}));
  CHECK(equals(compose(w(4, {1}), w(4, {3})), compose(w(4, {3}), w(4, {1}))));
  CHECK_THROWS_AS(compose(w(3, {1}), w(4, {1})), DomainError);
}

TEST_CASE("inverse reverses and flips signs") {
  CHECK(inverse(w(3, {1, 2})) == w(3, {-2, -1}));
  CHECK(inverse(w(3, {})) == w(3, {}));
  BraidWord a = w(3, {2, -1});
  CHECK(compose(a, inverse(a)).letters.empty());
}

TEST_CASE("free_reduce deletes adjacent inverse pairs") {
  CHECK(free_reduce(w(3, {1, 2, -2, 1})) == w(3, {1, 1}));
  CHECK(free_reduce(w(3, {1, -1})) == w(3, {}));
  CHECK(free_reduce(w(3, {2, 1, -1, -2})) == w(3, {}));
}

TEST_CASE("fundamental braid follows the half-twist recursion") {
  CHECK(fundamental_braid(1) == w(1, {}));
  CHECK(fundamental_braid(2) == w(2, {1}));
  CHECK(fundamental_braid(3) == w(3, {1, 2, 1}));

  SUBCASE("permutation is the reversal for n <= 10") {
    for (int n = 1; n <= 10; ++n) {
      auto perm = permutation_of_word(fundamental_braid(n));
      for (int i = 0; i < n; ++i) CHECK(perm[i] == n - i);
    }
  }
}

TEST_CASE("random_word basics") {
  Rng rng(42);
  CHECK(random_word(3, 0, rng).letters.empty());
  CHECK_THROWS_AS(random_word(1, 5, rng), DomainError);

  SUBCASE("fixed seed reproduces the letter sequence") {
    Rng r1(777), r2(777);
    CHECK(random_word(10, 64, r1) == random_word(10, 64, r2));
  }

  SUBCASE("single letters are uniform over the 6 choices at n=4") {
    Rng r(20260810);
    std::map<int, int> freq;
    const int draws = 10000;
    for (int t = 0; t < draws; ++t) {
      freq[random_word(4, 1, r).letters[0]]++;
    }
    CHECK(freq.size() == 6);
    for (auto& [letter, count] : freq) {
      double f = double(count) / draws;
      CHECK(f == doctest::Approx(1.0 / 6).epsilon(0.12));  // 1/6 +- 0.02
    }
  }
}

TEST_CASE("group laws hold under element equality") {
  Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    BraidWord a = random_word(6, 12, rng);
    BraidWord b = random_word(6, 12, rng);
    BraidWord c = random_word(6, 12, rng);
    CHECK(equals(compose(a, compose(b, c)), compose(compose(a, b), c)));
    CHECK(equals(compose(a, inverse(a)), BraidWord(6)));
  }
}

TEST_CASE("delta conjugation realizes the flip automorphism") {
  for (int n = 2; n <= 10; ++n) {
    BraidWord delta = fundamental_braid(n);
    for (int i = 1; i <= n - 1; ++i) {
      BraidWord lhs = compose(delta, w(n, {std::int16_t(i)}));
      BraidWord rhs = compose(w(n, {std::int16_t(n - i)}), delta);
      CHECK(equals(lhs, rhs));
    }
  }
}

TEST_CASE("delta squared is central") {
  Rng rng(9);
  BraidWord d2 = compose(fundamental_braid(6), fundamental_braid(6));
  for (int t = 0; t < 20; ++t) {
    BraidWord x = random_word(6, 15, rng);
    CHECK(equals(compose(d2, x), compose(x, d2)));
  }
}
