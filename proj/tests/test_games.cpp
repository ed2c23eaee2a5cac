#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "braidpke/games.hpp"
#include "braidpke/hash.hpp"
#include "helpers.hpp"

using namespace braidpke;
using namespace braidpke::games;

namespace {

const SplitParams kDesk(5, 5);

// Attacker for the cpa-reduction experiment: knows the ephemeral conjugator
// (test hook), computes the true pad preimage Z = y X y^{-1}, queries H
// there (among decoys) and decides the bit from the pad.
class DiligentA2 final : public Adversary<SchemeA2> {
 public:
  DiligentA2(BraidWord y_hat, std::vector<BraidWord> decoys)
      : y_hat_(std::move(y_hat)), decoys_(std::move(decoys)) {}

  std::pair<BitString, BitString> choose_messages(const PublicKey&,
                                                  Oracles<SchemeA2>&,
                                                  Rng&) override {
    m0_ = BitString::zeros(kDefaultHashBits);
    m1_ = BitString::ones(kDefaultHashBits);
    return {m0_, m1_};
  }

  int guess(const PublicKey& pk, const CiphertextA2& target,
            Oracles<SchemeA2>& oracles, Rng& rng) override {
    if (!oracles.hash) return rng.coin();
    for (const auto& d : decoys_) (*oracles.hash)(d);
    BitString pad = (*oracles.hash)(conjugate(y_hat_, pk.X));
    BitString m = target.c.xored(pad);
    if (m == m1_) return 1;
    if (m == m0_) return 0;
    return rng.coin();
  }

 private:
  BraidWord y_hat_;
  std::vector<BraidWord> decoys_;
  BitString m0_, m1_;
};

// Attacker for the cca2-reduction experiment: queries H at the ephemeral braid
// itself (the proof's query domain) and uses the answer as the session key.
class DiligentA3 final : public Adversary<SchemeA3> {
 public:
  DiligentA3(BraidWord y_hat, std::vector<BraidWord> decoys)
      : y_hat_(std::move(y_hat)), decoys_(std::move(decoys)) {}

  std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>>
  choose_messages(const PublicKey&, Oracles<SchemeA3>&, Rng&) override {
    m0_.assign(24, 0x00);
    m1_.assign(24, 0xff);
    return {m0_, m1_};
  }

  int guess(const PublicKey&, const CiphertextA3& target,
            Oracles<SchemeA3>& oracles, Rng& rng) override {
    if (!oracles.hash) return rng.coin();
    for (const auto& d : decoys_) (*oracles.hash)(d);
    BitString key_bits = (*oracles.hash)(y_hat_);
    AeadKey key{};
    std::copy(key_bits.bytes.begin(), key_bits.bytes.end(), key.begin());
    try {
      auto m = aead_open(key, target.nonce, target.blob.data(),
                         target.blob.size());
      if (m == m1_) return 1;
      if (m == m0_) return 0;
    } catch (const AuthenticationError&) {
    }
    return rng.coin();
  }

 private:
  BraidWord y_hat_;
  std::vector<BraidWord> decoys_;
  std::vector<std::uint8_t> m0_, m1_;
};

// Never touches the hash oracle; both extractors must come back empty.
template <typename S>
class NonQuerying final : public Adversary<S> {
 public:
  std::pair<typename S::Message, typename S::Message> choose_messages(
      const PublicKey& pk, Oracles<S>&, Rng& rng) override {
    return {S::random_message(pk, rng), S::random_message(pk, rng)};
  }
  int guess(const PublicKey&, const typename S::Ciphertext&, Oracles<S>&,
            Rng& rng) override {
    return rng.coin() ? 1 : 0;
  }
};

// Exercises the H-list completion rule: a decryption query plants a
// (*, c1, h) entry, the later H query at the matching y must hand back the
// very same pad, which the adversary verifies by sealing under it.
class ListCompletionProbe final : public Adversary<SchemeA3> {
 public:
  ListCompletionProbe(BraidWord probe_y, std::shared_ptr<bool> consistent)
      : probe_y_(std::move(probe_y)), consistent_(std::move(consistent)) {}

  std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>>
  choose_messages(const PublicKey& pk, Oracles<SchemeA3>& oracles,
                  Rng& rng) override {
    if (oracles.decrypt && oracles.hash) {
      CiphertextA3 probe;
      probe.Y = conjugate(probe_y_, pk.g);
      rng.fill_bytes(probe.nonce.data(), probe.nonce.size());
      probe.blob = rng.bytes(24);          // junk: plants (*, c1, h)
      (*oracles.decrypt)(probe);           // answer irrelevant
      BitString pad = (*oracles.hash)(probe_y_);  // must complete the entry
      AeadKey key{};
      std::copy(pad.bytes.begin(), pad.bytes.end(), key.begin());
      std::vector<std::uint8_t> msg{1, 2, 3};
      AeadNonce nonce{};
      rng.fill_bytes(nonce.data(), nonce.size());
      CiphertextA3 sealed;
      sealed.Y = probe.Y;
      sealed.nonce = nonce;
      sealed.blob = aead_seal(key, nonce, msg.data(), msg.size());
      auto back = (*oracles.decrypt)(sealed);
      *consistent_ = back.has_value() && *back == msg;
    }
    return {std::vector<std::uint8_t>(8, 0), std::vector<std::uint8_t>(8, 1)};
  }

  int guess(const PublicKey&, const CiphertextA3&, Oracles<SchemeA3>&,
            Rng& rng) override {
    return rng.coin() ? 1 : 0;
  }

 private:
  BraidWord probe_y_;
  std::shared_ptr<bool> consistent_;
};

}  // namespace

TEST_CASE("programmable oracle consistency") {
  Rng rng(42);
  ProgrammableOracle oracle(128, rng);
  BraidWord a(10, {1, 2, 1});
  BraidWord b(10, {2, 1, 2});  // same element
  BitString first = oracle.query(a);
  CHECK(oracle.query(b) == first);
  CHECK(oracle.query(a) == first);
  BitString other = oracle.query(BraidWord(10, {3}));
  CHECK(other != first);  // 2^-128 collision chance
  CHECK(oracle.log().size() == 4);

  SUBCASE("programmed entries win") {
    ProgrammableOracle o2(8, rng);
    BitString forced = BitString::ones(8);
    o2.program(BraidWord(10, {5}), forced);
    CHECK(o2.query(BraidWord(10, {5})) == forced);
  }
}

TEST_CASE("blind adversary hovers near one half") {
  Rng rng(2024);
  RunOptions options;
  options.mode = Mode::kCpa;
  options.trials = 400;  // the 1e4-trial sweeps run in acceptance
  options.params = kDesk;
  GameResult res = run_game<SchemeA2>(blind_adversary<SchemeA2>(), options, rng);
  CHECK(res.trials == 400);
  CHECK(res.violations == 0);
  CHECK(res.advantage() < 0.13);  // 5 sigma at 400 trials
  // challenge bit fairness
  CHECK(std::abs(double(res.beta_ones) / res.trials - 0.5) < 0.13);
}

TEST_CASE("sk-leaking sanity adversary wins every trial") {
  Rng rng(2025);
  RunOptions options;
  options.mode = Mode::kCpa;
  options.trials = 60;
  options.params = kDesk;
  options.leak_secret_key = true;

  GameResult r1 = run_game<SchemeA1>(perfect_adversary<SchemeA1>(), options, rng);
  CHECK(r1.wins == r1.trials);
  CHECK(r1.advantage() == doctest::Approx(0.5));

  GameResult r3 = run_game<SchemeA3>(perfect_adversary<SchemeA3>(), options, rng);
  CHECK(r3.wins == r3.trials);
}

TEST_CASE("cca2 refuses the exact target ciphertext") {
  Rng rng(2026);
  RunOptions options;
  options.mode = Mode::kCca2;
  options.trials = 40;
  options.params = kDesk;
  GameResult res =
      run_game<SchemeA3>(replay_adversary<SchemeA3>(), options, rng);
  CHECK(res.violations == res.trials);
  CHECK(res.wins == 0);
}

TEST_CASE("cca mode withholds the phase-2 oracle") {
  // the replay adversary only queries in phase 2; under cca the oracle
  // handle is absent there, so no violation can occur
  Rng rng(2027);
  RunOptions options;
  options.mode = Mode::kCca;
  options.trials = 30;
  options.params = kDesk;
  GameResult res =
      run_game<SchemeA3>(replay_adversary<SchemeA3>(), options, rng);
  CHECK(res.violations == 0);
}

TEST_CASE("malleability adversaries win deterministically") {
  Rng rng(2028);
  RunOptions options;
  options.mode = Mode::kCca2;
  options.trials = 50;  // 1000-trial runs in acceptance
  options.params = kDesk;

  GameResult a1 =
      run_game<SchemeA1>(malleability_adversary_a1(), options, rng);
  CHECK(a1.wins == a1.trials);

  GameResult a2 = run_game<SchemeA2>(
      malleability_adversary_a2(kDefaultHashBits), options, rng);
  CHECK(a2.wins == a2.trials);

  SUBCASE("the same strategy dies against the AEAD") {
    GameResult a3 = run_game<SchemeA3>(malleability_adversary_a3_analog(),
                                       options, rng);
    CHECK(a3.wins < a3.trials);  // statistical; tight bound in acceptance
    CHECK(a3.violations == 0);
  }
}

TEST_CASE("malleability adversaries need the oracle to win") {
  Rng rng(2029);
  RunOptions options;
  options.mode = Mode::kCpa;  // no decryption oracle at all
  options.trials = 200;
  options.params = kDesk;
  GameResult res = run_game<SchemeA2>(
      malleability_adversary_a2(kDefaultHashBits), options, rng);
  CHECK(res.advantage() < 0.18);
}

TEST_CASE("experiment B1 on explicit tuples") {
  Rng rng(2030);
  DcsLengths lengths{16, 16};

  SUBCASE("perfect adversary detects D tuples") {
    for (int t = 0; t < 20; ++t) {
      DcsTuple tuple = dcs_sample(kDesk, true, lengths, rng);
      KeyPair kp = keypair_from_parts(kDesk, tuple.g1, tuple.x);
      AdversaryFactory<SchemeA1> factory = [&kp] {
        auto adv = perfect_adversary<SchemeA1>()();
        adv->receive_keys(kp);
        return adv;
      };
      CHECK(reduction_dcs_from_cpa(factory, tuple, rng) == 1);
    }
  }

  SUBCASE("rates split between D and R") {
    RateResult on_d = dcs_experiment(DcsAdversaryKind::kPerfect, true, 200,
                                     kDesk, lengths, rng);
    RateResult on_r = dcs_experiment(DcsAdversaryKind::kPerfect, false, 200,
                                     kDesk, lengths, rng);
    CHECK(on_d.rate() >= 0.95);
    CHECK(std::abs(on_r.rate() - 0.5) < 0.15);
    CHECK(on_d.rate() - on_r.rate() >= 0.4);
  }

  SUBCASE("blind adversary is flat on D tuples") {
    RateResult blind = dcs_experiment(DcsAdversaryKind::kBlind, true, 200,
                                      kDesk, lengths, rng);
    CHECK(std::abs(blind.rate() - 0.5) < 0.15);
  }
}

TEST_CASE("cpa reduction extractor pulls Z from the query log") {
  Rng rng(2031);
  for (int t = 0; t < 10; ++t) {
    CcsInstanceWitness inst = ccs_sample(kDesk, 24, 24, 3, rng);
    BraidWord z_true = conjugate(inst.y_hat, inst.instance.X);

    AdversaryFactory<SchemeA2> diligent = [&] {
      std::vector<BraidWord> decoys{random_word(10, 12, rng),
                                    random_word(10, 12, rng)};
      return std::make_unique<DiligentA2>(inst.y_hat, decoys);
    };
    auto extracted = reduction_ccs_from_cpa(diligent, inst.instance, rng);
    REQUIRE(extracted.has_value());
    CHECK(equals(*extracted, z_true));

    AdversaryFactory<SchemeA2> silent = [] {
      return std::make_unique<NonQuerying<SchemeA2>>();
    };
    CHECK_FALSE(
        reduction_ccs_from_cpa(silent, inst.instance, rng).has_value());
  }
}

TEST_CASE("cca2 reduction extractor returns the ephemeral conjugator") {
  Rng rng(2032);
  for (int t = 0; t < 10; ++t) {
    CcsInstanceWitness inst = ccs_sample(kDesk, 24, 24, 3, rng);

    AdversaryFactory<SchemeA3> diligent = [&] {
      std::vector<BraidWord> decoys{sample_right(kDesk, 2, rng)};
      return std::make_unique<DiligentA3>(inst.y_hat, decoys);
    };
    auto extracted = reduction_ccs_from_cca2(diligent, inst.instance, rng);
    REQUIRE(extracted.has_value());
    CHECK(equals(conjugate(*extracted, inst.instance.g),
                 inst.instance.c1_hat));

    AdversaryFactory<SchemeA3> silent = [] {
      return std::make_unique<NonQuerying<SchemeA3>>();
    };
    CHECK_FALSE(
        reduction_ccs_from_cca2(silent, inst.instance, rng).has_value());
  }
}

TEST_CASE("H-list completion reuses the planted pad") {
  Rng rng(2033);
  CcsInstanceWitness inst = ccs_sample(kDesk, 20, 20, 3, rng);
  auto consistent = std::make_shared<bool>(false);
  BraidWord probe_y = sample_right(kDesk, 4, rng);
  AdversaryFactory<SchemeA3> probing = [&] {
    return std::make_unique<ListCompletionProbe>(probe_y, consistent);
  };
  reduction_ccs_from_cca2(probing, inst.instance, rng);
  CHECK(*consistent);
}

TEST_CASE("game result reports") {
  GameResult r;
  r.trials = 100;
  r.wins = 75;
  r.seed = 7;
  CHECK(r.advantage() == doctest::Approx(0.25));
  CHECK(r.ci95_halfwidth() == doctest::Approx(1.96 * std::sqrt(0.75 * 0.25 / 100)));
  std::string text = r.text_report("demo");
  CHECK(text.find("trials: 100") != std::string::npos);
  CHECK(text.find("seed: 7") != std::string::npos);
  std::string json = r.json_report("demo");
  CHECK(json.find("\"wins\": 75") != std::string::npos);
}
