#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidpke/bits.hpp"
#include "braidpke/canonical.hpp"
#include "braidpke/errors.hpp"
#include "braidpke/schemes.hpp"
#include "braidpke/serialize.hpp"
#include "braidpke/subgroup.hpp"

namespace braidpke::games {

enum class Mode { kCpa, kCca, kCca2 };

std::string mode_name(Mode mode);
Mode mode_from_name(const std::string& name);

/// Thrown by the runner's oracles on protocol violations (replaying the
/// target ciphertext in the adaptive phase); the trial is aborted and
/// counted as a loss.
struct ProtocolViolation : Error {
  using Error::Error;
};

struct GameResult {
  std::int64_t trials = 0;
  std::int64_t wins = 0;
  std::int64_t violations = 0;  // aborted trials, counted as losses
  std::int64_t beta_ones = 0;   // challenge-bit tally (fairness checks)
  std::uint64_t seed = 0;

  double win_rate() const { return trials ? double(wins) / trials : 0.0; }
  double advantage() const;
  double ci95_halfwidth() const;
  std::string text_report(const std::string& title) const;
  std::string json_report(const std::string& title) const;
};

// --- Scheme policies --------------------------------------------------------

struct SchemeA1 {
  using Message = BraidWord;
  using Ciphertext = CiphertextA1;
  static constexpr const char* kName = "a1";

  static Ciphertext encrypt(const PublicKey& pk, const Message& m, Rng& rng,
                            int word_length = kDefaultWordLength);
  static Message decrypt(const SecretKey& sk, const Ciphertext& ct);
  static std::size_t message_length(const Message& m) {
    return m.letters.size();
  }
  static bool messages_equal(const Message& a, const Message& b) {
    return equals(a, b);
  }
  static bool ciphertext_identical(const Ciphertext& a, const Ciphertext& b) {
    return a == b;
  }
  static std::pair<Message, Message> distinct_message_pair(const PublicKey&);
  static Message random_message(const PublicKey& pk, Rng& rng);
};

struct SchemeA2 {
  using Message = BitString;
  using Ciphertext = CiphertextA2;
  static constexpr const char* kName = "a2";

  static Ciphertext encrypt(const PublicKey& pk, const Message& m, Rng& rng,
                            int word_length = kDefaultWordLength);
  static Message decrypt(const SecretKey& sk, const Ciphertext& ct);
  static std::size_t message_length(const Message& m) { return m.nbits; }
  static bool messages_equal(const Message& a, const Message& b) {
    return a == b;
  }
  static bool ciphertext_identical(const Ciphertext& a, const Ciphertext& b) {
    return a == b;
  }
  static std::pair<Message, Message> distinct_message_pair(const PublicKey&);
  static Message random_message(const PublicKey& pk, Rng& rng);
};

struct SchemeA3 {
  using Message = std::vector<std::uint8_t>;
  using Ciphertext = CiphertextA3;
  static constexpr const char* kName = "a3";

  static Ciphertext encrypt(const PublicKey& pk, const Message& m, Rng& rng,
                            int word_length = kDefaultWordLength);
  static Message decrypt(const SecretKey& sk, const Ciphertext& ct);
  static std::size_t message_length(const Message& m) { return m.size(); }
  static bool messages_equal(const Message& a, const Message& b) {
    return a == b;
  }
  static bool ciphertext_identical(const Ciphertext& a, const Ciphertext& b) {
    return a == b;
  }
  static std::pair<Message, Message> distinct_message_pair(const PublicKey&);
  static Message random_message(const PublicKey& pk, Rng& rng);
};

// --- Adversary interface ----------------------------------------------------

/// Oracle handles granted per game phase. The hash handle answers braid
/// queries (the real H in games, a programmable list in the reductions);
/// the decryption handle is present only in cca/cca2 phases and returns
/// nullopt on decryption failure.
template <typename S>
struct Oracles {
  std::function<BitString(const BraidWord&)>* hash = nullptr;
  std::function<std::optional<typename S::Message>(
      const typename S::Ciphertext&)>* decrypt = nullptr;
};

template <typename S>
class Adversary {
 public:
  virtual ~Adversary() = default;

  /// Called by the runner before the game when the sk-leaking hook is on.
  virtual void receive_keys(const KeyPair&) {}

  virtual std::pair<typename S::Message, typename S::Message> choose_messages(
      const PublicKey& pk, Oracles<S>& oracles, Rng& rng) = 0;

  virtual int guess(const PublicKey& pk, const typename S::Ciphertext& target,
                    Oracles<S>& oracles, Rng& rng) = 0;
};

/// Fresh adversary instance per trial, so trials stay independent and may
/// run in parallel.
template <typename S>
using AdversaryFactory = std::function<std::unique_ptr<Adversary<S>>()>;

struct RunOptions {
  Mode mode = Mode::kCpa;
  std::int64_t trials = 1000;
  SplitParams params{5, 5};
  int word_length = kDefaultWordLength;
  bool leak_secret_key = false;  // test hook for the sanity adversary
  int threads = 0;               // 0 = hardware concurrency
};

/// Runs the IND game: fresh keypair and uniform challenge bit per trial,
/// decryption oracle per mode (cca: first phase only; cca2: both phases
/// with the exact target ciphertext refused). Protocol violations abort
/// the trial and count as losses.
template <typename S>
GameResult run_game(const AdversaryFactory<S>& factory,
                    const RunOptions& options, Rng& rng);

// --- Canned adversaries -----------------------------------------------------

/// Ignores everything and guesses a uniform bit.
template <typename S>
AdversaryFactory<S> blind_adversary();

/// Sanity adversary that decrypts the challenge with the leaked secret key;
/// wins every trial (advantage exactly 1/2).
template <typename S>
AdversaryFactory<S> perfect_adversary();

/// Replays the exact target ciphertext to the phase-2 oracle; used to test
/// the runner's refusal rule.
template <typename S>
AdversaryFactory<S> replay_adversary();

/// CCA2 attack on Algorithm 1: submits (Y, c w) for a fixed tail w, strips
/// w from the oracle answer and identifies the challenge message exactly.
AdversaryFactory<SchemeA1> malleability_adversary_a1();

/// CCA2 attack on Algorithm 2: submits (Y, c xor delta) and un-xors delta.
AdversaryFactory<SchemeA2> malleability_adversary_a2(std::size_t bits);

/// The same xor-mauling strategy pointed at Algorithm 3; the AEAD rejects
/// the mauled blob, so this adversary degrades to blind guessing.
AdversaryFactory<SchemeA3> malleability_adversary_a3_analog();

// --- Programmable random oracle ---------------------------------------------

/// Lazily sampled random function on braid-group elements with a query log.
/// Repeated queries (any words for the same element) return the stored
/// bits; fresh queries draw fresh uniform bits.
class ProgrammableOracle {
 public:
  ProgrammableOracle(std::size_t out_bits, Rng& rng)
      : out_bits_(out_bits), rng_(&rng) {}

  BitString query(const BraidWord& q);
  void program(const BraidWord& q, BitString bits);
  std::optional<BitString> lookup(const BraidWord& q) const;
  const std::vector<BraidWord>& log() const { return log_; }

 private:
  std::size_t out_bits_;
  Rng* rng_;
  std::vector<std::pair<std::string, BitString>> entries_;
  std::vector<BraidWord> log_;
};

// --- Reduction experiments ---------------------------------------------------

/// One run of the tuple-distinguishing experiment: treats (g1, g2) as
/// the public key, encrypts
/// M_beta as (g3, g4 M_beta), returns 1 iff the adversary guesses beta.
int reduction_dcs_from_cpa(const AdversaryFactory<SchemeA1>& factory,
                           const DcsTuple& tuple, Rng& rng);

/// A conjugacy-search challenge (g, X, c1_hat) with the hidden witnesses
/// kept for instance generation and tests.
struct CcsInstance {
  SplitParams params{5, 5};
  BraidWord g;
  BraidWord X;       // x g x^{-1}
  BraidWord c1_hat;  // y g y^{-1}
};

struct CcsInstanceWitness {
  CcsInstance instance;
  BraidWord x;
  BraidWord y_hat;
};

CcsInstanceWitness ccs_sample(const SplitParams& p, int base_length,
                              int left_length, int right_length, Rng& rng);

struct CcsExtractOptions {
  std::size_t hash_bits = kDefaultHashBits;
  int search_bound = 4;  // bounded desk-scale search for y with c1 = y g y^-1
};

/// Chosen-plaintext H-list extractor: simulates the a2 game with a
/// programmable H,
/// challenges with (c1_hat, h_hat xor M_beta), and scans the H query log
/// for the braid equal to y X y^{-1}; detection runs the bounded conjugacy
/// search on public data only.
std::optional<BraidWord> reduction_ccs_from_cpa(
    const AdversaryFactory<SchemeA2>& factory, const CcsInstance& instance,
    Rng& rng, const CcsExtractOptions& options = {});

/// Adaptive-attack H-list extractor: H is queried at ephemeral braids y
/// and the
/// list stores (y, c1 = y g y^{-1}, h); decryption queries are answered via
/// list lookup on the first component (recording (*, c1, h) when fresh);
/// returns the y completing the (*, c1_hat, h_hat) entry.
std::optional<BraidWord> reduction_ccs_from_cca2(
    const AdversaryFactory<SchemeA3>& factory, const CcsInstance& instance,
    Rng& rng, const CcsExtractOptions& options = {});

// --- Experiment drivers -----------------------------------------------------

enum class DcsAdversaryKind { kPerfect, kBlind };

struct RateResult {
  std::int64_t runs = 0;
  std::int64_t ones = 0;
  double rate() const { return runs ? double(ones) / runs : 0.0; }
};

/// Output-1 rate of the tuple-distinguishing experiment over fresh
/// tuples of the given kind.
RateResult dcs_experiment(DcsAdversaryKind kind, bool real_tuples,
                          std::int64_t runs, const SplitParams& p,
                          const DcsLengths& lengths, Rng& rng,
                          int threads = 0);

}  // namespace braidpke::games
