// Command-line front end: key generation, file encryption under the three
// schemes, the canned malleability demos, and the game/assumption
// experiments.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "braidpke/codec.hpp"
#include "braidpke/errors.hpp"
#include "braidpke/games.hpp"
#include "braidpke/keyio.hpp"
#include "braidpke/schemes.hpp"

using namespace braidpke;
namespace games = braidpke::games;

namespace {

constexpr int kExitBadFile = 3;
constexpr int kExitAuthFailure = 4;
constexpr int kExitBudget = 5;
constexpr int kExitDomain = 6;

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  return data;
}

void write_file(const std::string& path, const std::uint8_t* data,
                std::size_t len) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out.write(reinterpret_cast<const char*>(data), std::streamsize(len));
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << text;
}

Rng make_rng(std::optional<std::uint64_t> seed) {
  return seed ? Rng(*seed) : Rng();
}

struct CommonOpts {
  int l = 5;
  int r = 5;
  int word_length = kDefaultWordLength;
  std::size_t lk = kDefaultHashBits;
  std::optional<std::uint64_t> seed;
  int threads = 0;
};

// ISO/IEC 7816-4 style padding: 0x80 marker then zeros to the block size.
std::vector<std::uint8_t> pad_to_blocks(std::vector<std::uint8_t> data,
                                        std::size_t block) {
  data.push_back(0x80);
  while (data.size() % block != 0) data.push_back(0x00);
  return data;
}

std::vector<std::uint8_t> strip_padding(std::vector<std::uint8_t> data) {
  while (!data.empty() && data.back() == 0x00) data.pop_back();
  if (data.empty() || data.back() != 0x80) {
    throw ParseError("invalid block padding");
  }
  data.pop_back();
  return data;
}

int do_keygen(const CommonOpts& opts, const std::string& alg_name,
              const std::string& out_prefix) {
  Rng rng = make_rng(opts.seed);
  Algorithm alg = algorithm_from_name(alg_name);
  SplitParams params(opts.l, opts.r);
  KeyPair kp = keygen(params, opts.word_length, rng);

  std::ostringstream pub, sec;
  write_public_key(pub, alg, kp.pub);
  write_secret_key(sec, alg, kp);
  write_text(out_prefix + ".pk", pub.str());
  write_text(out_prefix + ".sk", sec.str());
  std::cout << "wrote " << out_prefix << ".pk and " << out_prefix << ".sk\n";
  return 0;
}

int do_encrypt(const CommonOpts& opts, const std::string& key_path,
               const std::string& in_path, const std::string& out_path,
               bool single_block) {
  Rng rng = make_rng(opts.seed);
  std::ifstream key_in(key_path);
  if (!key_in) throw ParseError("cannot open '" + key_path + "'");
  LoadedPublicKey key = read_public_key(key_in);
  std::vector<std::uint8_t> data = read_file(in_path);

  CiphertextFile file;
  file.alg = key.alg;
  switch (key.alg) {
    case Algorithm::kA1: {
      CanonicalByteCodec codec(key.pk.params);
      file.a1_blocks.push_back(
          enc_a1(key.pk, codec.encode(data), rng, opts.word_length));
      break;
    }
    case Algorithm::kA2: {
      if (opts.lk % 8 != 0) {
        throw DomainError("--lk must be a multiple of 8 for file mode");
      }
      const std::size_t block = opts.lk / 8;
      std::vector<std::uint8_t> padded;
      if (single_block) {
        if (data.size() != block) {
          throw DomainError("--single-block needs exactly " +
                            std::to_string(block) + " input bytes");
        }
        padded = data;
      } else {
        padded = pad_to_blocks(std::move(data), block);
      }
      for (std::size_t at = 0; at < padded.size(); at += block) {
        BitString m = BitString::truncate_of(
            std::vector<std::uint8_t>(padded.begin() + at,
                                      padded.begin() + at + block),
            opts.lk);
        file.a2_blocks.push_back(enc_a2(key.pk, m, rng, opts.word_length));
      }
      break;
    }
    case Algorithm::kA3:
      file.a3 = enc_a3(key.pk, data, rng, opts.word_length);
      break;
  }
  std::ostringstream out;
  write_ciphertext(out, file);
  write_text(out_path, out.str());
  std::cout << "encrypted " << in_path << " -> " << out_path << " ("
            << algorithm_name(key.alg) << ")\n";
  return 0;
}

int do_decrypt(const CommonOpts& opts, const std::string& key_path,
               const std::string& in_path, const std::string& out_path,
               bool single_block) {
  std::ifstream key_in(key_path);
  if (!key_in) throw ParseError("cannot open '" + key_path + "'");
  LoadedSecretKey key = read_secret_key(key_in);
  std::ifstream ct_in(in_path);
  if (!ct_in) throw ParseError("cannot open '" + in_path + "'");
  CiphertextFile file = read_ciphertext(ct_in, opts.lk);
  if (file.alg != key.alg) {
    throw ParseError("ciphertext algorithm does not match the key file");
  }

  std::vector<std::uint8_t> plain;
  switch (file.alg) {
    case Algorithm::kA1: {
      CanonicalByteCodec codec(key.kp.pub.params);
      for (const auto& block : file.a1_blocks) {
        auto part = codec.decode(dec_a1(key.kp.sec, block));
        plain.insert(plain.end(), part.begin(), part.end());
      }
      break;
    }
    case Algorithm::kA2: {
      for (const auto& block : file.a2_blocks) {
        BitString m = dec_a2(key.kp.sec, block);
        plain.insert(plain.end(), m.bytes.begin(), m.bytes.end());
      }
      if (!single_block) plain = strip_padding(std::move(plain));
      break;
    }
    case Algorithm::kA3:
      plain = dec_a3(key.kp.sec, *file.a3);
      break;
  }
  write_file(out_path, plain.data(), plain.size());
  std::cout << "decrypted " << in_path << " -> " << out_path << "\n";
  return 0;
}

int do_demo_malleability(const CommonOpts& opts, std::int64_t trials) {
  Rng rng = make_rng(opts.seed);
  games::RunOptions run;
  run.mode = games::Mode::kCca2;
  run.trials = trials;
  run.params = SplitParams(opts.l, opts.r);
  run.word_length = opts.word_length;
  run.threads = opts.threads;

  Rng r1 = rng.fork(1), r2 = rng.fork(2), r3 = rng.fork(3);
  games::GameResult a1 =
      games::run_game<games::SchemeA1>(games::malleability_adversary_a1(), run, r1);
  games::GameResult a2 = games::run_game<games::SchemeA2>(
      games::malleability_adversary_a2(opts.lk), run, r2);
  games::GameResult a3 = games::run_game<games::SchemeA3>(
      games::malleability_adversary_a3_analog(), run, r3);

  std::cout << "malleability attack, cca2 game, " << trials
            << " trials per scheme\n";
  std::cout << "a1: wins " << a1.wins << "/" << a1.trials
            << " (win rate " << a1.win_rate() << ")\n";
  std::cout << "a2: wins " << a2.wins << "/" << a2.trials
            << " (win rate " << a2.win_rate() << ")\n";
  std::cout << "a3 (same strategy, AEAD blocks it): wins " << a3.wins << "/"
            << a3.trials << " (advantage " << a3.advantage() << ")\n";
  bool witnessed = a1.wins == a1.trials && a2.wins == a2.trials;
  std::cout << (witnessed ? "active attack witnessed against a1 and a2\n"
                          : "unexpected: attacks did not win every trial\n");
  return witnessed ? 0 : 1;
}

template <typename S>
games::AdversaryFactory<S> pick_adversary(const std::string& name,
                                          const CommonOpts& opts,
                                          bool& leak_sk);

template <>
games::AdversaryFactory<games::SchemeA1> pick_adversary(
    const std::string& name, const CommonOpts&, bool& leak_sk) {
  if (name == "blind") return games::blind_adversary<games::SchemeA1>();
  if (name == "malleability") return games::malleability_adversary_a1();
  if (name == "replay") return games::replay_adversary<games::SchemeA1>();
  if (name == "perfect") {
    leak_sk = true;
    return games::perfect_adversary<games::SchemeA1>();
  }
  throw ParseError("unknown adversary '" + name + "'");
}

template <>
games::AdversaryFactory<games::SchemeA2> pick_adversary(
    const std::string& name, const CommonOpts& opts, bool& leak_sk) {
  if (name == "blind") return games::blind_adversary<games::SchemeA2>();
  if (name == "malleability") return games::malleability_adversary_a2(opts.lk);
  if (name == "replay") return games::replay_adversary<games::SchemeA2>();
  if (name == "perfect") {
    leak_sk = true;
    return games::perfect_adversary<games::SchemeA2>();
  }
  throw ParseError("unknown adversary '" + name + "'");
}

template <>
games::AdversaryFactory<games::SchemeA3> pick_adversary(
    const std::string& name, const CommonOpts&, bool& leak_sk) {
  if (name == "blind") return games::blind_adversary<games::SchemeA3>();
  if (name == "malleability") return games::malleability_adversary_a3_analog();
  if (name == "replay") return games::replay_adversary<games::SchemeA3>();
  if (name == "perfect") {
    leak_sk = true;
    return games::perfect_adversary<games::SchemeA3>();
  }
  throw ParseError("unknown adversary '" + name + "'");
}

int do_experiment_ind(const CommonOpts& opts, const std::string& scheme,
                      const std::string& mode_name,
                      const std::string& adversary, std::int64_t trials,
                      const std::string& json_path) {
  Rng rng = make_rng(opts.seed);
  games::RunOptions run;
  run.mode = games::mode_from_name(mode_name);
  run.trials = trials;
  run.params = SplitParams(opts.l, opts.r);
  run.word_length = opts.word_length;
  run.threads = opts.threads;

  games::GameResult result;
  if (scheme == "a1") {
    auto factory = pick_adversary<games::SchemeA1>(adversary, opts,
                                                   run.leak_secret_key);
    result = games::run_game<games::SchemeA1>(factory, run, rng);
  } else if (scheme == "a2") {
    auto factory = pick_adversary<games::SchemeA2>(adversary, opts,
                                                   run.leak_secret_key);
    result = games::run_game<games::SchemeA2>(factory, run, rng);
  } else if (scheme == "a3") {
    auto factory = pick_adversary<games::SchemeA3>(adversary, opts,
                                                   run.leak_secret_key);
    result = games::run_game<games::SchemeA3>(factory, run, rng);
  } else {
    throw ParseError("unknown scheme '" + scheme + "'");
  }

  const std::string title =
      "ind " + scheme + " " + mode_name + " " + adversary;
  std::cout << result.text_report(title);
  std::cout << "wins: " << result.wins << "/" << result.trials << "\n";
  if (!json_path.empty()) write_text(json_path, result.json_report(title));
  return 0;
}

int do_experiment_dcs(const CommonOpts& opts, const std::string& adversary,
                      std::int64_t trials, const std::string& json_path) {
  Rng rng = make_rng(opts.seed);
  games::DcsAdversaryKind kind;
  if (adversary == "perfect") {
    kind = games::DcsAdversaryKind::kPerfect;
  } else if (adversary == "blind") {
    kind = games::DcsAdversaryKind::kBlind;
  } else {
    throw ParseError("unknown adversary '" + adversary + "'");
  }
  SplitParams params(opts.l, opts.r);
  DcsLengths lengths{std::size_t(opts.word_length),
                     std::size_t(opts.word_length)};
  Rng rd = rng.fork(1), rr = rng.fork(2);
  games::RateResult on_d = games::dcs_experiment(kind, true, trials, params,
                                                 lengths, rd, opts.threads);
  games::RateResult on_r = games::dcs_experiment(kind, false, trials, params,
                                                 lengths, rr, opts.threads);
  double gap = on_d.rate() - on_r.rate();
  std::cout << "experiment: dcs distinguisher (" << adversary << ")\n";
  std::cout << "runs per distribution: " << trials << "\n";
  std::cout << "output-1 rate on D tuples: " << on_d.rate() << "\n";
  std::cout << "output-1 rate on R tuples: " << on_r.rate() << "\n";
  std::cout << "gap: " << gap << "\n";
  std::cout << "seed: " << rng.seed() << "\n";
  if (!json_path.empty()) {
    nlohmann::json j{{"experiment", "dcs"},
                     {"adversary", adversary},
                     {"runs", trials},
                     {"rate_d", on_d.rate()},
                     {"rate_r", on_r.rate()},
                     {"gap", gap},
                     {"seed", rng.seed()}};
    write_text(json_path, j.dump(2));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braidpke: braid-group public-key toolkit and game harness"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonOpts opts;
  std::optional<std::uint64_t> seed;
  app.add_option("--seed", seed, "deterministic seed (default: OS entropy)");
  app.add_option("--l", opts.l, "left block strands (default 5)");
  app.add_option("--r", opts.r, "right block strands (default 5)");
  app.add_option("--word-length", opts.word_length,
                 "secret/ephemeral word length (default 32)");
  app.add_option("--lk", opts.lk, "pad/hash bit length for a2 (default 256)");
  app.add_option("--threads", opts.threads,
                 "worker threads for experiments (default: hardware)");

  // keygen
  auto* keygen_cmd = app.add_subcommand("keygen", "generate a key pair");
  std::string alg = "a3", out_prefix;
  keygen_cmd->add_option("--alg", alg, "scheme: a1, a2 or a3")
      ->check(CLI::IsMember({"a1", "a2", "a3"}));
  keygen_cmd->add_option("--out", out_prefix, "output path prefix")
      ->required();

  // encrypt / decrypt
  auto* enc_cmd = app.add_subcommand("encrypt", "encrypt a file");
  auto* dec_cmd = app.add_subcommand("decrypt", "decrypt a file");
  std::string key_path, in_path, out_path;
  bool single_block = false;
  for (auto* cmd : {enc_cmd, dec_cmd}) {
    cmd->add_option("--key", key_path, "key file")->required();
    cmd->add_option("--in", in_path, "input file")->required();
    cmd->add_option("--out", out_path, "output file")->required();
    cmd->add_flag("--single-block", single_block,
                  "a2: one l(k)-bit block, no padding");
  }

  // demo
  auto* demo_cmd = app.add_subcommand("demo", "canned demonstrations");
  demo_cmd->require_subcommand(1);
  auto* mall_cmd =
      demo_cmd->add_subcommand("malleability", "run both active attacks");
  std::int64_t trials = 1000;
  mall_cmd->add_option("--trials", trials, "trials per scheme");

  // experiment
  auto* exp_cmd = app.add_subcommand("experiment", "security experiments");
  exp_cmd->require_subcommand(1);
  auto* ind_cmd = exp_cmd->add_subcommand("ind", "IND game");
  std::string scheme = "a3", mode = "cpa", adversary = "blind", json_path;
  std::int64_t ind_trials = 1000;
  ind_cmd->add_option("--scheme", scheme, "a1, a2 or a3")
      ->check(CLI::IsMember({"a1", "a2", "a3"}));
  ind_cmd->add_option("--mode", mode, "cpa, cca or cca2")
      ->check(CLI::IsMember({"cpa", "cca", "cca2"}));
  ind_cmd->add_option("--adversary", adversary,
                      "blind, malleability, perfect or replay");
  ind_cmd->add_option("--trials", ind_trials, "number of trials");
  ind_cmd->add_option("--json", json_path, "write machine-readable summary");

  auto* dcs_cmd = exp_cmd->add_subcommand("dcs", "distinguisher rates");
  std::string dcs_adversary = "perfect";
  std::int64_t dcs_trials = 2000;
  std::string dcs_json;
  dcs_cmd->add_option("--adversary", dcs_adversary, "perfect or blind");
  dcs_cmd->add_option("--trials", dcs_trials, "runs per distribution");
  dcs_cmd->add_option("--json", dcs_json, "write machine-readable summary");

  CLI11_PARSE(app, argc, argv);
  opts.seed = seed;

  try {
    if (*keygen_cmd) return do_keygen(opts, alg, out_prefix);
    if (*enc_cmd) {
      return do_encrypt(opts, key_path, in_path, out_path, single_block);
    }
    if (*dec_cmd) {
      return do_decrypt(opts, key_path, in_path, out_path, single_block);
    }
    if (*mall_cmd) return do_demo_malleability(opts, trials);
    if (*ind_cmd) {
      return do_experiment_ind(opts, scheme, mode, adversary, ind_trials,
                               json_path);
    }
    if (*dcs_cmd) {
      return do_experiment_dcs(opts, dcs_adversary, dcs_trials, dcs_json);
    }
  } catch (const AuthenticationError& e) {
    std::cerr << "authentication failure: " << e.what() << "\n";
    return kExitAuthFailure;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadFile;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return 1;
}
