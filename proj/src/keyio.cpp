#include "braidpke/keyio.hpp"

#include <istream>
#include <map>
#include <ostream>

#include "braidpke/canonical.hpp"
#include "braidpke/errors.hpp"
#include "braidpke/serialize.hpp"

namespace braidpke {

std::string algorithm_name(Algorithm alg) {
  switch (alg) {
    case Algorithm::kA1: return "a1";
    case Algorithm::kA2: return "a2";
    case Algorithm::kA3: return "a3";
  }
  throw DomainError("unknown algorithm");
}

Algorithm algorithm_from_name(const std::string& name) {
  if (name == "a1") return Algorithm::kA1;
  if (name == "a2") return Algorithm::kA2;
  if (name == "a3") return Algorithm::kA3;
  throw ParseError("unknown algorithm '" + name + "'");
}

namespace {

void write_key_common(std::ostream& out, Algorithm alg, const PublicKey& pk) {
  out << "braidpke v1\n";
  out << "alg=" << algorithm_name(alg) << "\n";
  out << "l=" << pk.params.l << "\n";
  out << "r=" << pk.params.r << "\n";
  out << "g=" << word_to_text(pk.g) << "\n";
  out << "X=" << word_to_text(pk.X) << "\n";
}

// Reads "key=value" lines in order, allowing repeats only for the
// ciphertext block keys.
std::vector<std::pair<std::string, std::string>> read_lines(std::istream& in,
                                                            const char* magic) {
  std::string line;
  if (!std::getline(in, line) || line != magic) {
    throw ParseError(std::string("missing '") + magic + "' header");
  }
  std::vector<std::pair<std::string, std::string>> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("malformed line: '" + line + "'");
    }
    out.emplace_back(line.substr(0, eq), line.substr(eq + 1));
  }
  return out;
}

std::string require_one(
    const std::vector<std::pair<std::string, std::string>>& lines,
    const std::string& key) {
  std::string found;
  int count = 0;
  for (const auto& [k, v] : lines) {
    if (k == key) {
      found = v;
      ++count;
    }
  }
  if (count != 1) {
    throw ParseError("expected exactly one '" + key + "' line");
  }
  return found;
}

int parse_positive(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size() || v < 1) throw std::invalid_argument(what);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("malformed ") + what + ": '" + s + "'");
  }
}

LoadedPublicKey parse_key(
    const std::vector<std::pair<std::string, std::string>>& lines) {
  LoadedPublicKey out;
  out.alg = algorithm_from_name(require_one(lines, "alg"));
  int l = parse_positive(require_one(lines, "l"), "l");
  int r = parse_positive(require_one(lines, "r"), "r");
  SplitParams params(l, r);
  BraidWord g = word_from_text(require_one(lines, "g"));
  BraidWord X = word_from_text(require_one(lines, "X"));
  if (g.n != params.strands() || X.n != params.strands()) {
    throw ParseError("key words do not match l+r strands");
  }
  out.pk = PublicKey{params, g, X};
  return out;
}

}  // namespace

void write_public_key(std::ostream& out, Algorithm alg, const PublicKey& pk) {
  write_key_common(out, alg, pk);
}

void write_secret_key(std::ostream& out, Algorithm alg, const KeyPair& kp) {
  write_key_common(out, alg, kp.pub);
  out << "x=" << word_to_text(kp.sec.x) << "\n";
}

LoadedPublicKey read_public_key(std::istream& in) {
  return parse_key(read_lines(in, "braidpke v1"));
}

LoadedSecretKey read_secret_key(std::istream& in) {
  auto lines = read_lines(in, "braidpke v1");
  LoadedPublicKey pub = parse_key(lines);
  BraidWord x = word_from_text(require_one(lines, "x"));
  if (!is_left_word(pub.pk.params, x)) {
    throw ParseError("secret word is not a left-subgroup word");
  }
  LoadedSecretKey out;
  out.alg = pub.alg;
  out.kp.pub = pub.pk;
  out.kp.sec = SecretKey{pub.pk.params, x, pub.pk.g};
  if (!equals(conjugate(x, pub.pk.g), pub.pk.X)) {
    throw ParseError("secret key does not certify the public key");
  }
  return out;
}

void write_ciphertext(std::ostream& out, const CiphertextFile& file) {
  out << "ct v1\n";
  out << "alg=" << algorithm_name(file.alg) << "\n";
  switch (file.alg) {
    case Algorithm::kA1:
      for (const auto& ct : file.a1_blocks) {
        out << "Y=" << word_to_text(ct.Y) << "\n";
        out << "c=" << word_to_text(ct.c) << "\n";
      }
      break;
    case Algorithm::kA2:
      for (const auto& ct : file.a2_blocks) {
        out << "Y=" << word_to_text(ct.Y) << "\n";
        out << "c=" << ct.c.to_hex() << "\n";
      }
      break;
    case Algorithm::kA3: {
      if (!file.a3) throw DomainError("missing a3 ciphertext");
      const auto& ct = *file.a3;
      out << "Y=" << word_to_text(ct.Y) << "\n";
      std::vector<std::uint8_t> nonce(ct.nonce.begin(), ct.nonce.end());
      out << "nonce=" << bytes_to_hex(nonce) << "\n";
      out << "blob=" << bytes_to_hex(ct.blob) << "\n";
      break;
    }
  }
}

CiphertextFile read_ciphertext(std::istream& in, std::size_t a2_bits) {
  auto lines = read_lines(in, "ct v1");
  CiphertextFile file;
  file.alg = algorithm_from_name(require_one(lines, "alg"));
  switch (file.alg) {
    case Algorithm::kA1: {
      CiphertextA1 current;
      bool have_y = false;
      for (const auto& [k, v] : lines) {
        if (k == "Y") {
          if (have_y) throw ParseError("Y line without matching c line");
          current.Y = word_from_text(v);
          have_y = true;
        } else if (k == "c") {
          if (!have_y) throw ParseError("c line without preceding Y line");
          current.c = word_from_text(v);
          file.a1_blocks.push_back(current);
          have_y = false;
        } else if (k != "alg") {
          throw ParseError("unexpected line '" + k + "' in a1 ciphertext");
        }
      }
      if (have_y || file.a1_blocks.empty()) {
        throw ParseError("incomplete a1 ciphertext");
      }
      break;
    }
    case Algorithm::kA2: {
      CiphertextA2 current;
      bool have_y = false;
      for (const auto& [k, v] : lines) {
        if (k == "Y") {
          if (have_y) throw ParseError("Y line without matching c line");
          current.Y = word_from_text(v);
          have_y = true;
        } else if (k == "c") {
          if (!have_y) throw ParseError("c line without preceding Y line");
          if (v.size() * 4 < a2_bits) {
            throw ParseError("c hex shorter than the configured bit length");
          }
          current.c = BitString::from_hex(v, a2_bits);
          file.a2_blocks.push_back(current);
          have_y = false;
        } else if (k != "alg") {
          throw ParseError("unexpected line '" + k + "' in a2 ciphertext");
        }
      }
      if (have_y || file.a2_blocks.empty()) {
        throw ParseError("incomplete a2 ciphertext");
      }
      break;
    }
    case Algorithm::kA3: {
      CiphertextA3 ct;
      ct.Y = word_from_text(require_one(lines, "Y"));
      auto nonce = bytes_from_hex(require_one(lines, "nonce"));
      if (nonce.size() != kAeadNonceBytes) {
        throw ParseError("nonce must be 12 bytes");
      }
      std::copy(nonce.begin(), nonce.end(), ct.nonce.begin());
      ct.blob = bytes_from_hex(require_one(lines, "blob"));
      file.a3 = std::move(ct);
      break;
    }
  }
  return file;
}

}  // namespace braidpke
