#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace braidpke {

/// Seedable deterministic random source. All sampling in the library goes
/// through this class so that a fixed seed reproduces identical runs; the
/// distribution code avoids std::uniform_int_distribution, whose output is
/// implementation-defined.
class Rng {
 public:
  Rng() : Rng(from_entropy_seed()) {}
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform value in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound) {
    // Rejection sampling keeps the draw exactly uniform.
    const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % bound;
  }

  bool coin() { return (engine_() & 1u) != 0; }

  void fill_bytes(std::uint8_t* out, std::size_t len) {
    std::size_t i = 0;
    while (i < len) {
      std::uint64_t v = engine_();
      for (int b = 0; b < 8 && i < len; ++b, ++i) {
        out[i] = static_cast<std::uint8_t>(v >> (8 * b));
      }
    }
  }

  std::vector<std::uint8_t> bytes(std::size_t len) {
    std::vector<std::uint8_t> out(len);
    fill_bytes(out.data(), len);
    return out;
  }

  /// Independent stream derived from this generator's seed and an index.
  /// Used to give parallel trials their own deterministic streams.
  Rng fork(std::uint64_t index) const {
    return Rng(splitmix(seed_ ^ (0x9e3779b97f4a7c15ULL * (index + 1))));
  }

  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

 private:
  static std::uint64_t from_entropy_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }

  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

}  // namespace braidpke
