#pragma once

#include <cstdint>

namespace iterlab {

// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

// Counter-based generator: the i-th output is mix64(start + (i + 1) * kGamma).
// Layout is documented in docs/generator.md.
class Rng {
 public:
  explicit constexpr Rng(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += kGamma;
    return mix64(state_);
  }

  // Uniform in [0, n) by modulo reduction; n == 0 returns 0.
  constexpr std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
  constexpr int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }
  // Uniform in [lo, hi].
  constexpr int range(int lo, int hi) { return lo + below_int(hi - lo + 1); }
  // 53-bit uniform double in [0, 1).
  constexpr double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  constexpr bool coin() { return (next() >> 63) != 0; }

  // Independent child stream; consumes one output of the parent.
  constexpr Rng split() { return Rng(mix64(next() ^ 0xD1B54A32D192ED03ULL)); }

  constexpr std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

// Seed of case i of a sweep: mix64(seed ^ mix64((i + 1) * kGamma)).
constexpr std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed ^ mix64((index + 1) * kGamma));
}

}  // namespace iterlab
