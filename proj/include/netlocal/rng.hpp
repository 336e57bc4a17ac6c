#pragma once

#include <cstdint>
#include <random>

namespace netlocal {

// SplitMix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stream seed for trial `stream` under `master`: master XOR hash(stream).
// Distinct streams give distinct seeds because mix64 is bijective.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return master ^ mix64(stream);
}

// Packs (cell, trial) into one stream index for per-cell/per-trial seeding.
constexpr std::uint64_t stream_index(std::uint64_t cell, std::uint64_t trial) {
  return (cell << 32) | (trial & 0xffffffffULL);
}

// Seedable mt19937_64 with hand-rolled distributions, so draws are identical
// across standard libraries (std:: distributions are not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0,1), 53 bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  // Uniform integer in [lo, hi], inclusive; unbiased by rejection.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next_u64());  // full range
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  // Uniform index in [0, k); k must be positive.
  std::size_t index(std::size_t k) {
    return static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(k) - 1));
  }

  // Independent child stream.
  Rng split(std::uint64_t stream) const { return Rng(derive_seed(seed_, stream)); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace netlocal
