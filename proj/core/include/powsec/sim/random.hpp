#pragma once

#include <cstdint>
#include <random>

namespace powsec::sim {

// Portable seeded generator. The engine is std::mt19937_64, whose output
// sequence is fixed by the C++ standard; every variate transform below is
// written out here instead of using <random> distributions, whose algorithms
// are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Exponential with the given mean, by inversion.
  double exponential(double mean);
  // Standard normal, Box-Muller (one variate per call, no caching).
  double normal();

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

}  // namespace powsec::sim
