#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace imprim {

// Deterministic random source, identifier "imprim-prng-v1".
//
// All randomness in the library flows through this wrapper. The engine is
// mt19937_64, whose output sequence is pinned by the standard, and the
// distributions are hand rolled because std::*_distribution is
// implementation defined and would break byte-identical reports.
class Prng {
public:
  static constexpr const char* kVersion = "imprim-prng-v1";

  explicit Prng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  int uniform_int(int n) {
    return static_cast<int>(engine_() % static_cast<std::uint64_t>(n));
  }

  // Standard normal, Box-Muller on two fixed draws.
  double normal() {
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi() * u2);
  }

  // Complex Gaussian with E|z|^2 = 1.
  std::complex<double> complex_normal() {
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-std::log(u1));
    return {r * std::cos(two_pi() * u2), r * std::sin(two_pi() * u2)};
  }

  // Independent child stream.
  Prng fork(std::uint64_t stream) {
    const std::uint64_t s = next_u64();
    return Prng(s ^ (0x9E3779B97F4A7C15ULL * (stream + 1)));
  }

private:
  static constexpr double two_pi() { return 6.283185307179586476925287; }

  std::mt19937_64 engine_;
};

}  // namespace imprim
