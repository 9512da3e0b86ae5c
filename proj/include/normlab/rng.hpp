#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "normlab/complex_matrix.hpp"

namespace normlab {

/// SplitMix64 mixing step; the seed-derivation primitive used everywhere.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Stream-splitting rule: the generator for stream (a, b) under a base seed
/// is seeded with splitmix64 applied to the base, then to base ^ a * M1,
/// then to that ^ b * M2. Identical (base, a, b) always yields the same
/// stream on every platform.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
  std::uint64_t s = splitmix64(base);
  s = splitmix64(s ^ (a * 0xBF58476D1CE4E5B9ull));
  s = splitmix64(s ^ (b * 0x94D049BB133111EBull));
  return s;
}

/// Deterministic random source. The core generator is std::mt19937_64 (fully
/// specified by the standard); all distributions are hand-rolled from raw
/// 64-bit draws so results are identical across platforms and libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [lo, hi] inclusive, by rejection.
  int uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t draw;
    do {
      draw = gen_();
    } while (draw >= limit);
    return lo + static_cast<int>(draw % span);
  }

  /// Standard normal via Box-Muller (pairs cached).
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1;
    do {
      u1 = uniform01();
    } while (u1 == 0.0);
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  Complex gaussian_complex() {
    const double re = gaussian();
    const double im = gaussian();
    return Complex(re, im);
  }

  /// Uniform on the complex unit circle.
  Complex unit_complex() {
    const double theta = 6.283185307179586476925286766559 * uniform01();
    return Complex(std::cos(theta), std::sin(theta));
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace normlab
