#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "covercount/numeric.hpp"

namespace covercount {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Derive an independent stream seed from a base seed and stream index.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t s = base ^ (0x9e3779b97f4a7c15ull * (stream + 1));
  return splitmix64(s);
}

/// xoshiro256** with splitmix64 seeding. Self-contained so that sampled
/// values are identical across standard libraries and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  Complex unit_complex() {
    double theta = 2.0 * std::numbers::pi * next_double();
    return Complex(std::cos(theta), std::sin(theta));
  }

  /// Area-uniform sample on the annulus rmin <= |z| <= rmax.
  Complex annulus(double rmin, double rmax) {
    double r2 = uniform(rmin * rmin, rmax * rmax);
    return std::sqrt(r2) * unit_complex();
  }

  /// Standard complex gaussian via Box-Muller.
  Complex gaussian() {
    double u = next_double();
    double v = next_double();
    if (u <= 0.0) u = 0x1.0p-53;
    double mag = std::sqrt(-2.0 * std::log(u));
    double theta = 2.0 * std::numbers::pi * v;
    return Complex(mag * std::cos(theta), mag * std::sin(theta));
  }

  /// Uniform integer in [lo, hi] (inclusive), rejection-free modulo bias is
  /// irrelevant at the ranges used here.
  long uniform_int(long lo, long hi) {
    return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4];
};

}  // namespace covercount
