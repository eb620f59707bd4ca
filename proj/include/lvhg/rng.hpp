#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace lvhg {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Deterministic per-path seed: identical (master, index) gives an identical
/// stream on every run and thread layout.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 0x853C49E6748FEA9BULL));
}

/// One private random stream per simulated path. All variate transforms are
/// hand-rolled from raw 64-bit draws so output does not depend on the
/// standard library's distribution implementations.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : eng_(splitmix64(seed)) {}

  std::uint64_t bits() { return eng_(); }

  /// Uniform on the open interval (0,1); never returns an endpoint.
  double u01() { return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * u01(); }

  /// Unit-rate exponential.
  double exponential() { return -std::log(u01()); }

  /// Standard normal, Box-Muller with cached spare (two uniforms per pair).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double r = std::sqrt(-2.0 * std::log(u01()));
    double t = 6.283185307179586476925286766559 * u01();
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  /// Poisson count by exponential inter-arrival summation; intended for the
  /// moderate means that occur in jump schedules.
  long poisson(double mean) {
    long k = 0;
    double acc = exponential();
    while (acc < mean) {
      ++k;
      acc += exponential();
    }
    return k;
  }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace lvhg
