#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <random>

namespace svmkit {

// mt19937_64 with hand-rolled draw helpers. The standard <random>
// distributions are not bit-reproducible across library implementations;
// these are, and seeded results are part of the output contract.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n), unbiased via rejection. n must be > 0.
  std::size_t below(std::size_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t rem = (max % n + 1) % n;
    std::uint64_t x = gen_();
    while (rem != 0 && x >= max - rem + 1) x = gen_();
    return static_cast<std::size_t>(x % n);
  }

  // Pair of independent standard normals (Box-Muller).
  std::array<double, 2> normal_pair() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * 3.14159265358979323846 * uniform();
    return {r * std::cos(t), r * std::sin(t)};
  }

private:
  std::mt19937_64 gen_;
};

}  // namespace svmkit
