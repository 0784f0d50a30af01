#pragma once

#include <cstdint>
#include <random>

#include "quartet/cartan.hpp"
#include "quartet/pure_state.hpp"

namespace quartet {

// Counter-friendly generator: every (seed, index) pair gives an independent
// stream, so parallel work can be partitioned arbitrarily without changing
// the numbers drawn.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  SplitMix64(std::uint64_t seed, std::uint64_t index)
      : state(seed ^ (0x9E3779B97F4A7C15ull * (index + 1))) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  double uniform01() { return double(next() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform01(); }
};

inline std::mt19937_64 seeded_engine(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

inline Complex gaussian_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng), n(rng)};
}

inline PureState random_state(int n, std::mt19937_64& rng) {
  PureState s = PureState::zero(n);
  for (int i = 0; i < s.dim(); ++i) s.amplitudes[i] = gaussian_complex(rng);
  return s;
}

inline CartanPoint random_cartan_point(std::mt19937_64& rng, bool unit = true) {
  CartanPoint z;
  for (int i = 0; i < 4; ++i) z[i] = gaussian_complex(rng);
  if (unit) z /= z.norm();
  return z;
}

// Gaussian 2x2 complex matrix rescaled to determinant one.
inline Eigen::Matrix2cd random_sl2(std::mt19937_64& rng) {
  while (true) {
    Eigen::Matrix2cd g;
    g << gaussian_complex(rng), gaussian_complex(rng), gaussian_complex(rng),
        gaussian_complex(rng);
    const Complex det = g.determinant();
    if (std::abs(det) < 1e-6) continue;
    return g / std::sqrt(det);
  }
}

inline std::array<Eigen::Matrix2cd, 4> random_sl2_tuple(std::mt19937_64& rng) {
  return {random_sl2(rng), random_sl2(rng), random_sl2(rng), random_sl2(rng)};
}

}  // namespace quartet
