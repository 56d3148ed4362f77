#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "banditgv/check.hpp"

namespace banditgv {

// Seeded generator. std::mt19937_64's output sequence is pinned by the C++
// standard, so identical seeds give bit-identical streams on every platform.
// All derived draws below avoid std::*_distribution, whose mappings are
// implementation-defined.
struct rng {
  std::mt19937_64 engine;
  explicit rng(std::uint64_t seed) : engine(seed) {}
};

// Uniform over {0, ..., n-1} via rejection, exactly unbiased.
inline std::uint64_t sample_below(rng& r, std::uint64_t n) {
  require(n >= 1, "sample_below: n must be positive");
  const std::uint64_t threshold = (-n) % n;  // 2^64 mod n
  std::uint64_t x = r.engine();
  while (x < threshold) x = r.engine();
  return x % n;
}

// Uniform coordinate index in {1, ..., d} (1-based, as recorded in traces).
inline int sample_coordinate(rng& r, int d) {
  require(d >= 1, "sample_coordinate: d must be positive");
  return static_cast<int>(sample_below(r, static_cast<std::uint64_t>(d))) + 1;
}

// Uniform sign in {-1, +1}.
inline int sample_sign(rng& r) { return sample_below(r, 2) == 0 ? 1 : -1; }

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(rng& r) {
  return static_cast<double>(r.engine() >> 11) * 0x1.0p-53;
}

// Standard normal via Box-Muller; 1-u keeps the logarithm argument in (0, 1].
inline double sample_gaussian(rng& r) {
  const double u = uniform01(r);
  const double v = uniform01(r);
  const double radius = std::sqrt(-2.0 * std::log1p(-u));
  return radius * std::cos(2.0 * M_PI * v);
}

// Uniform direction on the unit sphere: normalized independent Gaussians.
inline Eigen::VectorXd sample_unit_sphere(rng& r, int d) {
  require(d >= 1, "sample_unit_sphere: d must be positive");
  Eigen::VectorXd u(d);
  double norm = 0.0;
  do {
    for (int k = 0; k < d; ++k) u[k] = sample_gaussian(r);
    norm = u.norm();
  } while (norm < 1e-300);
  return u / norm;
}

}  // namespace banditgv
