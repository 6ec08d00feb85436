#include "pds/sampling.hpp"

#include <cmath>

namespace pds {

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double unit_interval(uint64_t seed, uint64_t counter) {
  const uint64_t bits = splitmix64(splitmix64(seed) ^ counter);
  // 53 high bits -> [0, 1), then shift to [-1, 1).
  return double(bits >> 11) * 0x1p-52 - 1.0;
}

namespace {

// Rejection sampling from the unit n-ball; normalization makes the
// direction exactly uniform. The counter advances deterministically through
// rejected attempts, so point i never depends on evaluation order.
template <size_t N>
std::array<double, N> sample_sphere(uint64_t seed, uint64_t i) {
  for (uint64_t attempt = 0;; ++attempt) {
    std::array<double, N> v;
    double norm2 = 0.0;
    for (size_t lane = 0; lane < N; ++lane) {
      v[lane] = unit_interval(seed, i * 1024 + attempt * N + lane);
      norm2 += v[lane] * v[lane];
    }
    if (norm2 <= 1.0 && norm2 > 1e-8) {
      const double inv = 1.0 / std::sqrt(norm2);
      for (double& x : v) x *= inv;
      return v;
    }
  }
}

}  // namespace

std::array<double, 3> sample_s2(uint64_t seed, uint64_t i) {
  return sample_sphere<3>(seed, i);
}

std::array<double, 4> sample_s3(uint64_t seed, uint64_t i) {
  return sample_sphere<4>(seed, i);
}

}  // namespace pds
