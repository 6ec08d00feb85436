#pragma once

#include <array>
#include <cstdint>

namespace pds {

// Counter-based deterministic randomness (splitmix64): sample i of a seeded
// stream is a pure function of (seed, i), so outputs are identical across
// platforms and runs, and streams can be evaluated in any order.
uint64_t splitmix64(uint64_t x);

// Uniform double in [-1, 1) from one counter value.
double unit_interval(uint64_t seed, uint64_t counter);

// Quasi-uniform points: rejection from the unit ball, then normalization.
// Unit (x, y, z) on the 2-sphere, unit (alpha_re, alpha_im, beta_re,
// beta_im) on the 3-sphere.
std::array<double, 3> sample_s2(uint64_t seed, uint64_t i);
std::array<double, 4> sample_s3(uint64_t seed, uint64_t i);

}  // namespace pds
