#pragma once

#include <cstdint>
#include <random>

namespace fourmode {

/// splitmix64 step; the standard finalizer used for seed derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Deterministic per-task seed from (master, index, stream tag).
/// Parallel workers draw from independent engines seeded this way, so results
/// cannot depend on scheduling order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index,
                                 std::uint64_t stream = 0) {
  std::uint64_t s = master;
  splitmix64(s);
  s ^= 0xA0761D6478BD642FULL * (index + 1);
  splitmix64(s);
  s ^= 0xE7037ED1A0B428DBULL * (stream + 1);
  return splitmix64(s);
}

inline std::mt19937_64 make_engine(std::uint64_t seed) { return std::mt19937_64(seed); }

/// Thermal (geometric on {0,1,2,...}) occupation with the given mean:
/// P(n) = (1-q) q^n, q = mean/(1+mean).
inline int sample_thermal(std::mt19937_64& eng, double mean) {
  if (mean <= 0.0) return 0;
  const double q = mean / (1.0 + mean);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  // inverse CDF; counts stay small at the gains used here
  double u = uni(eng);
  int n = 0;
  double p = 1.0 - q;
  double cdf = p;
  while (u > cdf && n < 10000) {
    p *= q;
    cdf += p;
    ++n;
  }
  return n;
}

}  // namespace fourmode
