#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace hudn {

// mt19937_64 output is pinned by the standard; the transforms below avoid the
// implementation-defined std distributions so streams replay bit-exactly.

inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);  // 2^-53
}

inline double uniform_range(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

/// Uniform integer in [0, n), n >= 1.
inline int uniform_int(std::mt19937_64& rng, int n) {
  int v = static_cast<int>(uniform_unit(rng) * n);
  return v >= n ? n - 1 : v;
}

template <typename T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& rng) {
  for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
    int j = uniform_int(rng, i + 1);
    std::swap(v[i], v[static_cast<size_t>(j)]);
  }
}

/// Weighted pick from a probability vector (assumed to sum to ~1).
inline int sample_index(std::mt19937_64& rng, const std::vector<double>& probs) {
  double u = uniform_unit(rng);
  double acc = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    if (u < acc) return static_cast<int>(i);
  }
  return static_cast<int>(probs.size()) - 1;
}

}  // namespace hudn
