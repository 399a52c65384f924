#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace dcc {

// All randomized code paths draw from std::mt19937_64 and map draws to ranges
// with the multiply-shift trick below. std::uniform_int_distribution and
// std::shuffle are implementation-defined, which would make partitions differ
// between standard libraries.
using Rng = std::mt19937_64;

inline std::size_t pick_index(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(
      (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

template <typename T>
void shuffle(std::vector<T>& values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::size_t j = pick_index(rng, i);
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace dcc
