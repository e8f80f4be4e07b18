#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace empathy {

// std::mt19937_64 output is fixed by the standard but the std:: distributions
// are not, so sampling goes through these helpers to stay reproducible across
// standard libraries.
using Rng = std::mt19937_64;

// Uniform integer in [0, bound). `bound` must be > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // Reject the lowest 2^64 mod bound outputs so the rest split evenly.
  const std::uint64_t threshold = (0 - bound) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x < threshold);
  return x % bound;
}

template <typename T>
void shuffle(std::vector<T>& values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace empathy
