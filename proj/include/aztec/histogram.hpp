#pragma once

// Tilings of A_n bucketed by k, half their number of horizontal dominoes.

#include <cstdint>
#include <map>
#include <variant>

#include "aztec/sampler.hpp"
#include "aztec/tiling.hpp"

namespace aztec {

struct Enumerate {};
struct Sample {
  std::uint64_t count = 0;
  std::uint64_t seed = kDefaultSeed;
};
using HistogramSource = std::variant<Enumerate, Sample>;

inline constexpr int kEnumerateHistogramGuard = 6;

inline std::map<int, BigCount> horizontal_histogram(int n, const HistogramSource& source) {
  if (n < 0) throw std::invalid_argument("order must be >= 0");
  std::map<int, BigCount> hist;
  if (std::holds_alternative<Enumerate>(source)) {
    if (n > kEnumerateHistogramGuard)
      throw GuardExceeded("exact histogram limited to n <= " + std::to_string(kEnumerateHistogramGuard));
    for_each_tiling(Region::aztec(n), [&](const Tiling& t) {
      const std::size_t h = t.horizontal_count();
      if (h % 2 != 0) throw InvalidInput("odd number of horizontal dominoes in an Aztec tiling");
      hist[static_cast<int>(h / 2)] += 1;
    });
    return hist;
  }
  const auto& s = std::get<Sample>(source);
  for (const auto& [k, c] : sample_statistics(n, s.count, s.seed).hist) hist[k] = c;
  return hist;
}

/// binom(m, k) exactly.
inline BigCount binomial(unsigned m, unsigned k) {
  if (k > m) return 0;
  BigCount r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (m - k + i) / i;
  return r;
}

}  // namespace aztec
