#pragma once

// Exact uniform sampling of Aztec diamond tilings.
//
// Starting from the empty tiling of A_0, each step maps a tiling of A_k to
// its inward field on A_{k+1}, reverses every arrow, and fills each 2×2
// component of the resulting outward field with a fair coin. If the tiling of
// A_k is uniform, a given outward field g is reached with probability
// 2^{r(flip g)} / T_k, and each of its 2^{r(g)} tilings is then picked with
// probability 2^{r(flip g) - r(g)} / T_k = 2^{-(k+1)} / T_k = 1 / T_{k+1}.
//
// Random bits come from std::mt19937_64 seeded with the 64-bit seed. Each
// 64-bit output is consumed least-significant bit first; one bit per 2×2
// component, components taken in row-major order of their centers.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "aztec/arrowfield.hpp"
#include "aztec/bijection.hpp"
#include "aztec/tiling.hpp"

namespace aztec {

inline constexpr std::uint64_t kDefaultSeed = 20140305;

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  bool next_bit() {
    if (available_ == 0) {
      word_ = engine_();
      available_ = 64;
    }
    const bool bit = word_ & 1u;
    word_ >>= 1;
    --available_;
    ++consumed_;
    return bit;
  }

  std::vector<std::uint8_t> bits(std::size_t count) {
    std::vector<std::uint8_t> out(count);
    for (auto& b : out) b = next_bit() ? 1 : 0;
    return out;
  }

  std::uint64_t consumed() const { return consumed_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t word_ = 0;
  int available_ = 0;
  std::uint64_t consumed_ = 0;
};

struct SampleSpec {
  int order = 0;
  std::uint64_t seed = kDefaultSeed;
};

/// One step A_k -> A_{k+1}. `free_choices`, if given, receives the number of
/// bits drawn.
inline Tiling grow(const Tiling& t, RandomSource& rng, int* free_choices = nullptr) {
  if (!t.region.is_aztec()) throw InvalidInput("grow expects an Aztec diamond tiling");
  const NodeContext ctx(t.region.order());
  const ArrowField outward = flip(field_from_inner_tiling(t, ctx));
  const Decomposition d = decompose(outward);
  if (free_choices) *free_choices = d.free_choices;
  const auto bits = rng.bits(static_cast<std::size_t>(d.free_choices));
  return tilings_for_field(d, bits);
}

struct SampleTrace {
  std::vector<int> free_choices;  // bits drawn at each step
  std::uint64_t bits_consumed = 0;
};

inline Tiling sample_uniform(const SampleSpec& spec, SampleTrace* trace = nullptr) {
  if (spec.order < 0) throw std::invalid_argument("order must be >= 0");
  RandomSource rng(spec.seed);
  Tiling t(Region::aztec(0));
  for (int k = 0; k < spec.order; ++k) {
    int drawn = 0;
    t = grow(t, rng, &drawn);
    if (trace) trace->free_choices.push_back(drawn);
  }
  if (trace) trace->bits_consumed = rng.consumed();
  return t;
}

struct SampleSummary {
  int order = 0;
  std::uint64_t count = 0;
  std::map<int, std::uint64_t> hist;  // k = horizontal dominoes / 2
  // h_occupancy[row][col]: samples in which cell (col - order, row - order) is
  // covered by a horizontal domino; rows run from the bottom.
  std::vector<std::vector<std::uint64_t>> h_occupancy;
};

/// Sample i uses seed + i.
inline SampleSummary sample_statistics(int order, std::uint64_t count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  SampleSummary s{order, count, {}, {}};
  const std::size_t side = static_cast<std::size_t>(2 * order);
  s.h_occupancy.assign(side, std::vector<std::uint64_t>(side, 0));
  for (std::uint64_t i = 0; i < count; ++i) {
    const Tiling t = sample_uniform({order, seed + i});
    require_valid(t);
    ++s.hist[static_cast<int>(t.horizontal_count() / 2)];
    for (const Domino& d : t.dominoes) {
      if (!d.horizontal()) continue;
      for (Cell c : d.cells())
        ++s.h_occupancy[static_cast<std::size_t>(c.y + order)][static_cast<std::size_t>(c.x + order)];
    }
  }
  return s;
}

}  // namespace aztec
