#pragma once

// The invariant battery behind `aztec verify`: every exact identity the
// library relies on, each run up to its own size guard.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "aztec/arrowfield.hpp"
#include "aztec/bijection.hpp"
#include "aztec/histogram.hpp"
#include "aztec/sampler.hpp"
#include "aztec/tiling.hpp"

namespace aztec {

struct PatternCensus {
  int valid = 0;
  int attracting = 0;
  int repelling = 0;
  int transient = 0;
};

/// Classifies all 16 head/tail configurations around one node.
inline PatternCensus local_pattern_census() {
  PatternCensus pc;
  for (unsigned m = 0; m < 16; ++m) {
    const LocalPattern p{(m & 1) != 0, (m & 2) != 0, (m & 4) != 0, (m & 8) != 0};
    auto c = classify_pattern(p);
    if (!c) continue;
    ++pc.valid;
    if (*c == NodeClass::Attracting) ++pc.attracting;
    if (*c == NodeClass::Repelling) ++pc.repelling;
    if (*c == NodeClass::Transient) ++pc.transient;
  }
  return pc;
}

/// Pearson statistic of `samples` uniform draws of Aztec tilings of `order`
/// against the uniform law on all T_order tilings.
inline double sampler_chi_square(int order, std::uint64_t samples, std::uint64_t seed) {
  std::map<std::vector<Domino>, std::size_t> index;
  for_each_tiling(Region::aztec(order), [&](const Tiling& t) { index.emplace(t.dominoes, index.size()); });
  std::vector<std::uint64_t> observed(index.size(), 0);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Tiling t = sample_uniform({order, seed + i});
    auto it = index.find(t.dominoes);
    if (it == index.end()) return std::numeric_limits<double>::infinity();
    ++observed[it->second];
  }
  const double expected = static_cast<double>(samples) / static_cast<double>(index.size());
  double chi2 = 0;
  for (std::uint64_t o : observed) chi2 += (o - expected) * (o - expected) / expected;
  return chi2;
}

inline constexpr int kDpGuard = 16;
// Profiles held by the CLI without --force; A_13 peaks near 3.2 million.
inline constexpr std::size_t kDpStateBudget = 4'000'000;
// The battery's DP check stops here so that `verify` stays quick.
inline constexpr int kBatteryDpGuard = 12;
inline constexpr int kEnumerateGuard = 5;

/// Runs every check with sizes limited by `max_order` and the per-check guards.
inline std::vector<CheckResult> run_battery(int max_order) {
  if (max_order < 0) throw std::invalid_argument("max order must be >= 0");
  std::vector<CheckResult> out;
  auto add = [&](std::string name, bool pass, std::string detail) {
    out.push_back({std::move(name), pass, std::move(detail)});
  };

  {
    const int top = std::min(max_order, kBatteryDpGuard);
    bool ok = true;
    for (int n = 0; n <= top; ++n) ok = ok && count_tilings(Region::aztec(n)) == aztec_closed_form(n);
    add("dp count = 2^{n(n+1)/2}", ok, "n = 0.." + std::to_string(top));
  }
  {
    const int top = std::min(max_order, 4);
    bool ok = true;
    for (int n = 0; n <= top; ++n) {
      std::uint64_t k = 0;
      for_each_tiling(Region::aztec(n), [&](const Tiling&) { ++k; });
      ok = ok && BigCount(k) == aztec_closed_form(n);
    }
    add("enumeration count = 2^{n(n+1)/2}", ok, "n = 0.." + std::to_string(top));
  }
  for (int n = 0; n <= std::min(max_order, kRecursionGuard); ++n)
    for (const CheckResult& c : verify_recursion(n).checks)
      add("recursion n=" + std::to_string(n) + ": " + c.name, c.pass, c.detail);
  {
    const int top = std::min(max_order, 3);
    bool ok = true;
    std::size_t fields = 0;
    for (int n = 0; n <= top; ++n) {
      const NodeContext ctx(n);
      for_each_tiling(ctx.outer(), [&](const Tiling& t) {
        const ArrowField f = field_from_outer_tiling(t, ctx);
        const ArrowField g = flip(f);
        ++fields;
        ok = ok && flip(g) == f && orientation(g) == FieldOrientation::Inward &&
             census(g).repelling == census(f).attracting &&
             horizontal_component_count(decompose(f)) == horizontal_component_count(decompose(g));
      });
    }
    add("flip involution and horizontal components", ok,
        std::to_string(fields) + " tiling fields, n = 0.." + std::to_string(top));
  }
  {
    const PatternCensus pc = local_pattern_census();
    add("six local patterns", pc.valid == 6 && pc.attracting == 1 && pc.repelling == 1 && pc.transient == 4,
        std::to_string(pc.valid) + " of 16 valid");
  }
  {
    const int top = std::min(max_order, 4);
    bool ok = true;
    for (int n = 0; n <= top; ++n) {
      const unsigned m = static_cast<unsigned>(n * (n + 1) / 2);
      const auto hist = horizontal_histogram(n, Enumerate{});
      ok = ok && hist.size() == m + 1;
      for (unsigned k = 0; k <= m && ok; ++k) ok = hist.count(int(k)) && hist.at(int(k)) == binomial(m, k);
    }
    add("horizontal histogram = binomial", ok, "n = 0.." + std::to_string(top));
  }
  {
    bool ok = count_tilings(Region::rectangle(2, 1)) == 1 && count_tilings(Region::rectangle(2, 2)) == 2;
    for (int k = 3; k <= 20; ++k)
      ok = ok && count_tilings(Region::rectangle(2, k)) ==
                     count_tilings(Region::rectangle(2, k - 1)) + count_tilings(Region::rectangle(2, k - 2));
    add("2xn Fibonacci recurrence", ok, "n = 1..20");
  }
  {
    double worst = 0;
    for (int n : {2, 4, 6, 8}) {
      const double dp = count_tilings(Region::rectangle(n, n)).convert_to<double>();
      worst = std::max(worst, std::abs(kasteleyn_square(n) - dp) / dp);
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max relative error %.3g", worst);
    add("kasteleyn product = dp (n = 2,4,6,8)", worst < 1e-6, buf);
  }
  {
    const int order = std::clamp(max_order, 1, 3);
    const std::uint64_t tilings = std::uint64_t{1} << (order * (order + 1) / 2);
    const std::uint64_t samples = 1000 * tilings;
    const double chi2 = sampler_chi_square(order, samples, kDefaultSeed);
    const double limit = boost::math::quantile(
        boost::math::complement(boost::math::chi_squared(static_cast<double>(tilings - 1)), 0.001));
    char buf[128];
    std::snprintf(buf, sizeof buf, "order %d, %llu samples, chi2 %.2f < %.2f", order,
                  static_cast<unsigned long long>(samples), chi2, limit);
    add("sampler uniformity", chi2 < limit, buf);
  }
  return out;
}

}  // namespace aztec
