#pragma once

// Dominoes and tilings: validation, exhaustive enumeration, exact counting by
// broken-profile dynamic programming, and closed-form counting oracles.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "aztec/errors.hpp"
#include "aztec/geometry.hpp"

namespace aztec {

using BigCount = boost::multiprecision::cpp_int;

enum class Orientation : std::uint8_t { Horizontal, Vertical };

struct Domino {
  Cell cell;  // lower-left cell of the pair
  Orientation orientation = Orientation::Horizontal;

  bool horizontal() const { return orientation == Orientation::Horizontal; }
  Cell other() const { return horizontal() ? cell.right() : cell.up(); }
  std::array<Cell, 2> cells() const { return {cell, other()}; }

  friend bool operator==(const Domino&, const Domino&) = default;
  friend std::strong_ordering operator<=>(const Domino& a, const Domino& b) {
    if (auto c = a.cell <=> b.cell; c != 0) return c;
    return a.orientation <=> b.orientation;
  }
};

/// A set of dominoes over a region. Dominoes are kept sorted by (y, x).
struct Tiling {
  Region region;
  std::vector<Domino> dominoes;

  Tiling(Region r, std::vector<Domino> ds) : region(std::move(r)), dominoes(std::move(ds)) {
    std::sort(dominoes.begin(), dominoes.end());
  }
  explicit Tiling(Region r) : region(std::move(r)) {}

  std::size_t horizontal_count() const {
    return static_cast<std::size_t>(
        std::count_if(dominoes.begin(), dominoes.end(), [](const Domino& d) { return d.horizontal(); }));
  }

  friend bool operator==(const Tiling& a, const Tiling& b) {
    return a.region == b.region && a.dominoes == b.dominoes;
  }
};

struct Violation {
  enum class Kind { Uncovered, DoublyCovered, OutOfRegion, OddHorizontalCount };
  Kind kind;
  std::vector<Cell> cells;
};

inline const char* to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::Uncovered: return "uncovered";
    case Violation::Kind::DoublyCovered: return "doubly covered";
    case Violation::Kind::OutOfRegion: return "out of region";
    case Violation::Kind::OddHorizontalCount: return "odd horizontal count";
  }
  return "?";
}

/// Empty result means the tiling is valid.
inline std::vector<Violation> validate_tiling(const Tiling& t) {
  std::vector<Violation> out;
  std::vector<int> cover(t.region.size(), 0);
  Violation outside{Violation::Kind::OutOfRegion, {}};
  for (const Domino& d : t.dominoes)
    for (Cell c : d.cells()) {
      if (auto i = t.region.index_of(c)) ++cover[*i];
      else outside.cells.push_back(c);
    }
  Violation uncovered{Violation::Kind::Uncovered, {}};
  Violation doubled{Violation::Kind::DoublyCovered, {}};
  for (std::size_t i = 0; i < cover.size(); ++i) {
    if (cover[i] == 0) uncovered.cells.push_back(t.region.cells()[i]);
    if (cover[i] > 1) doubled.cells.push_back(t.region.cells()[i]);
  }
  for (Violation* v : {&uncovered, &doubled, &outside})
    if (!v->cells.empty()) out.push_back(std::move(*v));
  if (t.region.is_aztec() && t.horizontal_count() % 2 != 0)
    out.push_back({Violation::Kind::OddHorizontalCount, {}});
  return out;
}

inline bool is_valid(const Tiling& t) { return validate_tiling(t).empty(); }

inline void require_valid(const Tiling& t) {
  auto v = validate_tiling(t);
  if (v.empty()) return;
  std::string msg = "invalid tiling: ";
  msg += to_string(v.front().kind);
  if (!v.front().cells.empty())
    msg += " at (" + std::to_string(v.front().cells.front().x) + "," + std::to_string(v.front().cells.front().y) + ")";
  throw InvalidInput(msg);
}

/// Visits every tiling of `region` exactly once. Backtracks on the first
/// uncovered cell in canonical order, trying Horizontal before Vertical.
/// The visitor may return `false` to stop early.
template <class Visitor>
void for_each_tiling(const Region& region, Visitor&& visit) {
  if (region.size() % 2 != 0) return;
  const auto cells = region.cells();
  std::vector<std::uint8_t> used(cells.size(), 0);
  Tiling t(region);
  t.dominoes.reserve(cells.size() / 2);
  bool stop = false;

  auto emit = [&] {
    if constexpr (std::is_same_v<std::invoke_result_t<Visitor&, const Tiling&>, bool>) {
      if (!visit(static_cast<const Tiling&>(t))) stop = true;
    } else {
      visit(static_cast<const Tiling&>(t));
    }
  };

  auto recurse = [&](auto&& self, std::size_t from) -> void {
    while (from < cells.size() && used[from]) ++from;
    if (from == cells.size()) {
      emit();
      return;
    }
    const Cell c = cells[from];
    used[from] = 1;
    for (Orientation o : {Orientation::Horizontal, Orientation::Vertical}) {
      const Domino d{c, o};
      const auto j = region.index_of(d.other());
      if (!j || used[*j]) continue;
      used[*j] = 1;
      t.dominoes.push_back(d);
      self(self, from + 1);
      t.dominoes.pop_back();
      used[*j] = 0;
      if (stop) break;
    }
    used[from] = 0;
  };
  recurse(recurse, 0);
}

inline std::vector<Tiling> enumerate_tilings(const Region& region) {
  std::vector<Tiling> out;
  for_each_tiling(region, [&](const Tiling& t) { out.push_back(t); });
  return out;
}

/// Exact tiling count by a cell-by-cell sweep in canonical order. Bit j of the
/// profile marks column j of the frontier as already covered: the current row
/// for columns at or after the sweep position, the next row for those before.
/// A nonzero `max_states` bounds the number of live profiles; exceeding it
/// throws GuardExceeded. On A_n the profile count peaks near Catalan(n + 1).
inline BigCount count_tilings(const Region& region, std::size_t max_states = 0) {
  if (region.size() % 2 != 0) return 0;
  if (region.empty()) return 1;
  const int width = region.max_x() - region.min_x();
  if (width > 63) throw std::invalid_argument("region too wide for profile counting");
  if (max_states && region.is_aztec()) {
    // The profiles entering row 0 number Catalan(n + 1); refuse up front.
    double catalan = 1;
    for (int k = 0; k < region.order() + 1; ++k) catalan = catalan * 2 * (2 * k + 1) / (k + 2);
    if (catalan > static_cast<double>(max_states))
      throw GuardExceeded("profile count would exceed " + std::to_string(max_states) + " states");
  }

  std::unordered_map<std::uint64_t, BigCount> cur{{0, 1}};
  std::unordered_map<std::uint64_t, BigCount> next;
  for (int y = region.min_y(); y < region.max_y(); ++y) {
    for (int j = 0; j < width; ++j) {
      const Cell c{region.min_x() + j, y};
      const bool inside = region.contains(c);
      const bool up_ok = inside && region.contains(c.up());
      const bool right_ok = inside && j + 1 < width && region.contains(c.right());
      const std::uint64_t bit = std::uint64_t{1} << j;
      next.clear();
      next.reserve(cur.size() * 2);
      for (auto& [mask, ways] : cur) {
        if (mask & bit) {
          if (inside) next[mask & ~bit] += ways;
          continue;
        }
        if (!inside) {
          next[mask] += ways;
          continue;
        }
        if (up_ok) next[mask | bit] += ways;
        if (right_ok && !(mask & (bit << 1))) next[mask | (bit << 1)] += ways;
      }
      std::swap(cur, next);
      if (max_states && cur.size() > max_states)
        throw GuardExceeded("profile count exceeded " + std::to_string(max_states) + " states");
    }
  }
  auto it = cur.find(0);
  return it == cur.end() ? BigCount{0} : it->second;
}

/// 2^{n(n+1)/2}, the number of tilings of the Aztec diamond of order n.
inline BigCount aztec_closed_form(int n) {
  if (n < 0) throw std::invalid_argument("order must be >= 0");
  BigCount one = 1;
  return one << (static_cast<unsigned>(n) * static_cast<unsigned>(n + 1) / 2);
}

/// Product formula for the number of tilings of the n×n square, n even,
/// evaluated in double precision.
inline double kasteleyn_square(int n) {
  if (n < 0 || n % 2 != 0) throw std::invalid_argument("kasteleyn_square requires even n >= 0");
  double product = std::pow(2.0, n * n / 2.0);
  for (int j = 1; j <= n / 2; ++j)
    for (int k = 1; k <= n / 2; ++k) {
      const double cj = std::cos(j * std::numbers::pi / (n + 1));
      const double ck = std::cos(k * std::numbers::pi / (n + 1));
      product *= cj * cj + ck * ck;
    }
  return product;
}

}  // namespace aztec
