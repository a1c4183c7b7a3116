#pragma once

// Integer-lattice vocabulary: points, unit cells, Aztec diamond and rectangle
// regions, and the node structure of a nested pair A_n ⊂ A_{n+1}.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "aztec/errors.hpp"

namespace aztec {

struct Point {
  int x = 0;
  int y = 0;

  friend constexpr bool operator==(const Point&, const Point&) = default;
  // Row-major: by y, then x.
  friend constexpr std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

constexpr int taxicab(Point p) { return std::abs(p.x) + std::abs(p.y); }

/// The unit square [x, x+1] × [y, y+1], named by its lower-left corner.
struct Cell {
  int x = 0;
  int y = 0;

  constexpr Point corner() const { return {x, y}; }
  constexpr Cell right() const { return {x + 1, y}; }
  constexpr Cell up() const { return {x, y + 1}; }

  friend constexpr bool operator==(const Cell&, const Cell&) = default;
  friend constexpr std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

enum class RegionKind { AztecDiamond, Rectangle };

/// A finite cell set stored row by row. Both supported families have one
/// contiguous run of cells per row, which gives O(1) membership and indexing.
class Region {
 public:
  static Region aztec(int order) {
    if (order < 0) throw std::invalid_argument("aztec diamond order must be >= 0");
    Region r(RegionKind::AztecDiamond);
    r.order_ = order;
    for (int y = -order; y < order; ++y) {
      // |2x+1| <= 2n - |2y+1|  <=>  -(w+1)/2 <= x <= (w-1)/2 with w odd.
      const int w = 2 * order - std::abs(2 * y + 1);
      r.push_row(y, -(w + 1) / 2, (w - 1) / 2 + 1);
    }
    return r;
  }

  static Region rectangle(int width, int height) {
    if (width < 0 || height < 0) throw std::invalid_argument("rectangle dimensions must be >= 0");
    Region r(RegionKind::Rectangle);
    r.width_ = width;
    r.height_ = height;
    if (width > 0)
      for (int y = 0; y < height; ++y) r.push_row(y, 0, width);
    return r;
  }

  RegionKind kind() const { return kind_; }
  bool is_aztec() const { return kind_ == RegionKind::AztecDiamond; }
  int order() const { return order_; }
  int width() const { return width_; }
  int height() const { return height_; }

  /// Cells in canonical (row-major by (y, x)) order.
  std::span<const Cell> cells() const& { return cells_; }
  std::span<const Cell> cells() const&& = delete;
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  bool contains(Cell c) const { return index_of(c).has_value(); }

  std::optional<std::size_t> index_of(Cell c) const {
    if (rows_.empty() || c.y < rows_.front().y || c.y > rows_.back().y) return std::nullopt;
    const Row& row = rows_[static_cast<std::size_t>(c.y - rows_.front().y)];
    if (c.x < row.x_begin || c.x >= row.x_end) return std::nullopt;
    return row.offset + static_cast<std::size_t>(c.x - row.x_begin);
  }

  /// True iff the lattice point belongs to the closed point set of the region.
  bool contains_point(Point p) const {
    return contains({p.x - 1, p.y - 1}) || contains({p.x, p.y - 1}) || contains({p.x - 1, p.y}) ||
           contains({p.x, p.y});
  }

  // Bounding box of the cell corners: cells lie in [min_x, max_x) × [min_y, max_y).
  int min_x() const { return min_x_; }
  int max_x() const { return max_x_; }
  int min_y() const { return rows_.empty() ? 0 : rows_.front().y; }
  int max_y() const { return rows_.empty() ? 0 : rows_.back().y + 1; }

  friend bool operator==(const Region& a, const Region& b) {
    return a.kind_ == b.kind_ && a.order_ == b.order_ && a.width_ == b.width_ && a.height_ == b.height_;
  }

 private:
  struct Row {
    int y;
    int x_begin;
    int x_end;
    std::size_t offset;
  };

  explicit Region(RegionKind kind) : kind_(kind) {}

  void push_row(int y, int x_begin, int x_end) {
    rows_.push_back({y, x_begin, x_end, cells_.size()});
    for (int x = x_begin; x < x_end; ++x) cells_.push_back({x, y});
    if (rows_.size() == 1) {
      min_x_ = x_begin;
      max_x_ = x_end;
    } else {
      min_x_ = std::min(min_x_, x_begin);
      max_x_ = std::max(max_x_, x_end);
    }
  }

  RegionKind kind_;
  int order_ = 0;
  int width_ = 0;
  int height_ = 0;
  int min_x_ = 0;
  int max_x_ = 0;
  std::vector<Row> rows_;
  std::vector<Cell> cells_;
};

inline std::vector<Cell> region_cells(const Region& region) {
  return {region.cells().begin(), region.cells().end()};
}

/// Fixes the pair A_n ⊂ A_{n+1}; node parity depends on n.
class NodeContext {
 public:
  explicit NodeContext(int inner_order)
      : inner_order_(inner_order), inner_(Region::aztec(inner_order)), outer_(Region::aztec(inner_order + 1)) {}

  int inner_order() const { return inner_order_; }
  int outer_order() const { return inner_order_ + 1; }
  int parity() const { return inner_order_ % 2; }

  bool has_node_parity(Point p) const { return ((p.x + p.y) % 2 + 2) % 2 == parity(); }

  const Region& inner() const { return inner_; }
  const Region& outer() const { return outer_; }

  friend bool operator==(const NodeContext& a, const NodeContext& b) { return a.inner_order_ == b.inner_order_; }

 private:
  int inner_order_;
  Region inner_;
  Region outer_;
};

inline bool is_node(Point p, const NodeContext& ctx) {
  return ctx.has_node_parity(p) && ctx.outer().contains_point(p);
}

/// Nodes whose four adjacent cells all lie in A_{n+1}; sorted row-major.
inline std::vector<Point> interior_nodes(const NodeContext& ctx) {
  const Region outer = ctx.outer();
  std::vector<Point> nodes;
  for (int y = outer.min_y(); y <= outer.max_y(); ++y)
    for (int x = outer.min_x(); x <= outer.max_x(); ++x) {
      const Point p{x, y};
      if (!ctx.has_node_parity(p)) continue;
      if (outer.contains({x - 1, y - 1}) && outer.contains({x, y - 1}) && outer.contains({x - 1, y}) &&
          outer.contains({x, y}))
        nodes.push_back(p);
    }
  return nodes;
}

/// The two diagonal corners of a cell that are nodes. For a cell whose
/// lower-left corner is a node the pair is (SW, NE); otherwise (SE, NW).
inline std::pair<Point, Point> node_corners_unchecked(Cell c, const NodeContext& ctx) {
  if (ctx.has_node_parity(c.corner())) return {{c.x, c.y}, {c.x + 1, c.y + 1}};
  return {{c.x + 1, c.y}, {c.x, c.y + 1}};
}

inline std::pair<Point, Point> cell_node_corners(Cell c, const NodeContext& ctx) {
  if (!ctx.outer().contains(c)) throw GeometryError("cell lies outside A_{n+1}");
  return node_corners_unchecked(c, ctx);
}

inline bool in_aztec(Cell c, int order) {
  return std::abs(2 * c.x + 1) + std::abs(2 * c.y + 1) <= 2 * order;
}

inline bool is_boundary_cell(Cell c, int inner_order) {
  const int r = std::abs(2 * c.x + 1) + std::abs(2 * c.y + 1);
  return r == 2 * inner_order + 2;
}

/// Cells of A_{n+1} \ A_n in canonical order.
inline std::vector<Cell> boundary_cells(const NodeContext& ctx) {
  std::vector<Cell> out;
  for (Cell c : ctx.outer().cells())
    if (is_boundary_cell(c, ctx.inner_order())) out.push_back(c);
  return out;
}

}  // namespace aztec

template <>
struct std::hash<aztec::Point> {
  std::size_t operator()(const aztec::Point& p) const noexcept {
    return std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x)) << 32) |
                                      static_cast<std::uint32_t>(p.y));
  }
};
