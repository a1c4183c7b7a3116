#pragma once

// Fields of arrows on A_{n+1}: one arrow per cell along the cell's node
// diagonal. Built from tilings of A_{n+1} (outward) or of A_n (inward).

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "aztec/errors.hpp"
#include "aztec/geometry.hpp"
#include "aztec/tiling.hpp"

namespace aztec {

enum class NodeClass { Attracting, Repelling, Transient };
enum class FieldOrientation { Outward, Inward, Mixed };

inline const char* to_string(NodeClass c) {
  switch (c) {
    case NodeClass::Attracting: return "attracting";
    case NodeClass::Repelling: return "repelling";
    case NodeClass::Transient: return "transient";
  }
  return "?";
}

inline const char* to_string(FieldOrientation o) {
  switch (o) {
    case FieldOrientation::Outward: return "outward";
    case FieldOrientation::Inward: return "inward";
    case FieldOrientation::Mixed: return "mixed";
  }
  return "?";
}

/// One bit per cell of A_{n+1} in canonical order. Bit 0 puts the head on
/// the first (southern) node corner of the cell, bit 1 on the second
/// (northern) one, so reversing every arrow is a bitwise complement.
class ArrowField {
 public:
  ArrowField(NodeContext ctx, std::vector<std::uint8_t> bits)
      : ctx_(ctx), region_(ctx.outer()), bits_(std::move(bits)) {
    if (bits_.size() != region_.size()) throw InvalidInput("arrow field size does not match A_{n+1}");
    for (auto& b : bits_) b = b ? 1 : 0;
  }

  /// All heads on the southern node corner.
  explicit ArrowField(NodeContext ctx) : ctx_(ctx), region_(ctx.outer()), bits_(region_.size(), 0) {}

  const NodeContext& ctx() const { return ctx_; }
  int inner_order() const { return ctx_.inner_order(); }
  const Region& region() const { return region_; }
  std::span<const std::uint8_t> bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }

  Point head_at(std::size_t i) const {
    auto [a, b] = node_corners_unchecked(region_.cells()[i], ctx_);
    return bits_[i] ? b : a;
  }
  Point tail_at(std::size_t i) const {
    auto [a, b] = node_corners_unchecked(region_.cells()[i], ctx_);
    return bits_[i] ? a : b;
  }
  Point head(Cell c) const { return head_at(checked_index(c)); }
  Point tail(Cell c) const { return tail_at(checked_index(c)); }

  void set_head(Cell c, Point head) {
    const std::size_t i = checked_index(c);
    auto [a, b] = node_corners_unchecked(c, ctx_);
    if (head == a) bits_[i] = 0;
    else if (head == b) bits_[i] = 1;
    else throw InvalidInput("arrow head must be a node corner of its cell");
  }

  void reverse(Cell c) {
    const std::size_t i = checked_index(c);
    bits_[i] ^= 1;
  }

  /// Compact identity of the field, usable as a hash-map key.
  std::string key() const { return {bits_.begin(), bits_.end()}; }

  friend bool operator==(const ArrowField& a, const ArrowField& b) {
    return a.ctx_ == b.ctx_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t checked_index(Cell c) const {
    auto i = region_.index_of(c);
    if (!i) throw GeometryError("cell lies outside A_{n+1}");
    return *i;
  }

  NodeContext ctx_;
  Region region_;
  std::vector<std::uint8_t> bits_;
};

namespace detail {

// The node corner of `c` that is also a corner of domino `d` (the other one
// lies on the side shared by the domino's two cells).
inline Point domino_head(const Domino& d, Cell c, const NodeContext& ctx) {
  auto [a, b] = node_corners_unchecked(c, ctx);
  auto on_shared_side = [&](Point p) {
    return d.horizontal() ? p.x == d.cell.x + 1 : p.y == d.cell.y + 1;
  };
  const bool a_shared = on_shared_side(a);
  const bool b_shared = on_shared_side(b);
  if (a_shared == b_shared) throw std::logic_error("domino head rule is not unique");
  return a_shared ? b : a;
}

inline void assign_domino_heads(ArrowField& f, const Tiling& t) {
  for (const Domino& d : t.dominoes)
    for (Cell c : d.cells()) f.set_head(c, domino_head(d, c, f.ctx()));
}

}  // namespace detail

/// Field of a tiling of A_{n+1}: each arrow points to the node corner of its
/// cell that is a corner of the covering domino.
inline ArrowField field_from_outer_tiling(const Tiling& t, const NodeContext& ctx) {
  if (!(t.region == ctx.outer())) throw InvalidInput("tiling is not of A_{n+1}");
  require_valid(t);
  ArrowField f(ctx);
  detail::assign_domino_heads(f, t);
  return f;
}

/// Field of a tiling of A_n: the domino rule inside A_n, and arrows in the
/// boundary cells of A_{n+1} pointing towards the center.
inline ArrowField field_from_inner_tiling(const Tiling& t, const NodeContext& ctx) {
  if (!(t.region == ctx.inner())) throw InvalidInput("tiling is not of A_n");
  require_valid(t);
  ArrowField f(ctx);
  for (Cell c : boundary_cells(ctx)) {
    auto [a, b] = node_corners_unchecked(c, ctx);
    f.set_head(c, taxicab(a) < taxicab(b) ? a : b);
  }
  detail::assign_domino_heads(f, t);
  return f;
}

inline bool is_interior_node(Point p, const NodeContext& ctx) {
  const int m = ctx.outer_order();
  return ctx.has_node_parity(p) && in_aztec({p.x - 1, p.y - 1}, m) && in_aztec({p.x, p.y - 1}, m) &&
         in_aztec({p.x - 1, p.y}, m) && in_aztec({p.x, p.y}, m);
}

/// Local arrow configuration around a node: whether each adjacent cell's
/// arrow has its head at the node.
struct LocalPattern {
  bool sw = false;
  bool se = false;
  bool nw = false;
  bool ne = false;
};

/// Attracting/repelling when all four heads/tails meet the node; transient
/// when both collinear pairs agree in direction. Anything else is illegal.
inline std::optional<NodeClass> classify_pattern(const LocalPattern& p) {
  if (p.sw && p.se && p.nw && p.ne) return NodeClass::Attracting;
  if (!p.sw && !p.se && !p.nw && !p.ne) return NodeClass::Repelling;
  // An arrow entering the node along a line continues only if its partner leaves.
  if (p.sw != p.ne && p.nw != p.se) return NodeClass::Transient;
  return std::nullopt;
}

inline LocalPattern local_pattern(const ArrowField& f, Point node) {
  return {f.head({node.x - 1, node.y - 1}) == node, f.head({node.x, node.y - 1}) == node,
          f.head({node.x - 1, node.y}) == node, f.head({node.x, node.y}) == node};
}

inline NodeClass classify(const ArrowField& f, Point node) {
  if (!is_interior_node(node, f.ctx()))
    throw NotInteriorNode("(" + std::to_string(node.x) + "," + std::to_string(node.y) + ") is not an interior node");
  if (auto c = classify_pattern(local_pattern(f, node))) return *c;
  throw InvalidPattern("illegal arrow pattern at (" + std::to_string(node.x) + "," + std::to_string(node.y) + ")");
}

/// Interior nodes where the arrow field condition fails; empty means valid.
inline std::vector<Point> validate_field(const ArrowField& f) {
  std::vector<Point> bad;
  for (Point p : interior_nodes(f.ctx()))
    if (!classify_pattern(local_pattern(f, p))) bad.push_back(p);
  return bad;
}

inline bool is_valid(const ArrowField& f) { return validate_field(f).empty(); }

inline void require_valid(const ArrowField& f) {
  auto bad = validate_field(f);
  if (!bad.empty())
    throw InvalidPattern("illegal arrow pattern at (" + std::to_string(bad.front().x) + "," +
                         std::to_string(bad.front().y) + ")");
}

/// A boundary arrow points outward iff its head is farther from the center
/// (in taxicab norm) than its tail.
inline FieldOrientation orientation(const ArrowField& f) {
  bool any_out = false;
  bool any_in = false;
  const int n = f.inner_order();
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!is_boundary_cell(f.region().cells()[i], n)) continue;
    if (taxicab(f.head_at(i)) > taxicab(f.tail_at(i))) any_out = true;
    else any_in = true;
  }
  if (any_out && !any_in) return FieldOrientation::Outward;
  if (any_in && !any_out) return FieldOrientation::Inward;
  return FieldOrientation::Mixed;
}

inline ArrowField flip(const ArrowField& f) {
  std::vector<std::uint8_t> bits(f.bits().begin(), f.bits().end());
  for (auto& b : bits) b ^= 1;
  return ArrowField(f.ctx(), std::move(bits));
}

struct FieldCensus {
  int repelling = 0;
  int attracting = 0;
  int transient = 0;

  friend bool operator==(const FieldCensus&, const FieldCensus&) = default;
};

inline FieldCensus census(const ArrowField& f) {
  FieldCensus c;
  for (Point p : interior_nodes(f.ctx())) {
    switch (classify(f, p)) {
      case NodeClass::Repelling: ++c.repelling; break;
      case NodeClass::Attracting: ++c.attracting; break;
      case NodeClass::Transient: ++c.transient; break;
    }
  }
  return c;
}

struct LineBalance {
  int offset = 0;  // the line is y - x = offset
  int arrows = 0;
  int bf_changes = 0;
  int fb_changes = 0;
};

/// Walks each south-west to north-east line of interior nodes and counts the
/// direction changes of the collinear arrows along it.
inline std::vector<LineBalance> line_balance(const ArrowField& f) {
  require_valid(f);
  if (orientation(f) != FieldOrientation::Outward) throw InvalidInput("line balance requires an outward field");
  std::map<int, std::vector<Point>> lines;
  for (Point p : interior_nodes(f.ctx())) lines[p.y - p.x].push_back(p);

  std::vector<LineBalance> out;
  for (auto& [offset, nodes] : lines) {
    std::sort(nodes.begin(), nodes.end(), [](Point a, Point b) { return a.x < b.x; });
    std::vector<Cell> cells{{nodes.front().x - 1, nodes.front().y - 1}};
    for (Point p : nodes) cells.push_back({p.x, p.y});
    LineBalance lb{offset, static_cast<int>(cells.size()), 0, 0};
    bool prev_forward = false;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const Point h = f.head(cells[i]);
      const bool forward = h == Point{cells[i].x + 1, cells[i].y + 1};
      if (i > 0 && !prev_forward && forward) ++lb.bf_changes;
      if (i > 0 && prev_forward && !forward) ++lb.fb_changes;
      prev_forward = forward;
    }
    out.push_back(lb);
  }
  return out;
}

}  // namespace aztec
