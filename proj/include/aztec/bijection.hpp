#pragma once

// Decomposition of a field into forced dominoes and free 2×2 squares, the
// 2^r tilings compatible with a field, and an exhaustive check of
// T_{n+1} = 2^{n+1} T_n through the field correspondence.

#include <cstdint>
#include <numeric>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "aztec/arrowfield.hpp"
#include "aztec/errors.hpp"
#include "aztec/geometry.hpp"
#include "aztec/tiling.hpp"

namespace aztec {

/// A unit lattice segment; endpoints stored in row-major order.
struct Edge {
  Point a;
  Point b;

  static Edge between(Point p, Point q) { return p < q ? Edge{p, q} : Edge{q, p}; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge& l, const Edge& r) {
    if (auto c = l.a <=> r.a; c != 0) return c;
    return l.b <=> r.b;
  }
};

/// For each cell, the two sides meeting at its arrow head.
inline std::set<Edge> bold_edges(const ArrowField& f) {
  require_valid(f);
  std::set<Edge> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Cell c = f.region().cells()[i];
    const Point h = f.head_at(i);
    const int ox = h.x == c.x ? c.x + 1 : c.x;  // the other x of the cell
    const int oy = h.y == c.y ? c.y + 1 : c.y;
    out.insert(Edge::between(h, {ox, h.y}));
    out.insert(Edge::between(h, {h.x, oy}));
  }
  return out;
}

struct Component {
  enum class Shape { Domino1x2, Square2x2 };

  Shape shape;
  Domino domino{};   // Domino1x2 only
  Point center{};    // Square2x2 only
  std::vector<Cell> cells;  // canonical order

  bool is_square() const { return shape == Shape::Square2x2; }
};

struct Decomposition {
  ArrowField field;
  Region carrier;
  std::vector<Component> components;  // ordered by first cell
  int free_choices = 0;               // number of 2×2 components
};

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Splits the carrier (A_{n+1} for an outward field, A_n for an inward one)
/// along bold edges. Every component must be a domino or a 2×2 square around
/// a repelling node; anything else means the field is corrupt.
inline Decomposition decompose(const ArrowField& f) {
  require_valid(f);
  const FieldOrientation o = orientation(f);
  if (o == FieldOrientation::Mixed) throw MixedOrientation("decomposition needs an outward or inward field");

  Decomposition d{f, o == FieldOrientation::Outward ? f.ctx().outer() : f.ctx().inner(), {}, 0};
  const Region& carrier = d.carrier;
  const auto cells = carrier.cells();

  auto bold_between = [&](Cell c1, Cell c2, Point p, Point q) {
    const Point h1 = f.head(c1);
    const Point h2 = f.head(c2);
    return h1 == p || h1 == q || h2 == p || h2 == q;
  };

  detail::DisjointSets sets(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell c = cells[i];
    if (auto j = carrier.index_of(c.right()); j && !bold_between(c, c.right(), {c.x + 1, c.y}, {c.x + 1, c.y + 1}))
      sets.unite(i, *j);
    if (auto j = carrier.index_of(c.up()); j && !bold_between(c, c.up(), {c.x, c.y + 1}, {c.x + 1, c.y + 1}))
      sets.unite(i, *j);
  }

  // Roots are the smallest index of each set, so visiting cells in order
  // yields components ordered by their first cell.
  std::unordered_map<std::size_t, std::size_t> slot;
  std::vector<std::vector<Cell>> groups;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto [it, fresh] = slot.try_emplace(sets.find(i), groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(cells[i]);
  }

  auto malformed = [](const std::vector<Cell>& g) {
    return MalformedComponent("component of " + std::to_string(g.size()) + " cells at (" +
                              std::to_string(g.front().x) + "," + std::to_string(g.front().y) + ")");
  };

  for (auto& g : groups) {
    Component comp{};
    if (g.size() == 2 && g[1] == g[0].right()) {
      comp.shape = Component::Shape::Domino1x2;
      comp.domino = {g[0], Orientation::Horizontal};
    } else if (g.size() == 2 && g[1] == g[0].up()) {
      comp.shape = Component::Shape::Domino1x2;
      comp.domino = {g[0], Orientation::Vertical};
    } else if (g.size() == 4 && g[1] == g[0].right() && g[2] == g[0].up() && g[3] == g[0].up().right()) {
      comp.shape = Component::Shape::Square2x2;
      comp.center = {g[0].x + 1, g[0].y + 1};
      if (!is_interior_node(comp.center, f.ctx()) ||
          classify_pattern(local_pattern(f, comp.center)) != NodeClass::Repelling)
        throw malformed(g);
      ++d.free_choices;
    } else {
      throw malformed(g);
    }
    comp.cells = std::move(g);
    d.components.push_back(std::move(comp));
  }
  return d;
}

/// Fills each 2×2 component with two horizontal (bit 0) or two vertical
/// (bit 1) dominoes; squares are taken in row-major order of their centers.
inline Tiling tilings_for_field(const Decomposition& d, std::span<const std::uint8_t> choice) {
  if (choice.size() != static_cast<std::size_t>(d.free_choices))
    throw ChoiceLengthMismatch("expected " + std::to_string(d.free_choices) + " choice bits, got " +
                               std::to_string(choice.size()));
  std::vector<Domino> dominoes;
  dominoes.reserve(d.carrier.size() / 2);
  std::size_t next_bit = 0;
  for (const Component& c : d.components) {
    if (!c.is_square()) {
      dominoes.push_back(c.domino);
      continue;
    }
    const Cell ll = c.cells.front();
    if (choice[next_bit++]) {
      dominoes.push_back({ll, Orientation::Vertical});
      dominoes.push_back({ll.right(), Orientation::Vertical});
    } else {
      dominoes.push_back({ll, Orientation::Horizontal});
      dominoes.push_back({ll.up(), Orientation::Horizontal});
    }
  }
  return Tiling(d.carrier, std::move(dominoes));
}

inline Tiling tilings_for_field(const ArrowField& f, std::span<const std::uint8_t> choice) {
  return tilings_for_field(decompose(f), choice);
}

/// Recovers the choice vector that produces `t` from the decomposition of its
/// own field, or nullopt if `t` does not fit the decomposition.
inline std::optional<std::vector<std::uint8_t>> choice_for_tiling(const Decomposition& d, const Tiling& t) {
  if (!(t.region == d.carrier)) return std::nullopt;
  std::vector<std::uint8_t> bits;
  for (const Component& c : d.components) {
    if (!c.is_square()) continue;
    const Domino probe{c.cells.front(), Orientation::Vertical};
    bits.push_back(std::binary_search(t.dominoes.begin(), t.dominoes.end(), probe) ? 1 : 0);
  }
  if (tilings_for_field(d, bits) != t) return std::nullopt;
  return bits;
}

inline int horizontal_component_count(const Decomposition& d) {
  return static_cast<int>(std::count_if(d.components.begin(), d.components.end(), [](const Component& c) {
    return !c.is_square() && c.domino.horizontal();
  }));
}

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RecursionReport {
  int n = 0;
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  }
};

inline constexpr int kRecursionGuard = 4;

/// Groups all tilings of A_{n+1} by outward field and checks, exhaustively,
/// every step of the counting argument for T_{n+1} = 2^{n+1} T_n.
inline RecursionReport verify_recursion(int n, int guard = kRecursionGuard) {
  if (n < 0 || n > guard) throw GuardExceeded("verify_recursion: n=" + std::to_string(n) + " outside [0, " +
                                              std::to_string(guard) + "]");
  const NodeContext ctx(n);
  struct Group {
    ArrowField field;
    std::uint64_t tilings = 0;
  };

  std::unordered_map<std::string, Group> outer_groups;
  std::vector<std::string> outer_order;
  std::uint64_t t_outer = 0;
  for_each_tiling(ctx.outer(), [&](const Tiling& t) {
    ++t_outer;
    ArrowField f = field_from_outer_tiling(t, ctx);
    auto key = f.key();
    auto [it, fresh] = outer_groups.try_emplace(key, Group{std::move(f), 0});
    if (fresh) outer_order.push_back(key);
    ++it->second.tilings;
  });

  std::unordered_map<std::string, std::uint64_t> inner_groups;
  std::uint64_t t_inner = 0;
  for_each_tiling(ctx.inner(), [&](const Tiling& t) {
    ++t_inner;
    ++inner_groups[field_from_inner_tiling(t, ctx).key()];
  });

  RecursionReport report{n, {}};
  auto fail_at = [](std::size_t index, const std::string& what) {
    return "field #" + std::to_string(index) + ": " + what;
  };

  CheckResult groups{"group sizes equal 2^r", true, ""};
  CheckResult balance{"r - a = n + 1 and line balance", true, ""};
  CheckResult shift{"r(F) = r(flip F) + n + 1", true, ""};
  CheckResult inner{"inner fields are the flips, 2^r(flip F) each", true, ""};
  std::uint64_t inner_sum = 0;
  std::size_t matched_inner = 0;

  for (std::size_t idx = 0; idx < outer_order.size(); ++idx) {
    const Group& g = outer_groups.at(outer_order[idx]);
    const FieldCensus c = census(g.field);
    const Decomposition d = decompose(g.field);
    if (g.tilings != (std::uint64_t{1} << c.repelling) || d.free_choices != c.repelling) {
      groups.pass = false;
      if (groups.detail.empty())
        groups.detail = fail_at(idx, std::to_string(g.tilings) + " tilings, r=" + std::to_string(c.repelling));
    }

    bool ok2 = c.repelling - c.attracting == n + 1;
    int bf = 0, fb = 0;
    for (const LineBalance& lb : line_balance(g.field)) {
      ok2 = ok2 && lb.bf_changes - lb.fb_changes == 1 && lb.arrows == n + 2;
      bf += lb.bf_changes;
      fb += lb.fb_changes;
    }
    ok2 = ok2 && bf == c.repelling && fb == c.attracting;
    if (!ok2) {
      balance.pass = false;
      if (balance.detail.empty())
        balance.detail = fail_at(idx, "r=" + std::to_string(c.repelling) + " a=" + std::to_string(c.attracting));
    }

    const ArrowField flipped = flip(g.field);
    const FieldCensus fc = census(flipped);
    if (c.repelling != fc.repelling + n + 1 || orientation(flipped) != FieldOrientation::Inward) {
      shift.pass = false;
      if (shift.detail.empty()) shift.detail = fail_at(idx, "r(flip F)=" + std::to_string(fc.repelling));
    }

    inner_sum += std::uint64_t{1} << fc.repelling;
    auto it = inner_groups.find(flipped.key());
    if (it == inner_groups.end() || it->second != (std::uint64_t{1} << fc.repelling)) {
      inner.pass = false;
      if (inner.detail.empty()) inner.detail = fail_at(idx, "flip F has no matching inner tilings");
    } else {
      ++matched_inner;
    }
  }
  if (matched_inner != inner_groups.size() || inner_sum != t_inner) {
    inner.pass = false;
    if (inner.detail.empty())
      inner.detail = "sum 2^r(flip F) = " + std::to_string(inner_sum) + ", T_n = " + std::to_string(t_inner);
  }

  const std::string fields = std::to_string(outer_order.size()) + " outward fields";
  if (groups.detail.empty()) groups.detail = fields;
  if (balance.detail.empty()) balance.detail = fields;
  if (shift.detail.empty()) shift.detail = fields;
  if (inner.detail.empty()) inner.detail = "sum = " + std::to_string(inner_sum) + " = T_" + std::to_string(n);

  CheckResult total{"T_{n+1} = 2^{n+1} T_n", t_outer == (std::uint64_t{1} << (n + 1)) * t_inner,
                    "T_" + std::to_string(n + 1) + " = " + std::to_string(t_outer) + ", T_" + std::to_string(n) +
                        " = " + std::to_string(t_inner)};

  report.checks = {groups, balance, shift, inner, total};
  return report;
}

inline std::string format_report(const RecursionReport& r) {
  std::ostringstream os;
  for (const CheckResult& c : r.checks)
    os << (c.pass ? "PASS" : "FAIL") << "  n=" << r.n << "  " << c.name << "  (" << c.detail << ")\n";
  return os.str();
}

}  // namespace aztec
