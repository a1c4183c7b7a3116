#include <gtest/gtest.h>

#include <set>

#include "aztec/bijection.hpp"
#include "aztec/json_io.hpp"
#include "aztec/sampler.hpp"
#include "oracles.hpp"

namespace aztec {
namespace {

ArrowField outward_a1() {
  const Tiling t(Region::aztec(1), {{{-1, -1}, Orientation::Horizontal}, {{-1, 0}, Orientation::Horizontal}});
  return field_from_outer_tiling(t, NodeContext(0));
}

ArrowField inward_a0() { return field_from_inner_tiling(Tiling(Region::aztec(0)), NodeContext(0)); }

std::set<Edge> outline(const Region& r) {
  std::set<Edge> out;
  for (Cell c : r.cells()) {
    if (!r.contains({c.x, c.y - 1})) out.insert(Edge::between({c.x, c.y}, {c.x + 1, c.y}));
    if (!r.contains({c.x, c.y + 1})) out.insert(Edge::between({c.x, c.y + 1}, {c.x + 1, c.y + 1}));
    if (!r.contains({c.x - 1, c.y})) out.insert(Edge::between({c.x, c.y}, {c.x, c.y + 1}));
    if (!r.contains({c.x + 1, c.y})) out.insert(Edge::between({c.x + 1, c.y}, {c.x + 1, c.y + 1}));
  }
  return out;
}

std::vector<std::uint8_t> bits_of(std::uint64_t m, int k) {
  std::vector<std::uint8_t> v(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = (m >> i) & 1;
  return v;
}

TEST(BoldEdges, OutwardA1IsItsOutline) {
  const auto b = bold_edges(outward_a1());
  EXPECT_EQ(b.size(), 8u);
  EXPECT_EQ(b, outline(Region::aztec(1)));
}

TEST(BoldEdges, InwardFromEmptyA0) {
  const std::set<Edge> expected{Edge::between({0, 0}, {1, 0}), Edge::between({0, 0}, {-1, 0}),
                                Edge::between({0, 0}, {0, 1}), Edge::between({0, 0}, {0, -1})};
  EXPECT_EQ(bold_edges(inward_a0()), expected);
}

TEST(BoldEdges, InwardFieldsContainInnerBoundary) {
  for (int n = 1; n <= 3; ++n) {
    const NodeContext ctx(n);
    const auto boundary = outline(ctx.inner());
    for_each_tiling(ctx.inner(), [&](const Tiling& t) {
      const auto b = bold_edges(field_from_inner_tiling(t, ctx));
      for (const Edge& e : boundary) EXPECT_TRUE(b.count(e));
    });
  }
}

TEST(Decompose, Examples) {
  const Decomposition d = decompose(outward_a1());
  ASSERT_EQ(d.components.size(), 1u);
  EXPECT_TRUE(d.components[0].is_square());
  EXPECT_EQ(d.components[0].center, (Point{0, 0}));
  EXPECT_EQ(d.free_choices, 1);
  EXPECT_EQ(horizontal_component_count(d), 0);

  const Decomposition e = decompose(inward_a0());
  EXPECT_TRUE(e.carrier.empty());
  EXPECT_TRUE(e.components.empty());
  EXPECT_EQ(e.free_choices, 0);
}

TEST(Decompose, RejectsMixedAndInvalidFields) {
  const NodeContext ctx(1);
  bool found_mixed = false;
  oracle::for_each_assignment(ctx, [&](const ArrowField& f) {
    if (found_mixed || !is_valid(f) || orientation(f) != FieldOrientation::Mixed) return;
    found_mixed = true;
    EXPECT_THROW(decompose(f), MixedOrientation);
  });
  EXPECT_TRUE(found_mixed);
  ArrowField bad = outward_a1();
  bad.reverse({0, 0});
  EXPECT_THROW(decompose(bad), InvalidPattern);
}

// Every pattern-valid outward or inward field on A_2 decomposes; squares sit
// on repelling nodes and their number is r.
TEST(Decompose, AllOrientedFieldsOnA2) {
  int seen = 0;
  oracle::for_each_assignment(NodeContext(1), [&](const ArrowField& f) {
    if (!is_valid(f) || orientation(f) == FieldOrientation::Mixed) return;
    ++seen;
    const Decomposition d = decompose(f);
    EXPECT_EQ(d.free_choices, census(f).repelling);
  });
  EXPECT_GT(seen, 0);
}

TEST(Decompose, PartitionsCarrier) {
  for (int n = 0; n <= 3; ++n) {
    const NodeContext ctx(n);
    for_each_tiling(ctx.outer(), [&](const Tiling& t) {
      const ArrowField f = field_from_outer_tiling(t, ctx);
      for (const ArrowField& g : {f, flip(f)}) {
        const Decomposition d = decompose(g);
        std::multiset<Cell> covered;
        for (const Component& c : d.components) {
          covered.insert(c.cells.begin(), c.cells.end());
          if (c.is_square()) { EXPECT_EQ(classify(g, c.center), NodeClass::Repelling); }
        }
        EXPECT_EQ(std::vector<Cell>(covered.begin(), covered.end()), region_cells(d.carrier));
        EXPECT_EQ(d.free_choices, census(g).repelling);
      }
    });
  }
}

TEST(TilingsForField, A1Choices) {
  const ArrowField f = outward_a1();
  const std::vector<std::uint8_t> h{0}, v{1};
  EXPECT_EQ(tilings_for_field(f, h),
            Tiling(Region::aztec(1), {{{-1, -1}, Orientation::Horizontal}, {{-1, 0}, Orientation::Horizontal}}));
  EXPECT_EQ(tilings_for_field(f, v),
            Tiling(Region::aztec(1), {{{-1, -1}, Orientation::Vertical}, {{0, -1}, Orientation::Vertical}}));
  EXPECT_THROW(tilings_for_field(f, std::vector<std::uint8_t>{}), ChoiceLengthMismatch);
  EXPECT_THROW(tilings_for_field(f, std::vector<std::uint8_t>{0, 1}), ChoiceLengthMismatch);
}

TEST(TilingsForField, ExhaustiveRoundTripSmallOrders) {
  for (int n = 0; n <= 2; ++n) {
    const NodeContext ctx(n);
    std::set<std::string> fields;
    for_each_tiling(ctx.outer(), [&](const Tiling& t) { fields.insert(field_from_outer_tiling(t, ctx).key()); });
    for (const auto& key : fields) {
      const ArrowField f(ctx, std::vector<std::uint8_t>(key.begin(), key.end()));
      for (const ArrowField& g : {f, flip(f)}) {
        const Decomposition d = decompose(g);
        std::set<std::vector<Domino>> distinct;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << d.free_choices); ++m) {
          const Tiling t = tilings_for_field(d, bits_of(m, d.free_choices));
          EXPECT_TRUE(is_valid(t));
          const ArrowField back = orientation(g) == FieldOrientation::Outward ? field_from_outer_tiling(t, ctx)
                                                                               : field_from_inner_tiling(t, ctx);
          EXPECT_EQ(back, g);
          distinct.insert(t.dominoes);
        }
        EXPECT_EQ(distinct.size(), std::size_t{1} << d.free_choices);
      }
    }
  }
}

TEST(TilingsForField, RandomizedRoundTripLargerOrders) {
  for (int n : {3, 4}) {
    const NodeContext ctx(n);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const Tiling t = sample_uniform({n + 1, seed});
      const ArrowField f = field_from_outer_tiling(t, ctx);
      const Decomposition d = decompose(f);
      RandomSource rng(seed * 7919);
      const Tiling u = tilings_for_field(d, rng.bits(static_cast<std::size_t>(d.free_choices)));
      EXPECT_EQ(field_from_outer_tiling(u, ctx), f);
    }
  }
}

TEST(TilingsForField, EveryTilingRecoveredFromItsField) {
  for (int n = 0; n <= 3; ++n) {
    const NodeContext ctx(n);
    for_each_tiling(ctx.outer(), [&](const Tiling& t) {
      const Decomposition d = decompose(field_from_outer_tiling(t, ctx));
      const auto choice = choice_for_tiling(d, t);
      ASSERT_TRUE(choice.has_value());
      EXPECT_EQ(tilings_for_field(d, *choice), t);
    });
  }
}

TEST(HorizontalComponents, FlipInvariant) {
  for (int n = 0; n <= 3; ++n) {
    const NodeContext ctx(n);
    std::set<std::string> seen;
    for_each_tiling(ctx.outer(), [&](const Tiling& t) {
      const ArrowField f = field_from_outer_tiling(t, ctx);
      if (!seen.insert(f.key()).second) return;
      EXPECT_EQ(horizontal_component_count(decompose(f)), horizontal_component_count(decompose(flip(f))));
    });
  }
}

TEST(VerifyRecursion, PassesForSmallOrders) {
  for (int n = 0; n <= 3; ++n) {
    const RecursionReport r = verify_recursion(n);
    EXPECT_TRUE(r.passed()) << format_report(r);
    EXPECT_EQ(r.checks.size(), 5u);
  }
  const auto r1 = verify_recursion(1);
  EXPECT_NE(r1.checks.back().detail.find("T_2 = 8"), std::string::npos) << r1.checks.back().detail;
  const auto r3 = verify_recursion(3);
  EXPECT_NE(r3.checks.back().detail.find("T_4 = 1024"), std::string::npos);
}

TEST(VerifyRecursion, Guard) {
  EXPECT_THROW(verify_recursion(5), GuardExceeded);
  EXPECT_THROW(verify_recursion(-1), GuardExceeded);
}

TEST(VerifyRecursion, JsonShape) {
  const Json j = report_to_json(verify_recursion(1));
  EXPECT_EQ(j.at("n"), 1);
  ASSERT_EQ(j.at("checks").size(), 5u);
  for (const auto& c : j.at("checks")) {
    EXPECT_TRUE(c.at("pass").get<bool>());
    EXPECT_EQ(c.begin().key(), "name");
  }
}

TEST(OutwardFields, CountAtOrderOne) {
  // Data only: the number of distinct outward fields on A_2.
  std::set<std::string> fields;
  for_each_tiling(Region::aztec(2), [&](const Tiling& t) { fields.insert(field_from_outer_tiling(t, NodeContext(1)).key()); });
  std::uint64_t total = 0;
  for (const auto& k : fields) {
    const ArrowField f(NodeContext(1), std::vector<std::uint8_t>(k.begin(), k.end()));
    total += std::uint64_t{1} << census(f).repelling;
  }
  EXPECT_EQ(total, 8u);
}

}  // namespace
}  // namespace aztec
