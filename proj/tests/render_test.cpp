#include <gtest/gtest.h>

#include <regex>
#include <set>
#include <vector>

#include "aztec/render.hpp"
#include "aztec/sampler.hpp"

namespace aztec {
namespace {

std::size_t count_of(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + needle.size())) ++n;
  return n;
}

// Minimal tag-balance check: every opened element is closed in order.
bool well_formed(const std::string& xml) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  while ((i = xml.find('<', i)) != std::string::npos) {
    const std::size_t j = xml.find('>', i);
    if (j == std::string::npos) return false;
    const std::string tag = xml.substr(i + 1, j - i - 1);
    i = j + 1;
    if (tag.empty()) return false;
    if (tag[0] == '?' || tag[0] == '!') continue;
    if (tag[0] == '/') {
      if (stack.empty() || stack.back() != tag.substr(1)) return false;
      stack.pop_back();
      continue;
    }
    if (tag.back() == '/') continue;
    stack.push_back(tag.substr(0, tag.find(' ')));
  }
  return stack.empty();
}

Tiling a1() {
  return Tiling(Region::aztec(1), {{{-1, -1}, Orientation::Horizontal}, {{-1, 0}, Orientation::Horizontal}});
}

TEST(Render, OneRectPerDomino) {
  const std::string svg = render_tiling(a1());
  EXPECT_EQ(count_of(svg, "<rect class=\"domino\""), 2u);
  EXPECT_TRUE(well_formed(svg));
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  const Tiling big = sample_uniform({6, 3});
  EXPECT_EQ(count_of(render_tiling(big), "<rect class=\"domino\""), big.dominoes.size());
}

TEST(Render, FourColourClassesAppearOnLargeDiamonds) {
  RenderOptions opts;
  opts.color_classes = true;
  std::set<std::string> fills;
  const std::regex fill_re("<rect class=\"domino\"[^>]*fill=\"(#[0-9a-f]{6})\"");
  for (std::uint64_t seed = 0; seed < 20 && fills.size() < 4; ++seed) {
    const std::string svg = render_tiling(sample_uniform({8, seed}), opts);
    for (std::sregex_iterator it(svg.begin(), svg.end(), fill_re), end; it != end; ++it) fills.insert((*it)[1]);
  }
  EXPECT_EQ(fills.size(), 4u);
}

TEST(Render, ByteDeterministic) {
  RenderOptions opts;
  opts.show_arrows = opts.show_nodes = opts.show_bold_edges = opts.color_classes = true;
  const Tiling t = sample_uniform({5, 17});
  EXPECT_EQ(render_tiling(t, opts), render_tiling(t, opts));
  const ArrowField f = field_from_outer_tiling(t, NodeContext(4));
  EXPECT_EQ(render_field(f, opts), render_field(f, opts));
}

TEST(Render, FieldDrawsOneArrowPerCell) {
  const ArrowField f = field_from_outer_tiling(a1(), NodeContext(0));
  const std::string svg = render_field(f);
  EXPECT_EQ(count_of(svg, "class=\"arrow\""), 4u);
  EXPECT_NE(svg.find("marker-end=\"url(#arrowhead)\""), std::string::npos);
  EXPECT_TRUE(well_formed(svg));

  const NodeContext ctx(3);
  const ArrowField g = field_from_outer_tiling(sample_uniform({4, 8}), ctx);
  RenderOptions opts;
  opts.show_bold_edges = true;
  opts.show_nodes = true;
  const std::string s2 = render_field(g, opts);
  EXPECT_EQ(count_of(s2, "class=\"arrow\""), ctx.outer().size());
  EXPECT_EQ(count_of(s2, "class=\"bold\""), bold_edges(g).size());
  EXPECT_TRUE(well_formed(s2));
}

TEST(Render, TilingOverlays) {
  RenderOptions opts;
  opts.show_arrows = true;
  opts.show_bold_edges = true;
  const Tiling t = sample_uniform({3, 2});
  const std::string svg = render_tiling(t, opts);
  EXPECT_EQ(count_of(svg, "class=\"arrow\""), t.region.size());
  EXPECT_EQ(count_of(svg, "class=\"bold\""), bold_edges(field_from_outer_tiling(t, NodeContext(2))).size());
  EXPECT_TRUE(well_formed(svg));
  // The empty diamond has no field to draw.
  EXPECT_EQ(count_of(render_tiling(Tiling(Region::aztec(0)), opts), "class=\"arrow\""), 0u);
}

TEST(Render, RejectsInvalidInput) {
  const Tiling broken(Region::aztec(1), {{{-1, -1}, Orientation::Horizontal}});
  EXPECT_THROW(render_tiling(broken), InvalidInput);
  ArrowField f = field_from_outer_tiling(a1(), NodeContext(0));
  f.reverse({0, 0});
  EXPECT_THROW(render_field(f), InvalidPattern);
  RenderOptions opts;
  opts.cell_px = 0;
  EXPECT_THROW(render_tiling(a1(), opts), std::invalid_argument);
}

TEST(Render, NoNegativeZero) {
  EXPECT_EQ(detail::fixed2(-0.001), "0.00");
  EXPECT_EQ(detail::fixed2(1.5), "1.50");
}

}  // namespace
}  // namespace aztec
