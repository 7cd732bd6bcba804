#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "wavekit/svg.hpp"

using namespace wavekit;
using Kind = SvgElement::Kind;

namespace {

bool finite(const Vec2& p) { return std::isfinite(p.xi) && std::isfinite(p.eta); }

void expect_inside_view(const SvgScene& s) {
  for (const auto& e : s.elements) {
    for (const auto& p : e.points) {
      ASSERT_TRUE(finite(p));
      EXPECT_GE(p.xi, s.view_min.xi);
      EXPECT_LE(p.xi, s.view_max.xi);
      EXPECT_GE(p.eta, s.view_min.eta);
      EXPECT_LE(p.eta, s.view_max.eta);
    }
    if (e.kind == Kind::Circle || e.kind == Kind::Arc) {
      EXPECT_GE(e.center.xi - e.radius, s.view_min.xi);
      EXPECT_LE(e.center.xi + e.radius, s.view_max.xi);
      EXPECT_GE(e.center.eta - e.radius, s.view_min.eta);
      EXPECT_LE(e.center.eta + e.radius, s.view_max.eta);
    }
  }
}

}  // namespace

TEST(RenderSvg, SubsonicElementCounts) {
  const SvgScene s = render_svg(build_subsonic({0.5, 2, 1, std::numbers::pi / 6, {}}));
  EXPECT_EQ(s.count(Kind::Circle, "sonic"), 3u);
  EXPECT_EQ(s.count(Kind::Segment, "wave"), 2u);
  EXPECT_EQ(s.count(Kind::Arc), 2u);
  EXPECT_EQ(s.count(Kind::Segment, "wall"), 2u);
  EXPECT_EQ(s.count(Kind::Polygon, "wedge"), 1u);
  expect_inside_view(s);
}

TEST(RenderSvg, CriticalLabelsP1AtOrigin) {
  const SvgScene s = render_svg(build_critical({1, 2, 1, 0.3, {}}));
  bool p1 = false, o = false;
  for (const auto& e : s.elements) {
    if (e.kind != Kind::Label || e.css_class != "point-label") continue;
    if (e.text == "P_1") p1 = norm(e.points[0]) < 1e-12;
    if (e.text == "O") o = norm(e.points[0]) < 1e-12;
  }
  EXPECT_TRUE(p1);
  EXPECT_TRUE(o);
}

TEST(RenderSvg, NoSolutionShowsWedgeAndInitialData) {
  const SvgScene s = render_svg(build_structure({3, 1, 1, 0.3, {}}));
  EXPECT_EQ(s.count(Kind::Polygon, "wedge"), 1u);
  EXPECT_EQ(s.count(Kind::Segment, "wall"), 2u);
  EXPECT_EQ(s.count(Kind::Segment, "wave"), 0u);
  EXPECT_EQ(s.count(Kind::Circle, "sonic"), 0u);
  EXPECT_EQ(s.count(Kind::Arc), 0u);
  std::vector<std::string> states;
  for (const auto& e : s.elements)
    if (e.css_class == "state") states.push_back(e.text);
  EXPECT_EQ(states, (std::vector<std::string>{"U_1", "U_0"}));
  expect_inside_view(s);
}

TEST(RenderSvg, SupersonicAndDiffraction) {
  const SvgScene a = render_svg(build_supersonic({1.5, 1, 1, 0.1, {}}));
  EXPECT_EQ(a.count(Kind::Segment, "wave"), 5u);
  EXPECT_EQ(a.count(Kind::Arc), 4u);
  expect_inside_view(a);
  const SvgScene b = render_svg(build_shock_diffraction(1.5, 1, 0.1));
  EXPECT_EQ(b.count(Kind::Arc), 3u);
  expect_inside_view(b);
}

TEST(ToSvg, DeterministicDocument) {
  const WaveStructure ws = build_supersonic({1.5, 1, 1, 0.1, {}});
  const std::string a = to_svg(render_svg(ws));
  const std::string b = to_svg(render_svg(build_supersonic({1.5, 1, 1, 0.1, {}})));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("<?xml", 0), 0u);
  EXPECT_NE(a.find("version=\"1.1\""), std::string::npos);
  EXPECT_NE(a.find("stroke-dasharray"), std::string::npos);
  EXPECT_EQ(a.find("nan"), std::string::npos);
  EXPECT_EQ(a.find("inf"), std::string::npos);
}
