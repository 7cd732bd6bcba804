#pragma once

#include <string>
#include <vector>

#include "wavekit/structure.hpp"

namespace wavekit {

struct SvgElement {
  enum class Kind { Segment, Circle, Arc, Label, Polygon };

  Kind kind = Kind::Segment;
  std::string css_class;
  std::vector<Vec2> points;  ///< segment ends, polygon vertices or the label anchor
  Vec2 center;
  double radius = 0.0;
  double start_angle = 0.0;  ///< arcs run counter-clockwise in the (xi, eta) plane
  double end_angle = 0.0;
  std::string text;
};

struct SvgScene {
  std::vector<SvgElement> elements;
  Vec2 view_min;
  Vec2 view_max;

  std::size_t count(SvgElement::Kind kind, std::string_view css_class = {}) const;
  /// Recomputes the view box so that it covers every element plus a margin.
  void fit(double margin = 0.1);
};

/// Walls (two segments and a shaded wedge), waves, dashed sonic circles,
/// solid arcs and labelled points. A structure without waves still gets the
/// wedge and its initial-data labels.
SvgScene render_svg(const WaveStructure& ws);

/// SVG 1.1 document, 100 px per unit with eta pointing up. Output depends only
/// on the scene.
std::string to_svg(const SvgScene& scene);

}  // namespace wavekit
