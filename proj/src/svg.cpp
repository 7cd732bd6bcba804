#include "wavekit/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace wavekit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kScale = 100.0;

using Kind = SvgElement::Kind;

std::string num(double x) {
  if (std::abs(x) < 5e-4) x = 0.0;
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 3);
  std::string s(buf, res.ptr);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s == "-0" ? "0" : s;
}

// Screen coordinates: eta grows upwards.
std::string sx(double xi) { return num(kScale * xi); }
std::string sy(double eta) { return num(-kScale * eta); }

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

SvgElement segment(std::string cls, const Vec2& a, const Vec2& b) {
  SvgElement e;
  e.kind = Kind::Segment;
  e.css_class = std::move(cls);
  e.points = {a, b};
  return e;
}

SvgElement label(std::string cls, const Vec2& at, std::string text) {
  SvgElement e;
  e.kind = Kind::Label;
  e.css_class = std::move(cls);
  e.points = {at};
  e.text = std::move(text);
  return e;
}

double wall_extent(const WaveStructure& ws) {
  double H = 0.0;
  for (const auto& w : ws.walls) H = std::max({H, norm(w.start), norm(w.end)});
  if (H > 0.0) return H;
  const auto& in = ws.input;
  return 1.25 * (in.c0 + in.c1 + std::abs(in.u1));
}

}  // namespace

std::size_t SvgScene::count(SvgElement::Kind kind, std::string_view css_class) const {
  return static_cast<std::size_t>(std::count_if(elements.begin(), elements.end(), [&](const SvgElement& e) {
    return e.kind == kind && (css_class.empty() || e.css_class == css_class);
  }));
}

void SvgScene::fit(double margin) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  Vec2 lo{inf, inf}, hi{-inf, -inf};
  auto add = [&](const Vec2& p) {
    lo = {std::min(lo.xi, p.xi), std::min(lo.eta, p.eta)};
    hi = {std::max(hi.xi, p.xi), std::max(hi.eta, p.eta)};
  };
  for (const auto& e : elements) {
    switch (e.kind) {
      case Kind::Circle:
      case Kind::Arc:
        add(e.center - Vec2{e.radius, e.radius});
        add(e.center + Vec2{e.radius, e.radius});
        break;
      case Kind::Label:
        // Room for the glyphs to the upper right of the anchor.
        add(e.points.front());
        add(e.points.front() + Vec2{0.1 * static_cast<double>(e.text.size() + 1), 0.15});
        break;
      default:
        for (const auto& p : e.points) add(p);
    }
  }
  if (elements.empty()) lo = hi = {0.0, 0.0};
  const double pad = margin * std::max({hi.xi - lo.xi, hi.eta - lo.eta, 1.0});
  view_min = lo - Vec2{pad, pad};
  view_max = hi + Vec2{pad, pad};
}

SvgScene render_svg(const WaveStructure& ws) {
  SvgScene scene;
  auto& el = scene.elements;
  const double H = wall_extent(ws);
  const double th = ws.input.theta0;
  const Vec2 w = unit(-th);
  const Vec2 O{0.0, 0.0};

  SvgElement wedge;
  wedge.kind = Kind::Polygon;
  wedge.css_class = "wedge";
  const double bottom = H * w.eta - 0.15 * H;
  wedge.points = {{-H, 0.0}, O, H * w, {H * w.xi, bottom}, {-H, bottom}};
  el.push_back(wedge);
  el.push_back(segment("wall", {-H, 0.0}, O));
  el.push_back(segment("wall", O, H * w));

  for (const auto& c : ws.circles) {
    SvgElement e;
    e.kind = Kind::Circle;
    e.css_class = "sonic";
    e.center = c.center;
    e.radius = c.radius;
    e.text = c.label;
    el.push_back(e);
  }
  for (const auto& a : ws.arcs) {
    const SonicCircle* c = ws.find_circle(a.circle);
    if (!c) continue;
    SvgElement e;
    e.kind = Kind::Arc;
    e.css_class = "arc";
    e.center = c->center;
    e.radius = c->radius;
    e.start_angle = a.start_angle;
    e.end_angle = a.end_angle;
    e.text = a.name;
    el.push_back(e);
  }
  for (const auto& wv : ws.waves) {
    SvgElement e = segment("wave", wv.start, wv.end);
    e.text = wv.name;
    el.push_back(e);
  }
  for (const auto& wv : ws.waves) {
    const Vec2 mid = 0.5 * (wv.start + wv.end);
    el.push_back(label("wave-label", mid, to_string(wv.label)));
  }
  for (const auto& c : ws.circles) el.push_back(label("circle-label", c.center + Vec2{0.0, c.radius}, c.label));
  for (const auto& [name, p] : ws.points) {
    SvgElement dot;
    dot.kind = Kind::Circle;
    dot.css_class = "point";
    dot.center = p;
    dot.radius = 0.02;
    el.push_back(dot);
    el.push_back(label("point-label", p, name));
  }

  // Initial data far from the corner; other states beside their circle centers.
  el.push_back(label("state", {-0.8 * H, 0.5 * H}, "U_1"));
  el.push_back(label("state", {0.6 * H, 0.5 * H}, "U_0"));
  for (const auto& c : ws.circles) {
    if (c.state == "U_0" || c.state == "U_1") continue;
    el.push_back(label("state", c.center + Vec2{0.15 * c.radius, -0.25 * c.radius}, c.state));
  }

  scene.fit();
  return scene;
}

std::string to_svg(const SvgScene& scene) {
  std::ostringstream os;
  const double x0 = kScale * scene.view_min.xi;
  const double y0 = -kScale * scene.view_max.eta;
  const double wd = kScale * (scene.view_max.xi - scene.view_min.xi);
  const double ht = kScale * (scene.view_max.eta - scene.view_min.eta);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(wd) << "\" height=\"" << num(ht)
     << "\" viewBox=\"" << num(x0) << ' ' << num(y0) << ' ' << num(wd) << ' ' << num(ht) << "\">\n"
     << "<style>\n"
     << ".wedge{fill:#d0d0d0;stroke:none}\n"
     << ".wall{stroke:#000;stroke-width:2.5;fill:none}\n"
     << ".wave{stroke:#000;stroke-width:1.5;fill:none}\n"
     << ".sonic{stroke:#555;stroke-width:1;stroke-dasharray:6 4;fill:none}\n"
     << ".arc{stroke:#000;stroke-width:2;fill:none}\n"
     << ".point{fill:#000;stroke:none}\n"
     << "text{font-family:serif;font-size:14px}\n"
     << ".wave-label{fill:#a00}\n"
     << ".state{font-style:italic}\n"
     << "</style>\n";
  for (const auto& e : scene.elements) {
    const std::string cls = " class=\"" + escape(e.css_class) + "\"";
    switch (e.kind) {
      case Kind::Segment:
        os << "<line" << cls << " x1=\"" << sx(e.points[0].xi) << "\" y1=\"" << sy(e.points[0].eta) << "\" x2=\""
           << sx(e.points[1].xi) << "\" y2=\"" << sy(e.points[1].eta) << "\"/>\n";
        break;
      case Kind::Circle:
        os << "<circle" << cls << " cx=\"" << sx(e.center.xi) << "\" cy=\"" << sy(e.center.eta) << "\" r=\""
           << num(kScale * e.radius) << "\"/>\n";
        break;
      case Kind::Arc: {
        const Vec2 a = e.center + e.radius * unit(e.start_angle);
        const Vec2 b = e.center + e.radius * unit(e.end_angle);
        const int large = e.end_angle - e.start_angle > kPi ? 1 : 0;
        // Counter-clockwise with eta up is sweep-flag 0 once the axis is flipped.
        os << "<path" << cls << " d=\"M " << sx(a.xi) << ' ' << sy(a.eta) << " A " << num(kScale * e.radius) << ' '
           << num(kScale * e.radius) << " 0 " << large << " 0 " << sx(b.xi) << ' ' << sy(b.eta) << "\"/>\n";
        break;
      }
      case Kind::Label:
        os << "<text" << cls << " x=\"" << sx(e.points[0].xi + 0.03) << "\" y=\"" << sy(e.points[0].eta + 0.03)
           << "\">" << escape(e.text) << "</text>\n";
        break;
      case Kind::Polygon: {
        os << "<polygon" << cls << " points=\"";
        for (std::size_t i = 0; i < e.points.size(); ++i)
          os << (i ? " " : "") << sx(e.points[i].xi) << ',' << sy(e.points[i].eta);
        os << "\"/>\n";
        break;
      }
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace wavekit
