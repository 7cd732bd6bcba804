#include "wavekit/structure_json.hpp"

#include <stdexcept>

namespace wavekit {

Json to_json(const FlowState& s) { return Json{{"u", s.u}, {"v", s.v}, {"c", s.c}}; }

Json to_json(const Vec2& p) { return Json::array({p.xi, p.eta}); }

namespace {

Vec2 vec_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("point must be a [xi, eta] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

FlowState state_from(const Json& j) { return {j.at("u").get<double>(), j.at("v").get<double>(), j.at("c").get<double>()}; }

WaveFamily family_from(const std::string& s) {
  if (s == "One") return WaveFamily::One;
  if (s == "Two") return WaveFamily::Two;
  throw std::invalid_argument("unknown wave family '" + s + "'");
}

WaveKind kind_from(const std::string& s) {
  if (s == "Shock") return WaveKind::Shock;
  if (s == "Rarefaction") return WaveKind::Rarefaction;
  if (s == "Null") return WaveKind::Null;
  throw std::invalid_argument("unknown wave kind '" + s + "'");
}

}  // namespace

Json to_json(const WaveStructure& ws) {
  Json j;
  j["schema"] = kStructureSchema;
  j["input"] = Json{{"u1", ws.input.u1},       {"c0", ws.input.c0}, {"c1", ws.input.c1},
                    {"theta0", ws.input.theta0}, {"A", ws.input.k.A}, {"rho_star", ws.input.k.rho_star}};
  j["regime"] = to_string(ws.regime);
  j["verdict"] = to_string(ws.verdict);

  Json states = Json::object();
  for (const auto& [name, s] : ws.states) states[name] = to_json(s);
  j["states"] = states;

  Json points = Json::object();
  for (const auto& [name, p] : ws.points) points[name] = to_json(p);
  j["points"] = points;

  Json circles = Json::array();
  for (const auto& c : ws.circles)
    circles.push_back(Json{{"label", c.label}, {"state", c.state}, {"center", to_json(c.center)}, {"radius", c.radius}});
  j["circles"] = circles;

  Json waves = Json::array();
  for (const auto& w : ws.waves)
    waves.push_back(Json{{"name", w.name},
                         {"start", to_json(w.start)},
                         {"end", to_json(w.end)},
                         {"left", w.left_state},
                         {"right", w.right_state},
                         {"label", to_string(w.label)},
                         {"family", to_string(w.label.family)},
                         {"kind", to_string(w.label.kind)}});
  j["waves"] = waves;

  Json arcs = Json::array();
  for (const auto& a : ws.arcs)
    arcs.push_back(Json{{"name", a.name},
                        {"circle", a.circle},
                        {"start_angle", a.start_angle},
                        {"end_angle", a.end_angle},
                        {"start", a.start_point},
                        {"end", a.end_point}});
  j["arcs"] = arcs;

  Json walls = Json::array();
  for (const auto& w : ws.walls)
    walls.push_back(Json{{"name", w.name},
                         {"start", to_json(w.start)},
                         {"end", to_json(w.end)},
                         {"normal", to_json(w.normal)},
                         {"state", w.state}});
  j["walls"] = walls;

  Json params = Json::object();
  for (const auto& [name, v] : ws.parameters) params[name] = v;
  j["parameters"] = params;
  return j;
}

WaveStructure structure_from_json(const Json& j) {
  try {
    if (j.value("schema", std::string{}) != kStructureSchema)
      throw std::invalid_argument("not a wave-structure document (schema mismatch)");
    WaveStructure ws;
    const Json& in = j.at("input");
    ws.input.u1 = in.at("u1").get<double>();
    ws.input.c0 = in.at("c0").get<double>();
    ws.input.c1 = in.at("c1").get<double>();
    ws.input.theta0 = in.at("theta0").get<double>();
    ws.input.k.A = in.at("A").get<double>();
    ws.input.k.rho_star = in.at("rho_star").get<double>();
    ws.regime = regime_from_string(j.at("regime").get<std::string>());
    ws.verdict = verdict_from_string(j.at("verdict").get<std::string>());

    for (const auto& [name, s] : j.at("states").items()) ws.states.set(name, state_from(s));
    for (const auto& [name, p] : j.at("points").items()) ws.points.set(name, vec_from(p));
    for (const auto& c : j.at("circles"))
      ws.circles.push_back({c.at("label").get<std::string>(), c.at("state").get<std::string>(), vec_from(c.at("center")),
                            c.at("radius").get<double>()});
    for (const auto& w : j.at("waves")) {
      StraightWave sw;
      sw.name = w.at("name").get<std::string>();
      sw.start = vec_from(w.at("start"));
      sw.end = vec_from(w.at("end"));
      sw.left_state = w.at("left").get<std::string>();
      sw.right_state = w.at("right").get<std::string>();
      sw.label = {family_from(w.at("family").get<std::string>()), kind_from(w.at("kind").get<std::string>())};
      ws.waves.push_back(std::move(sw));
    }
    for (const auto& a : j.at("arcs"))
      ws.arcs.push_back({a.at("name").get<std::string>(), a.at("circle").get<std::string>(),
                         a.at("start_angle").get<double>(), a.at("end_angle").get<double>(),
                         a.at("start").get<std::string>(), a.at("end").get<std::string>()});
    for (const auto& w : j.at("walls"))
      ws.walls.push_back({w.at("name").get<std::string>(), vec_from(w.at("start")), vec_from(w.at("end")),
                          vec_from(w.at("normal")), w.at("state").get<std::string>()});
    for (const auto& [name, v] : j.at("parameters").items()) ws.parameters.set(name, v.get<double>());
    return ws;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed wave-structure document: ") + e.what());
  }
}

}  // namespace wavekit
