#include "wavekit/config.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>

#include "wavekit/errors.hpp"

namespace wavekit {

namespace {

constexpr Command kCommands[] = {Command::Riemann1D, Command::Structure, Command::Diffraction,
                                 Command::Elliptic,  Command::Fvm1D,     Command::Verify};

std::vector<ParamSpec> gas() {
  return {{"A", false, 1.0, "Chaplygin constant A"}, {"rho_star", false, 1.0, "reference density rho_*"}};
}

std::vector<ParamSpec> concat(std::vector<ParamSpec> a, const std::vector<ParamSpec>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<ParamSpec> wedge(bool required) {
  return {{"u1", required, 0.0, "velocity of the incoming state"},
          {"c0", required, 0.0, "sound speed of the state at rest"},
          {"c1", required, 0.0, "sound speed of the incoming state"},
          {"theta0", required, 0.0, "wedge half-angle", true}};
}

std::vector<ParamSpec> riemann() {
  return {{"ul", true, 0.0, "left velocity"},
          {"cl", true, 0.0, "left sound speed"},
          {"ur", true, 0.0, "right velocity"},
          {"cr", true, 0.0, "right sound speed"}};
}

double parse_number(const std::string& name, const std::string& text, std::vector<std::string>& errors) {
  double x = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, x);
  if (ec != std::errc() || ptr != last) {
    errors.push_back("--" + name + ": '" + text + "' is not a number");
    return 0.0;
  }
  if (!std::isfinite(x)) errors.push_back("--" + name + ": value must be finite");
  return x;
}

double json_number(const std::string& name, const nlohmann::json& v, std::vector<std::string>& errors) {
  if (v.is_number()) {
    const double x = v.get<double>();
    if (!std::isfinite(x)) errors.push_back(name + ": value must be finite");
    return x;
  }
  if (v.is_string()) return parse_number(name, v.get<std::string>(), errors);
  errors.push_back(name + ": expected a number");
  return 0.0;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : "\n  ") + s;
  return out;
}

std::string describe(Command c) {
  switch (c) {
    case Command::Riemann1D: return "exact 1-D Riemann solution";
    case Command::Structure: return "wave structure around the wedge corner";
    case Command::Diffraction: return "shock diffraction structure (c0 = u1 + c1)";
    case Command::Elliptic: return "solve the subsonic pseudo-potential problem";
    case Command::Fvm1D: return "Godunov finite-volume run against the exact solution";
    case Command::Verify: return "check jump, tangency and slip conditions";
  }
  return {};
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::Riemann1D: return "riemann1d";
    case Command::Structure: return "structure";
    case Command::Diffraction: return "diffraction";
    case Command::Elliptic: return "elliptic";
    case Command::Fvm1D: return "fvm1d";
    case Command::Verify: return "verify";
  }
  return "?";
}

Command command_from_string(const std::string& s) {
  for (Command c : kCommands)
    if (to_string(c) == s) return c;
  throw UsageError("unknown command '" + s + "' (expected riemann1d, structure, diffraction, elliptic, fvm1d or verify)");
}

const std::vector<ParamSpec>& param_specs(Command c) {
  static const std::map<Command, std::vector<ParamSpec>> table = {
      {Command::Riemann1D, concat(riemann(), gas())},
      {Command::Structure, concat(concat(wedge(true), gas()), {{"tol", false, 1e-9, "classification tolerance"}})},
      {Command::Diffraction,
       concat({{"u1", true, 0.0, "velocity of the incoming state"},
               {"c1", true, 0.0, "sound speed of the incoming state"},
               {"theta0", true, 0.0, "wedge half-angle", true}},
              gas())},
      {Command::Elliptic, concat(concat(wedge(true), gas()),
                                 {{"h", false, 0.05, "mesh size"},
                                  {"eps", false, 0.0, "sound-speed clip (0 selects 1e-3 c0)"},
                                  {"max_iter", false, 500, "Picard iteration limit", false, true},
                                  {"tol", false, 1e-8, "Picard increment tolerance"},
                                  {"delta", false, 1.0, "corner diagnostics threshold"},
                                  {"r_outer", false, 0.2, "corner diagnostics outer radius"},
                                  {"r_inner", false, 0.05, "corner diagnostics inner radius"}})},
      {Command::Fvm1D, concat(concat(riemann(), gas()),
                              {{"n", false, 400, "cell count", false, true},
                               {"cfl", false, 0.5, "Courant number"},
                               {"t_end", false, 0.2, "final time"},
                               {"x_min", false, -1.0, "left end"},
                               {"x_max", false, 1.0, "right end"}})},
      {Command::Verify, concat(concat(wedge(false), gas()),
                               {{"cases", false, 0, "random cases drawn instead of a single structure", false, true},
                                {"tol", false, 1e-9, "residual tolerance"}})},
  };
  return table.at(c);
}

double RunConfig::get(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end()) throw UsageError("missing parameter --" + name);
  return it->second;
}

int RunConfig::get_int(const std::string& name) const { return static_cast<int>(std::lround(get(name))); }

RunConfig parse_config(int argc, const char* const* argv, const char* env_out) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return parse_config(args, env_out);
}

RunConfig parse_config(const std::vector<std::string>& args, const char* env_out) {
  CLI::App app{"Self-similar Chaplygin gas wave structures around a convex wedge", "wavekit"};
  app.set_help_flag("--help", "print usage");
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::string config_path, out_dir, seed_text;
  bool degrees = false, svg = false;
  app.add_option("--config", config_path, "JSON configuration file");
  app.add_flag("--degrees", degrees, "angles given in degrees");
  app.add_flag("--svg", svg, "also write an SVG figure");
  app.add_option("--out", out_dir, "output directory (default out, overridden by WAVEKIT_OUT)");
  app.add_option("--seed", seed_text, "seed for randomized corpora");

  std::map<Command, CLI::App*> subs;
  std::map<Command, std::map<std::string, std::string>> raw;
  std::map<Command, std::map<std::string, CLI::Option*>> opts;
  for (Command c : kCommands) {
    CLI::App* sub = app.add_subcommand(to_string(c), describe(c));
    subs[c] = sub;
    for (const auto& p : param_specs(c)) {
      std::string help = p.help;
      if (!p.required) {
        std::ostringstream os;
        os << help << " (default " << p.fallback << ")";
        help = os.str();
      }
      opts[c][p.name] = sub->add_option("--" + p.name, raw[c][p.name], help);
    }
  }

  if (!args.empty() && !args.front().empty() && args.front()[0] != '-') command_from_string(args.front());

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    RunConfig help;
    help.help = true;
    help.help_text = app.help();
    for (auto& [c, sub] : subs)
      if (sub->parsed()) help.help_text = sub->help();
    return help;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  std::vector<std::string> errors;
  RunConfig cfg;
  nlohmann::json file;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw UsageError("cannot open config file '" + config_path + "'");
    try {
      file = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("invalid config file '" + config_path + "': " + e.what());
    }
    if (!file.is_object()) throw UsageError("config file must hold a JSON object");
  }

  std::optional<Command> command;
  for (auto& [c, sub] : subs)
    if (sub->parsed()) command = c;
  if (!command && file.contains("command")) {
    if (!file["command"].is_string()) throw UsageError("config: command must be a string");
    command = command_from_string(file["command"].get<std::string>());
  }
  if (!command) throw UsageError("missing command (riemann1d, structure, diffraction, elliptic, fvm1d or verify)");
  cfg.command = *command;

  if (file.contains("params")) {
    const auto& p = file["params"];
    if (!p.is_object()) throw UsageError("config: params must be an object");
    for (auto it = p.begin(); it != p.end(); ++it) {
      const auto& specs = param_specs(cfg.command);
      const bool known = std::any_of(specs.begin(), specs.end(), [&](const ParamSpec& s) { return s.name == it.key(); });
      if (!known) {
        errors.push_back("config: unknown parameter '" + it.key() + "' for " + to_string(cfg.command));
        continue;
      }
      cfg.params[it.key()] = json_number("config: " + it.key(), it.value(), errors);
    }
  }
  if (file.contains("out_dir")) cfg.out_dir = file["out_dir"].get<std::string>();
  if (file.contains("svg")) cfg.svg = file["svg"].get<bool>();
  if (file.contains("seed")) cfg.seed = file["seed"].get<std::uint64_t>();
  if (file.contains("degrees")) degrees = degrees || file["degrees"].get<bool>();

  for (const auto& p : param_specs(cfg.command))
    if (opts[cfg.command][p.name]->count() > 0)
      cfg.params[p.name] = parse_number(p.name, raw[cfg.command][p.name], errors);

  std::vector<std::string> missing;
  std::set<std::string> provided;
  for (const auto& [name, v] : cfg.params) provided.insert(name);
  for (const auto& p : param_specs(cfg.command)) {
    if (cfg.params.count(p.name)) {
      double& v = cfg.params[p.name];
      if (p.angle && degrees) v *= std::numbers::pi / 180.0;
      if (p.integer && v != std::floor(v)) errors.push_back("--" + p.name + ": expected an integer");
    } else if (p.required) {
      missing.push_back("--" + p.name);
    } else {
      cfg.params[p.name] = p.fallback;
    }
  }
  // verify takes either a single structure or a random corpus.
  if (cfg.command == Command::Verify && cfg.get("cases") <= 0.0)
    for (const char* name : {"u1", "c0", "c1", "theta0"})
      if (!provided.count(name)) missing.push_back(std::string("--") + name);
  if (!missing.empty()) {
    std::string m = "missing parameter(s) for " + to_string(cfg.command) + ":";
    for (const auto& s : missing) m += " " + s;
    errors.insert(errors.begin(), m);
  }

  if (!out_dir.empty()) cfg.out_dir = out_dir;
  if (env_out && *env_out) cfg.out_dir = env_out;
  if (!seed_text.empty()) {
    auto [ptr, ec] = std::from_chars(seed_text.data(), seed_text.data() + seed_text.size(), cfg.seed);
    if (ec != std::errc() || ptr != seed_text.data() + seed_text.size())
      errors.push_back("--seed: '" + seed_text + "' is not a non-negative integer");
  }
  cfg.svg = cfg.svg || svg;

  if (!errors.empty()) throw UsageError(join(errors));
  return cfg;
}

}  // namespace wavekit
