#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace wavekit {

enum class Command { Riemann1D, Structure, Diffraction, Elliptic, Fvm1D, Verify };

std::string to_string(Command c);
/// Throws UsageError for unknown names.
Command command_from_string(const std::string& s);

struct ParamSpec {
  std::string name;
  bool required = false;
  double fallback = 0.0;  ///< used when not required and absent
  std::string help;
  bool angle = false;     ///< converted by --degrees
  bool integer = false;
};

/// Parameters accepted by a command, in display order.
const std::vector<ParamSpec>& param_specs(Command c);

struct RunConfig {
  Command command = Command::Structure;
  std::map<std::string, double> params;
  std::filesystem::path out_dir = "out";
  bool svg = false;
  std::uint64_t seed = 1;
  bool help = false;  ///< --help was requested; `help_text` holds the usage
  std::string help_text;

  double get(const std::string& name) const;
  int get_int(const std::string& name) const;
  bool has(const std::string& name) const { return params.count(name) != 0; }
};

/// Command line: `<command> [--param value ...] [--config file.json] [--degrees]
/// [--svg] [--out dir] [--seed n]`. A config file holds
/// {"command", "params", "out_dir", "svg", "seed"}; explicit flags win over it
/// and WAVEKIT_OUT (passed as `env_out`) wins over both for the output
/// directory. Angles are radians unless --degrees is given.
/// Throws UsageError listing every missing or invalid parameter.
RunConfig parse_config(int argc, const char* const* argv, const char* env_out = nullptr);
RunConfig parse_config(const std::vector<std::string>& args, const char* env_out = nullptr);

}  // namespace wavekit
