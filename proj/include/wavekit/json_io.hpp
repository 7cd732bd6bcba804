#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

namespace wavekit {

using Json = nlohmann::ordered_json;

/// Pretty JSON text with every floating-point number written at 17 significant
/// digits (locale-independent). Arrays of scalars stay on one line.
std::string dump_json(const Json& j, int indent = 2);

/// Shortest-form 17-significant-digit rendering of a double.
std::string format_double(double x);

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace wavekit
