#pragma once

#include "wavekit/json_io.hpp"
#include "wavekit/structure.hpp"

namespace wavekit {

inline constexpr const char* kStructureSchema = "wavekit.structure/1";

Json to_json(const WaveStructure& ws);
/// Inverse of to_json; throws std::invalid_argument on malformed documents.
WaveStructure structure_from_json(const Json& j);

Json to_json(const FlowState& s);
Json to_json(const Vec2& p);

}  // namespace wavekit
