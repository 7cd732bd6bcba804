#include <gtest/gtest.h>

#include <filesystem>

#include "wavekit/json_io.hpp"
#include "wavekit/structure_json.hpp"

using namespace wavekit;

namespace {

void expect_same(const WaveStructure& a, const WaveStructure& b) {
  EXPECT_EQ(a.regime, b.regime);
  EXPECT_EQ(a.verdict, b.verdict);
  EXPECT_EQ(a.input.u1, b.input.u1);
  EXPECT_EQ(a.input.theta0, b.input.theta0);
  ASSERT_EQ(a.states.size(), b.states.size());
  for (const auto& [name, s] : a.states) EXPECT_EQ(s, b.state(name)) << name;
  ASSERT_EQ(a.points.size(), b.points.size());
  for (const auto& [name, p] : a.points) EXPECT_EQ(p, b.point(name)) << name;
  ASSERT_EQ(a.circles.size(), b.circles.size());
  for (std::size_t i = 0; i < a.circles.size(); ++i) {
    EXPECT_EQ(a.circles[i].center, b.circles[i].center);
    EXPECT_EQ(a.circles[i].radius, b.circles[i].radius);
  }
  ASSERT_EQ(a.waves.size(), b.waves.size());
  for (std::size_t i = 0; i < a.waves.size(); ++i) {
    EXPECT_EQ(a.waves[i].name, b.waves[i].name);
    EXPECT_EQ(a.waves[i].start, b.waves[i].start);
    EXPECT_EQ(a.waves[i].end, b.waves[i].end);
    EXPECT_EQ(a.waves[i].label, b.waves[i].label);
  }
  ASSERT_EQ(a.arcs.size(), b.arcs.size());
  for (std::size_t i = 0; i < a.arcs.size(); ++i) {
    EXPECT_EQ(a.arcs[i].start_angle, b.arcs[i].start_angle);
    EXPECT_EQ(a.arcs[i].end_angle, b.arcs[i].end_angle);
  }
  ASSERT_EQ(a.walls.size(), b.walls.size());
  ASSERT_EQ(a.parameters.size(), b.parameters.size());
  for (const auto& [name, v] : a.parameters) EXPECT_EQ(v, b.parameters.at(name)) << name;
}

}  // namespace

TEST(FormatDouble, SeventeenDigitsRoundTrip) {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 1.0, 0.0}) {
    const std::string s = format_double(x);
    EXPECT_EQ(std::stod(s), x) << s;
  }
  EXPECT_EQ(format_double(2.0), "2.0");
}

TEST(StructureJson, TopLevelKeys) {
  const Json j = to_json(build_structure({0.5, 2, 1, 0.5, {}}));
  for (const char* key : {"schema", "regime", "verdict", "states", "points", "circles", "waves", "arcs"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["schema"], kStructureSchema);
  EXPECT_EQ(j["points"]["P_2"].size(), 2u);
}

TEST(StructureJson, RoundTripIsExact) {
  for (const WaveStructure& ws : {build_structure({0.5, 2, 1, 0.5, {}}), build_structure({1.5, 1, 1, 0.1, {}}),
                                  build_structure({1, 2, 1, 0.3, {}}), build_structure({3, 1, 1, 0.3, {}}),
                                  build_shock_diffraction(1.5, 1, 0.1)}) {
    const std::string text = dump_json(to_json(ws));
    const WaveStructure back = structure_from_json(Json::parse(text));
    expect_same(ws, back);
    EXPECT_EQ(dump_json(to_json(back)), text);
  }
}

TEST(StructureJson, RejectsForeignDocuments) {
  EXPECT_THROW(structure_from_json(Json::parse(R"({"schema": "other"})")), std::invalid_argument);
  Json j = to_json(build_structure({0.5, 2, 1, 0.5, {}}));
  j["regime"] = "Sideways";
  EXPECT_THROW(structure_from_json(j), std::invalid_argument);
  j = to_json(build_structure({0.5, 2, 1, 0.5, {}}));
  j["points"]["P_1"] = "here";
  EXPECT_THROW(structure_from_json(j), std::invalid_argument);
}

TEST(TextFiles, WriteCreatesDirectories) {
  const auto dir = std::filesystem::temp_directory_path() / "wavekit_json_test" / "nested";
  std::filesystem::remove_all(dir.parent_path());
  write_text_file(dir / "a.json", "{}\n");
  EXPECT_EQ(read_text_file(dir / "a.json"), "{}\n");
  std::filesystem::remove_all(dir.parent_path());
}
