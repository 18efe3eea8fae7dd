#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "grunsky/json_io.hpp"
#include "grunsky/rng.hpp"

using namespace grunsky;

TEST_CASE("floating-point values are written with 17 significant digits") {
  Json j;
  j["value"] = 2.0 * std::sqrt(2.0) / 3.0;
  j["list"] = Json::array({0.5, 1.0 / 3.0});
  const std::string text = dump_json_17(j);
  CHECK(text.find("0.94280904158206347") != std::string::npos);
  CHECK(text.find("0.33333333333333331") != std::string::npos);
  CHECK(text.find("0.5") != std::string::npos);

  // Round trip through a parse preserves the exact doubles.
  const Json back = Json::parse(text);
  CHECK(back["value"].get<double>() == j["value"].get<double>());
  CHECK(back["list"][1].get<double>() == j["list"][1].get<double>());
}

TEST_CASE("non-finite numbers serialize as null") {
  Json j;
  j["inf"] = std::numeric_limits<double>::infinity();
  const std::string text = dump_json_17(j);
  CHECK(text.find("null") != std::string::npos);
}

TEST_CASE("laurent map round trip is coefficient-exact") {
  Rng rng(77);
  LaurentMap map;
  map.b0 = rng.complex_normal();
  map.tail.resize(9);
  for (auto& b : map.tail) b = rng.complex_normal();

  const auto j = laurent_map_to_json(map);
  const auto text = dump_json_17(j);
  const LaurentMap parsed = laurent_map_from_json(Json::parse(text));
  CHECK(parsed.b0 == map.b0);
  REQUIRE(parsed.tail.size() == map.tail.size());
  for (size_t i = 0; i < map.tail.size(); ++i) CHECK(parsed.tail[i] == map.tail[i]);
}

TEST_CASE("malformed coefficient data is rejected") {
  CHECK_THROWS_AS(laurent_map_from_json(Json::parse(R"({"tail": []})")), ValidationError);
  CHECK_THROWS_AS(laurent_map_from_json(Json::parse(R"({"b0": [0], "tail": []})")),
                  ValidationError);
  CHECK_THROWS_AS(laurent_map_from_json(Json::parse(R"({"b0": [0,0], "tail": [[1]]})")),
                  ValidationError);
  CHECK_THROWS_AS(read_laurent_map("/nonexistent/coeffs.json"), ValidationError);
}
