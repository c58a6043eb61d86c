#include "doctest.h"

#include <string>

#include "detsing/io.hpp"

using namespace detsing;

namespace {

const std::string kFixtures = DETSING_FIXTURE_DIR;

ErrorKind kind_of(const std::string& text) {
  try {
    parse_descriptor(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected a failure");
  return ErrorKind::Parse;
}

std::string message_of(const std::string& text) {
  try {
    parse_descriptor(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("descriptor round trip") {
  VarietyDescriptor d = load_descriptor(kFixtures + "/threefold_c5.json");
  CHECK(d.variables == std::vector<std::string>{"x", "y", "z", "w", "v"});
  CHECK(d.t == 2);
  REQUIRE(d.hyperplanes.size() == 2);
  CHECK(d.hyperplanes[1].first == "H'");
  VarietyDescriptor again = parse_descriptor(to_json(d).dump());
  CHECK(to_json(again) == to_json(d));
  DetVariety v = build_variety(d);
  CHECK(v.dim() == 3);
  CHECK(to_string(descriptor_hyperplane(d, v.ring(), "H").poly()) == "-z + w");
  CHECK(to_string(descriptor_hyperplane(d, v.ring(), "x + y").poly()) == "x + y");
}

TEST_CASE("every fixture parses") {
  for (const char* name : {"surface_c4", "threefold_c5", "cm_codim2_c7", "plane_section_c4",
                           "smooth_surface", "smooth_threefold", "degenerate"}) {
    CAPTURE(name);
    CHECK_NOTHROW(load_descriptor(kFixtures + "/" + name + ".json"));
  }
}

TEST_CASE("descriptor errors are located") {
  CHECK(kind_of("{\"variables\": [\"x\"],\n \"matrix\": [[\"x\"]], \"t\": }") == ErrorKind::Parse);
  CHECK(message_of("{\"variables\": [\"x\"],\n \"matrix\": [[\"x\"]], \"t\": }")
            .find("line 2") != std::string::npos);
  std::string bad_poly = R"({"variables": ["x", "y"], "matrix": [["x", "y +* 2"]], "t": 1})";
  CHECK(kind_of(bad_poly) == ErrorKind::Parse);
  CHECK(message_of(bad_poly).find("matrix[0][1]") != std::string::npos);
  CHECK(message_of(bad_poly).find("column") != std::string::npos);
  std::string unknown = R"({"variables": ["x"], "matrix": [["x", "q"]], "t": 1})";
  CHECK(message_of(unknown).find("matrix[0][1]") != std::string::npos);
  CHECK(kind_of(R"({"variables": ["x"], "matrix": [["x"], ["x", "x"]], "t": 1})") ==
        ErrorKind::Parse);
  CHECK(kind_of(R"({"variables": ["x"], "matrix": [["x"]], "t": 2})") == ErrorKind::Parse);
  CHECK(kind_of(R"({"variables": ["x"], "matrix": [["x"]]})") == ErrorKind::Parse);
  CHECK(kind_of(R"({"variables": ["x"], "matrix": [["x"]], "t": 1,
                    "hyperplanes": [{"name": "h", "form": "x^2"}]})") == ErrorKind::Parse);
  CHECK(kind_of(R"({"schema": "other/2", "variables": ["x"], "matrix": [["x"]], "t": 1})") ==
        ErrorKind::Parse);
}

TEST_CASE("check report on the fixtures") {
  RunConfig config;
  auto surface = check_report(load_descriptor(kFixtures + "/surface_c4.json"), Arithmetic::Rational);
  CHECK(surface["determinantal"] == true);
  CHECK(surface["d"] == 2);
  CHECK(surface["smoothability"] == "isolated_smoothable");
  CHECK(surface["eids"]["eids"] == true);
  auto degenerate =
      check_report(load_descriptor(kFixtures + "/degenerate.json"), Arithmetic::Rational);
  CHECK(degenerate["determinantal"] == false);
  auto c7 = check_report(load_descriptor(kFixtures + "/cm_codim2_c7.json"), Arithmetic::Rational);
  CHECK(c7["eids"]["eids"] == true);
  CHECK(c7["smoothability"] == "nonisolated_possible");
}

TEST_CASE("reports serialize deterministically") {
  VarietyDescriptor d = load_descriptor(kFixtures + "/surface_c4.json");
  DetVariety v = build_variety(d);
  RunConfig config;
  config.seed = 42;
  auto run = [&] {
    return envelope("invariants", config, to_json(d),
                    {{"report", to_json(invariant_chain(v, config.seed, config.settings))}})
        .dump();
  };
  std::string a = run(), b = run();
  CHECK(a == b);
  auto j = nlohmann::json::parse(a);
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["config"]["seed"] == 42);
  CHECK(j["result"]["report"]["mu"] == 1);
}
