#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "detsing/sections.hpp"
#include "detsing/swallowtail.hpp"

namespace detsing {

inline constexpr const char* kDescriptorSchema = "detsing.variety/1";
inline constexpr const char* kReportSchema = "detsing.report/1";

// A determinantal variety as data: variables, matrix entries as strings,
// the rank threshold t, and optional named hyperplanes.
struct VarietyDescriptor {
  std::string label;
  std::vector<std::string> variables;
  std::vector<std::vector<std::string>> matrix;
  int t = 0;
  std::vector<std::pair<std::string, std::string>> hyperplanes;  // name, form
};

// Parse failures name the offending field, with line and column for JSON
// syntax errors and the column inside a polynomial string otherwise.
VarietyDescriptor parse_descriptor(const std::string& text);
VarietyDescriptor load_descriptor(const std::string& path);
nlohmann::json to_json(const VarietyDescriptor& d);

RingPtr descriptor_ring(const VarietyDescriptor& d);
PolyMatrix descriptor_matrix(const VarietyDescriptor& d, const RingPtr& ring);
DetVariety build_variety(const VarietyDescriptor& d, Arithmetic arithmetic = Arithmetic::Rational);
// A named hyperplane of the descriptor, or else `name` parsed as a form.
LinearForm descriptor_hyperplane(const VarietyDescriptor& d, const RingPtr& ring,
                                 const std::string& name);

// Everything that determines a run.  Reports embed it so a run replays.
struct RunConfig {
  std::uint64_t seed = 1;
  Settings settings;
  ResourceLimits limits;
  std::string output;  // empty: standard output
};

nlohmann::json to_json(const RunConfig& c);
const char* mode_name(Arithmetic a);

nlohmann::json to_json(const EidsResult& r);
nlohmann::json to_json(const SmoothingFamily& f);
nlohmann::json to_json(const PolarResult& r);
nlohmann::json to_json(const InvariantReport& r);
nlohmann::json to_json(const LeGreuelReport& r);
nlohmann::json to_json(const GeneralityReport& r);
nlohmann::json to_json(const SearchResult& r);
nlohmann::json to_json(const SurfaceSection& r);
nlohmann::json to_json(const InvarianceReport& r);
nlohmann::json to_json(const SwallowtailReport& r);

// Summary of build + EIDS for cmd check.
nlohmann::json check_report(const VarietyDescriptor& d, Arithmetic arithmetic);

// {schema, command, config, input, result}.  Object keys serialize sorted,
// so equal runs produce equal bytes.
nlohmann::json envelope(const std::string& command, const RunConfig& config,
                        const nlohmann::json& input, nlohmann::json result);

}  // namespace detsing
