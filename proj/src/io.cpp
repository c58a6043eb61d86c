#include "detsing/io.hpp"

#include <fstream>
#include <sstream>

namespace detsing {

using nlohmann::json;

namespace {

std::string strip_kind(const Error& e) {
  std::string msg = e.what();
  const std::string prefix = std::string(to_string(e.kind())) + ": ";
  if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
  return msg;
}

// Runs fn, re-raising parse-type failures with `where` prepended.
template <class Fn>
auto located(const std::string& where, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::UnknownVariable ||
        e.kind() == ErrorKind::InvalidType)
      fail(ErrorKind::Parse, where + ": " + strip_kind(e));
    throw;
  }
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

const json& require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorKind::Parse, std::string("missing field '") + key + "'");
  return *it;
}

json signature_json(const Signature& s) { return json(s); }

json trials_json(const std::vector<Trial>& trials) {
  json out = json::array();
  for (const auto& t : trials) {
    json j = {{"form", t.form}, {"signature", signature_json(t.signature)}};
    if (!t.error.empty()) j["error"] = t.error;
    out.push_back(std::move(j));
  }
  return out;
}

json optional_long(const std::optional<long>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

VarietyDescriptor parse_descriptor(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    fail(ErrorKind::Parse, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                               ": malformed JSON");
  }
  if (!j.is_object()) fail(ErrorKind::Parse, "descriptor must be a JSON object");
  VarietyDescriptor d;
  try {
    if (auto it = j.find("schema"); it != j.end() && it->get<std::string>() != kDescriptorSchema)
      fail(ErrorKind::Parse, "unsupported schema '" + it->get<std::string>() + "'");
    if (auto it = j.find("label"); it != j.end()) d.label = it->get<std::string>();
    d.variables = require(j, "variables").get<std::vector<std::string>>();
    d.matrix = require(j, "matrix").get<std::vector<std::vector<std::string>>>();
    d.t = require(j, "t").get<int>();
    if (auto it = j.find("hyperplanes"); it != j.end()) {
      for (const auto& h : *it)
        d.hyperplanes.emplace_back(require(h, "name").get<std::string>(),
                                   require(h, "form").get<std::string>());
    }
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, std::string("descriptor field has the wrong type: ") + e.what());
  }
  if (d.matrix.empty() || d.matrix[0].empty()) fail(ErrorKind::Parse, "empty matrix");
  for (std::size_t i = 0; i < d.matrix.size(); ++i)
    if (d.matrix[i].size() != d.matrix[0].size())
      fail(ErrorKind::Parse, "matrix row " + std::to_string(i) + " has a different length");
  const int bound = static_cast<int>(std::min(d.matrix.size(), d.matrix[0].size()));
  if (d.t < 1 || d.t > bound)
    fail(ErrorKind::Parse, "t = " + std::to_string(d.t) + " outside 1.." + std::to_string(bound));
  // Validate every polynomial now so errors point at the input.
  RingPtr ring = descriptor_ring(d);
  descriptor_matrix(d, ring);
  for (const auto& [name, form] : d.hyperplanes)
    located("hyperplane '" + name + "'", [&] { return LinearForm(parse_poly(ring, form)); });
  return d;
}

VarietyDescriptor load_descriptor(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return located(path, [&] { return parse_descriptor(buf.str()); });
}

json to_json(const VarietyDescriptor& d) {
  json hs = json::array();
  for (const auto& [name, form] : d.hyperplanes) hs.push_back({{"name", name}, {"form", form}});
  return {{"schema", kDescriptorSchema}, {"label", d.label}, {"variables", d.variables},
          {"matrix", d.matrix},          {"t", d.t},         {"hyperplanes", hs}};
}

RingPtr descriptor_ring(const VarietyDescriptor& d) {
  return located("variables", [&] { return make_ring(d.variables); });
}

PolyMatrix descriptor_matrix(const VarietyDescriptor& d, const RingPtr& ring) {
  std::vector<std::vector<Poly>> rows;
  for (std::size_t i = 0; i < d.matrix.size(); ++i) {
    rows.emplace_back();
    for (std::size_t j = 0; j < d.matrix[i].size(); ++j) {
      const std::string where = "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      rows.back().push_back(located(where, [&] { return parse_poly(ring, d.matrix[i][j]); }));
    }
  }
  return PolyMatrix::from_rows(ring, std::move(rows));
}

DetVariety build_variety(const VarietyDescriptor& d, Arithmetic arithmetic) {
  RingPtr ring = descriptor_ring(d);
  return DetVariety::build(descriptor_matrix(d, ring), d.t, arithmetic);
}

LinearForm descriptor_hyperplane(const VarietyDescriptor& d, const RingPtr& ring,
                                 const std::string& name) {
  for (const auto& [n, form] : d.hyperplanes)
    if (n == name) return located("hyperplane '" + n + "'", [&] {
        return LinearForm(parse_poly(ring, form));
      });
  return located("hyperplane", [&] { return LinearForm(parse_poly(ring, name)); });
}

const char* mode_name(Arithmetic a) {
  return a == Arithmetic::Modular ? "modular" : "rational";
}

json to_json(const RunConfig& c) {
  return {{"seed", c.seed},
          {"trials", c.settings.trials},
          {"retries", c.settings.retries},
          {"coefficient_bound", c.settings.coefficient_bound},
          {"mode", mode_name(c.settings.arithmetic)},
          {"cross_check", c.settings.cross_check},
          {"limits",
           {{"max_basis", c.limits.max_basis_size},
            {"max_degree", c.limits.max_degree},
            {"max_pairs", c.limits.max_pairs}}}};
}

json to_json(const EidsResult& r) {
  return {{"eids", r.eids}, {"failing_stratum", r.failing_stratum}, {"witness", r.witness}};
}

json to_json(const SmoothingFamily& f) {
  if (f.matrix.rows() == 0) return nullptr;
  return {{"variables", f.matrix.ring()->names()},
          {"matrix", f.matrix.to_strings()},
          {"perturbation", f.perturbation},
          {"seed", f.seed},
          {"attempts", f.attempts}};
}

json to_json(const PolarResult& r) {
  json j = {{"value", r.value},
            {"fibre_count", r.fibre_count},
            {"slice_count", r.slice_count},
            {"slice", r.slice},
            {"slice_attempts", r.slice_attempts},
            {"polar_curve", r.polar_curve},
            {"family", to_json(r.family)}};
  if (r.check_family.matrix.rows() != 0) {
    j["check_count"] = r.check_count;
    j["check_family"] = to_json(r.check_family);
  }
  return j;
}

json to_json(const InvariantReport& r) {
  json levels = json::array();
  for (const auto& l : r.levels) {
    json j = {{"dim", l.dim},       {"variables", l.variables}, {"matrix", l.matrix},
              {"form", l.form},     {"m", l.m},                 {"chi", l.chi},
              {"nu", l.nu},         {"mu", optional_long(l.mu)}};
    j["polar"] = l.polar ? to_json(*l.polar) : json(nullptr);
    levels.push_back(std::move(j));
  }
  return {{"d", r.d},
          {"m", r.m},
          {"chi", r.chi},
          {"nu", r.nu},
          {"mu", optional_long(r.mu)},
          {"smoothability", r.smoothability},
          {"normality_assumed", r.normality_assumed},
          {"seed", r.seed},
          {"levels", levels},
          {"warnings", r.warnings}};
}

json to_json(const LeGreuelReport& r) {
  return {{"identity", r.form_of_identity},
          {"top", r.top},
          {"section", r.section},
          {"polar", r.polar},
          {"holds", r.holds},
          {"top_chain", to_json(r.top_chain)},
          {"section_chain", to_json(r.section_chain)},
          {"polar_detail", to_json(r.polar_detail)}};
}

json to_json(const GeneralityReport& r) {
  return {{"verdict", to_string(r.verdict)},
          {"reason", r.reason},
          {"transversal", r.transversal},
          {"failing_stratum", r.failing_stratum},
          {"witness", r.witness},
          {"reduced", r.reduced ? json(*r.reduced) : json(nullptr)},
          {"signature", signature_json(r.signature)},
          {"minimum", signature_json(r.minimum)},
          {"minimum_stable", r.minimum_stable},
          {"trials", trials_json(r.trials)},
          {"section_variables", r.section_variables},
          {"section_matrix", r.section_matrix},
          {"seed", r.seed}};
}

json to_json(const SearchResult& r) {
  return {{"minimum", signature_json(r.minimum)},
          {"witness", r.witness},
          {"stable", r.stable},
          {"trials", trials_json(r.trials)},
          {"seed", r.seed}};
}

json to_json(const SurfaceSection& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  return {{"forms", r.forms},
          {"verdicts", verdicts},
          {"rejected", r.rejected},
          {"surface",
           {{"variables", r.surface.ring()->names()}, {"matrix", r.surface.matrix().to_strings()}}},
          {"invariants", to_json(r.invariants)}};
}

json to_json(const InvarianceReport& r) {
  return {{"mu_first", r.mu_first},
          {"mu_second", r.mu_second},
          {"equal", r.equal},
          {"first", to_json(r.first)},
          {"second", to_json(r.second)}};
}

json to_json(const SwallowtailReport& r) {
  json strata = json::array();
  for (std::size_t i = 0; i < r.stratum_names.size(); ++i)
    strata.push_back({{"name", r.stratum_names[i]}, {"ideal", r.stratum_ideals[i]}});
  json planes = json::array();
  for (const auto& h : r.hyperplanes) {
    json checks = json::array();
    for (const auto& s : h.strata)
      checks.push_back({{"stratum", s.stratum},
                        {"stratum_ideal", s.stratum_ideal},
                        {"locus", s.locus},
                        {"locus_dim", s.locus_dim},
                        {"transversal", s.transversal}});
    planes.push_back({{"form", h.form},
                      {"section_variables", h.section_variables},
                      {"section", h.section},
                      {"reduced", h.reduced},
                      {"in_tangent_cone", h.in_tangent_cone},
                      {"general", !h.in_tangent_cone},
                      {"strata", checks}});
  }
  return {{"equation", r.equation},
          {"tangent_cone", r.tangent_cone},
          {"strata", strata},
          {"singular_locus_dim", r.singular_locus_dim},
          {"strata_cover_singular_locus", r.strata_cover_singular_locus},
          {"hyperplanes", planes}};
}

json check_report(const VarietyDescriptor& d, Arithmetic arithmetic) {
  const int m = static_cast<int>(d.matrix.size());
  const int n = static_cast<int>(d.matrix[0].size());
  const int N = static_cast<int>(d.variables.size());
  json j = {{"type", {m, n, d.t}}, {"N", N}, {"codim", generic_codim(m, n, d.t)}};
  j["smoothability"] = to_string(smoothability_class(m, n, d.t, N));
  j["hypersurface_type"] = d.t == m && d.t == n;
  try {
    DetVariety v = build_variety(d, arithmetic);
    j["determinantal"] = true;
    j["d"] = v.dim();
    j["eids"] = to_json(is_eids(v, arithmetic));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotDeterminantal) throw;
    j["determinantal"] = false;
    j["reason"] = e.what();
  }
  return j;
}

json envelope(const std::string& command, const RunConfig& config, const json& input,
              json result) {
  return {{"schema", kReportSchema},
          {"command", command},
          {"config", to_json(config)},
          {"input", input},
          {"result", std::move(result)}};
}

}  // namespace detsing
