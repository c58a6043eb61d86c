// detsing: determinantal singularity analyses from JSON descriptors.
//
// Exit statuses: 0 success, 1 other failure, 2 parse or usage error,
// 3 hypothesis violation, 4 inconclusive verdict, 5 resource limit.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "detsing/io.hpp"
#include "detsing/random.hpp"

using namespace detsing;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kOther = 1, kParse = 2, kHypothesis = 3, kInconclusive = 4, kResource = 5 };

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::UnknownVariable:
    case ErrorKind::InvalidType:
      return kParse;
    case ErrorKind::HypothesisViolation:
    case ErrorKind::NotDeterminantal:
    case ErrorKind::WrongDimension:
    case ErrorKind::NotIsolated:
      return kHypothesis;
    case ErrorKind::Inconclusive:
      return kInconclusive;
    case ErrorKind::ResourceLimit:
      return kResource;
    default:
      return kOther;
  }
}

struct Options {
  RunConfig config;
  std::string mode = "rational";
  bool text = false;
  std::string descriptor;
  std::string hyperplane;
  bool search = false;
  bool le_greuel = false;
  bool surface = false;
  std::optional<std::uint64_t> compare_seed;
};

void emit(const Options& o, const json& report) {
  std::string out = report.dump(2) + "\n";
  if (o.text) {
    std::string t;
    const json& r = report["result"];
    t += "command: " + report["command"].get<std::string>() + "\n";
    t += "seed: " + report["config"]["seed"].dump() + "\n";
    for (auto it = r.begin(); it != r.end(); ++it) {
      if (it->is_object() || (it->is_array() && !it->empty() && !(*it)[0].is_primitive()))
        continue;
      t += it.key() + ": " + it->dump() + "\n";
    }
    if (r.contains("report"))
      for (const char* k : {"m", "chi", "nu", "mu"})
        t += std::string(k) + ": " + r["report"][k].dump() + "\n";
    out = t;
  }
  if (o.config.output.empty()) {
    std::cout << out;
  } else {
    std::ofstream f(o.config.output);
    if (!f) fail(ErrorKind::Parse, "cannot write '" + o.config.output + "'");
    f << out;
  }
}

json descriptor_input(const VarietyDescriptor& d) { return to_json(d); }

int run_check(const Options& o) {
  VarietyDescriptor d = load_descriptor(o.descriptor);
  emit(o, envelope("check", o.config, descriptor_input(d),
                   check_report(d, o.config.settings.arithmetic)));
  return kOk;
}

int run_invariants(const Options& o) {
  const Settings& s = o.config.settings;
  VarietyDescriptor d = load_descriptor(o.descriptor);
  DetVariety v = build_variety(d, s.arithmetic);
  json result;
  if (o.surface || o.compare_seed) {
    if (o.compare_seed) {
      InvarianceReport r = section_invariance_check(v, o.config.seed, *o.compare_seed, s);
      result["invariance"] = to_json(r);
      result["report"] = to_json(r.first.invariants);
    } else {
      SurfaceSection r = generic_surface_section(v, o.config.seed, s);
      result["surface_section"] = to_json(r);
      result["report"] = to_json(r.invariants);
    }
  } else {
    std::optional<LinearForm> top;
    if (!o.hyperplane.empty()) top = descriptor_hyperplane(d, v.ring(), o.hyperplane);
    InvariantReport r = invariant_chain(v, o.config.seed, s, top);
    result["report"] = to_json(r);
    if (o.le_greuel) {
      LinearForm p = top ? *top
                         : random_form(v.ring(), derive_seed(o.config.seed, "le-greuel-form"),
                                       s.coefficient_bound);
      result["le_greuel"] = to_json(le_greuel_check(v, p, o.config.seed, s));
      result["le_greuel"]["form"] = to_string(p.poly());
    }
  }
  emit(o, envelope("invariants", o.config, descriptor_input(d), result));
  return kOk;
}

int run_genericity(const Options& o) {
  const Settings& s = o.config.settings;
  VarietyDescriptor d = load_descriptor(o.descriptor);
  DetVariety v = build_variety(d, s.arithmetic);
  if (o.search == !o.hyperplane.empty())
    fail(ErrorKind::Parse, "give exactly one of a hyperplane name and --search");
  if (o.search) {
    SearchResult r = minimal_invariant_search(v, o.config.seed, s);
    json result = to_json(r);
    // Every named hyperplane is classified against the minimum found.
    json named = json::array();
    for (const auto& [name, form] : d.hyperplanes) {
      LinearForm p = descriptor_hyperplane(d, v.ring(), name);
      Signature sig = section_signature(section(v, p, s.arithmetic),
                                        derive_seed(o.config.seed, "named", named.size()), s);
      named.push_back({{"name", name},
                       {"form", form},
                       {"signature", sig},
                       {"general", sig == r.minimum},
                       {"minimal", sig <= r.minimum}});
    }
    result["hyperplanes"] = named;
    emit(o, envelope("genericity", o.config, descriptor_input(d), result));
    return r.stable ? kOk : kInconclusive;
  }
  LinearForm p = descriptor_hyperplane(d, v.ring(), o.hyperplane);
  GeneralityReport r = is_strongly_general(v, p, o.config.seed, s);
  json result = to_json(r);
  result["form"] = to_string(p.poly());
  emit(o, envelope("genericity", o.config, descriptor_input(d), result));
  return r.verdict == Verdict::Inconclusive ? kInconclusive : kOk;
}

int run_swallowtail(const Options& o) {
  emit(o, envelope("demo-swallowtail", o.config, nullptr,
                   to_json(swallowtail_demo(o.config.settings.arithmetic))));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Determinantal singularities: EIDS checks, invariants and generic sections"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  o.config.limits = ResourceLimits::from_env();
  Settings& s = o.config.settings;

  app.add_option("--seed", o.config.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--trials", s.trials, "Random forms per genericity comparison")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--retries", s.retries, "Retry budget for random perturbations and slices")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--coefficient-bound", s.coefficient_bound, "Random coefficients in [-b, b]")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--jobs", s.jobs, "Threads for independent trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--mode", o.mode, "Arithmetic: rational, or modular (prime field)")
      ->check(CLI::IsMember({"rational", "modular"}))
      ->capture_default_str();
  app.add_flag("--no-cross-check{false}", s.cross_check,
               "Skip the second smoothing family in polar multiplicities");
  app.add_option("--output,-o", o.config.output, "Write the report here instead of stdout");
  app.add_flag("--text", o.text, "Human-readable summary instead of JSON");

  auto* check = app.add_subcommand("check", "Determinantal, smoothability and EIDS verdicts");
  check->add_option("descriptor", o.descriptor, "Variety descriptor (JSON)")->required();

  auto* inv = app.add_subcommand("invariants", "Invariant chain m_0..m_d, chi, nu, mu");
  inv->add_option("descriptor", o.descriptor, "Variety descriptor (JSON)")->required();
  inv->add_option("--hyperplane", o.hyperplane, "Named or literal form for the top level");
  inv->add_flag("--le-greuel", o.le_greuel, "Recompute both sides of the Le-Greuel identity");
  inv->add_flag("--surface", o.surface, "Invariants of a strongly general surface section");
  inv->add_option("--compare-seed", o.compare_seed,
                  "Second seed; compares the surface sections of both seeds");

  auto* gen = app.add_subcommand("genericity", "Strongly general test or minimal search");
  gen->add_option("descriptor", o.descriptor, "Variety descriptor (JSON)")->required();
  gen->add_option("hyperplane", o.hyperplane, "Named or literal linear form");
  gen->add_flag("--search", o.search, "Search for the minimal invariant chain");

  app.add_subcommand("demo-swallowtail", "Tangent cone, sections and strata of the swallowtail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }
  s.arithmetic = o.mode == "modular" ? Arithmetic::Modular : Arithmetic::Rational;
  active_limits() = o.config.limits;

  try {
    if (check->parsed()) return run_check(o);
    if (inv->parsed()) return run_invariants(o);
    if (gen->parsed()) return run_genericity(o);
    return run_swallowtail(o);
  } catch (const Error& e) {
    std::cerr << "detsing: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "detsing: " << e.what() << "\n";
    return kOther;
  }
}
