// Acceptance gate: one PASS/FAIL line per criterion.  All invariants are
// exact integers (zero tolerance); wall-clock budgets are pinned below.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "json.hpp"

#include "detsing/io.hpp"
#include "detsing/random.hpp"

using namespace detsing;
using nlohmann::json;

namespace {

const std::string kFixtures = DETSING_FIXTURE_DIR;
const std::string kCli = DETSING_CLI_PATH;
const std::string kScratch = DETSING_SCRATCH_DIR;

constexpr double kBudgetSurface = 120.0;    // criteria 1 and 2
constexpr double kBudgetThreefold = 600.0;  // criterion 3

template <class T>
std::string describe(const T& x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

template <class T>
std::string describe(const std::vector<T>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + describe(v[i]);
  return s + "]";
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates named checks; the first failure is kept in the detail line.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (pass_) first_ = what;
    pass_ = false;
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    expect(got == want, what + ": got " + describe(got) + ", want " + describe(want));
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  Outcome outcome() const { return {pass_, pass_ ? notes_ : first_}; }

 private:
  bool pass_ = true;
  std::string first_, notes_;
};

DetVariety fixture(const std::string& name) {
  return build_variety(load_descriptor(kFixtures + "/" + name + ".json"));
}

LinearForm form(const DetVariety& v, const std::string& text) {
  return LinearForm(parse_poly(v.ring(), text));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Runs the CLI; returns its exit status and the report written to `out`.
int run_cli(const std::string& args, const std::string& out) {
  const std::string cmd = "\"" + kCli + "\" " + args + " --output \"" + out + "\" 2>/dev/null";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Ideal ideal(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<Poly> ps;
  for (auto g : gens) ps.push_back(parse_poly(r, g));
  return Ideal(r, ps);
}

// Random unimodular n x n integer matrix.
std::vector<std::vector<long>> unimodular(std::size_t n, Rng& rng) {
  std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
  for (int step = 0; step < 2 * static_cast<int>(n); ++step) {
    std::size_t i = rng.below(n), j = rng.below(n);
    if (i == j) continue;
    long k = rng.nonzero_coefficient(1);
    for (std::size_t c = 0; c < n; ++c) a[i][c] += k * a[j][c];
  }
  return a;
}

// x -> A x on every variable of the ring.
std::map<std::string, Poly> linear_change(const RingPtr& ring,
                                          const std::vector<std::vector<long>>& a) {
  std::map<std::string, Poly> change;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    Poly image(ring);
    for (std::size_t j = 0; j < ring->size(); ++j)
      if (a[i][j] != 0) image += mpq_class(a[i][j]) * Poly::variable(ring, j);
    change.emplace(ring->name(i), image);
  }
  return change;
}

Outcome criterion1() {
  Checks c;
  const std::string out = kScratch + "/c1.json";
  int status = run_cli("invariants \"" + kFixtures + "/surface_c4.json\" --hyperplane p --seed 1",
                       out);
  c.equal(status, 0, "cli exit status");
  if (status != 0) return c.outcome();
  json r = json::parse(slurp(out))["result"]["report"];
  c.equal(r["m"][2].get<long>(), 3, "m_2");
  c.equal(r["levels"][1]["mu"].get<long>(), 2, "mu of the section by w = 0");
  c.equal(r["mu"].get<long>(), 1, "mu");
  c.note("m = " + r["m"].dump() + ", curve mu = 2, mu = 1");
  return c.outcome();
}

Outcome criterion2() {
  Checks c;
  const std::string out = kScratch + "/c2.json";
  int status = run_cli("invariants \"" + kFixtures + "/plane_section_c4.json\" --seed 1", out);
  c.equal(status, 0, "cli exit status");
  if (status != 0) return c.outcome();
  json r = json::parse(slurp(out))["result"]["report"];
  c.equal(r["mu"].get<long>(), 1, "mu");
  c.note("m = " + r["m"].dump() + ", mu = " + r["mu"].dump());
  return c.outcome();
}

Outcome criterion3() {
  Checks c;
  DetVariety x = fixture("threefold_c5");
  c.equal(*invariant_chain(section(x, form(x, "w - z")), 1).mu, 4, "mu(X cap {w = z})");
  c.equal(*invariant_chain(section(x, form(x, "x - v")), 1).mu, 2, "mu(X cap {x = v})");

  const std::string out = kScratch + "/c3.json";
  int status = run_cli("genericity \"" + kFixtures + "/threefold_c5.json\" --search --trials 8",
                       out);
  c.equal(status, 0, "search exit status");
  if (status == 0) {
    json r = json::parse(slurp(out))["result"];
    c.equal(r["minimum"][0].get<long>(), 2, "search minimum");
    c.expect(r["trials"].size() >= 8, "at least 8 trials");
    for (const auto& h : r["hyperplanes"])
      if (h["name"] == "H") c.expect(h["general"] == false, "w - z classified general by search");
  }
  Settings s;
  s.trials = 8;
  GeneralityReport h = is_strongly_general(x, form(x, "w - z"), 1, s);
  c.expect(h.verdict == Verdict::NotStronglyGeneral && h.reason == "generality",
           std::string("w - z verdict ") + to_string(h.verdict) + " (" + h.reason + ")");
  GeneralityReport hp = is_strongly_general(x, form(x, "x - v"), 1, s);
  c.expect(hp.verdict == Verdict::StronglyGeneral,
           std::string("x - v verdict ") + to_string(hp.verdict) + " (" + hp.reason + ")");
  c.note("mu 4 and 2, minimum 2 over 8 trials, w - z not_strongly_general, x - v strongly_general");
  return c.outcome();
}

Outcome criterion4() {
  Checks c;
  for (const char* name : {"surface_c4", "plane_section_c4"}) {
    DetVariety v = fixture(name);
    for (std::uint64_t k = 1; k <= 3; ++k) {
      LinearForm p = random_form(v.ring(), derive_seed(4, name, k), 7);
      LeGreuelReport r = le_greuel_check(v, p, k);
      std::ostringstream s;
      s << name << " p = " << to_string(p.poly()) << ": " << r.top << " + " << r.section
        << " vs " << r.polar;
      c.expect(r.form_of_identity == "mu" && r.holds, s.str());
    }
  }
  DetVariety x = fixture("threefold_c5");
  LeGreuelReport r = le_greuel_check(x, form(x, "x - v"), 1);
  std::ostringstream s;
  s << "3-fold nu: " << r.top << " + " << r.section << " vs m_3 = " << r.polar;
  c.expect(r.form_of_identity == "nu" && r.holds, s.str());
  c.note("6 surface identities; " + s.str());
  return c.outcome();
}

Outcome criterion5() {
  Checks c;
  std::string summary;
  for (const char* name : {"surface_c4", "plane_section_c4", "smooth_surface", "threefold_c5",
                           "smooth_threefold", "cm_codim2_c7"}) {
    DetVariety v = fixture(name);
    Settings s;
    s.trials = v.dim() > 3 ? 4 : 8;
    int accepted = 0;
    for (std::uint64_t k = 0; k < 8 && accepted < 3; ++k) {
      LinearForm p = random_form(v.ring(), derive_seed(5, name, k), 7);
      GeneralityReport g = is_strongly_general(v, p, derive_seed(5, "verdict", k), s);
      if (g.verdict != Verdict::StronglyGeneral) continue;
      ++accepted;
      DetVariety y = section(v, p);
      const std::string where = std::string(name) + " p = " + to_string(p.poly());
      c.expect(y.m() == v.m() && y.n() == v.n() && y.t() == v.t(), where + ": type changed");
      c.equal(y.dim(), v.dim() - 1, where + ": dimension");
      c.expect(is_eids(y).eids, where + ": section is not EIDS");
    }
    c.expect(accepted >= 3, std::string(name) + ": fewer than 3 strongly general forms");
    summary += std::string(summary.empty() ? "" : ", ") + name + " " + std::to_string(accepted);
  }
  c.note("sections checked: " + summary);
  return c.outcome();
}

Outcome criterion6() {
  Checks c;
  InvarianceReport c7 = section_invariance_check(fixture("cm_codim2_c7"), 1, 2);
  c.equal(c7.mu_first, 1, "C^7 surface mu, seed 1");
  c.equal(c7.mu_second, 1, "C^7 surface mu, seed 2");
  InvarianceReport x = section_invariance_check(fixture("threefold_c5"), 1, 2);
  c.equal(x.mu_first, 2, "3-fold surface mu, seed 1");
  c.equal(x.mu_second, 2, "3-fold surface mu, seed 2");
  c.note("C^7: " + std::to_string(c7.mu_first) + " = " + std::to_string(c7.mu_second) +
         ", 3-fold: " + std::to_string(x.mu_first) + " = " + std::to_string(x.mu_second));
  return c.outcome();
}

Outcome criterion7() {
  Checks c;
  auto r1 = make_ring({"x"});
  auto r2 = make_ring({"x", "y"});
  auto r3 = make_ring({"x", "y", "z"});
  auto r4 = make_ring({"x", "y", "z", "w"});
  struct Case {
    Ideal ideal;
    int dim;
    long count;  // -1: not zero-dimensional
    long local;
  };
  std::vector<Case> cases = {
      {ideal(r3, {"x"}), 2, -1, -1},
      {ideal(r3, {"1"}), -1, 0, 0},
      {ideal(r2, {"x", "y"}), 0, 1, 1},
      {ideal(r2, {"x - y", "x + y"}), 0, 1, 1},
      {ideal(r2, {"x^2", "y"}), 0, 2, 2},
      {ideal(r2, {"x^2 + y^2 - 1", "x - y"}), 0, 2, 0},
      {ideal(r1, {"x^2*(x - 1)"}), 0, 3, 2},
      {ideal(r1, {"x - 1"}), 0, 1, 0},
      {ideal(r2, {"x^2", "x*y", "y^2"}), 0, 3, 3},
      {ideal(r2, {"x*y", "x + y"}), 0, 2, 2},
      {ideal(r2, {"y - x^2", "y^2 - y"}), 0, 4, 2},
      {ideal(r4, {"y*w - x^2", "z*w - x*y", "z*x - y^2"}), 2, -1, -1},
      {ideal(r3, {"x*y", "y*z", "x*z"}), 1, -1, -1},
  };
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Case& k = cases[i];
    const std::string where = "ideal #" + std::to_string(i);
    c.equal(dimension(k.ideal), k.dim, where + " dimension");
    if (k.count >= 0) {
      c.equal(static_cast<long>(quotient_count(k.ideal)), k.count, where + " quotient_count");
      c.equal(static_cast<long>(local_count_at_origin(k.ideal)), k.local, where + " local_count");
    }
  }
  c.expect(ideals_equal(saturate(ideal(r2, {"x*y"}), ideal(r2, {"x"})), ideal(r2, {"y"})),
           "saturate(<xy>, <x>) != <y>");
  c.expect(ideals_equal(saturate(ideal(r1, {"x^2*(x - 1)"}), ideal(r1, {"x"})),
                        ideal(r1, {"x - 1"})),
           "saturate(<x^2(x-1)>, <x>) != <x - 1>");
  c.equal(milnor_number_isolated_hypersurface(parse_poly(r2, "x^2 + y^2")), 1u, "mu(x^2+y^2)");
  c.equal(milnor_number_isolated_hypersurface(parse_poly(r2, "x^2 + y^3")), 2u, "mu(x^2+y^3)");
  c.equal(milnor_number_isolated_hypersurface(parse_poly(r2, "x^3 + y^3")), 4u, "mu(x^3+y^3)");
  c.note(std::to_string(cases.size()) + " ideals, saturations, Milnor numbers 1, 2, 4");
  return c.outcome();
}

Outcome criterion8() {
  Checks c;
  const std::string out = kScratch + "/c8.json";
  int status = run_cli("demo-swallowtail", out);
  c.equal(status, 0, "cli exit status");
  if (status != 0) return c.outcome();
  json r = json::parse(slurp(out))["result"];
  auto ring = make_ring({"x", "y", "z"});
  Poly cone = parse_poly(ring, r["tangent_cone"].get<std::string>());
  c.expect(cone == mpq_class(256) * parse_poly(ring, "z^3"), "tangent cone " + to_string(cone));
  for (const auto& h : r["hyperplanes"]) {
    c.expect(h["reduced"] == false, "section by " + h["form"].get<std::string>() + " reduced");
    if (h["form"] == "z") {
      c.expect(h["in_tangent_cone"] == true, "z = 0 not flagged by the tangent cone");
      c.equal(h["section"].get<std::string>(), std::string("-4*x^2*y^3 - 27*x^4"), "z section");
    }
  }
  c.note("cone 256*z^3, z = 0 and x = 0 sections non-reduced");
  return c.outcome();
}

Outcome criterion9() {
  Checks c;
  DetVariety s = fixture("surface_c4");
  const RingPtr& ring = s.ring();
  const std::vector<long> m = invariant_chain(s, 1).m;
  const long polar = polar_multiplicity(s, form(s, "w"), 1).value;
  Rng rng(9);
  for (int k = 0; k < 3; ++k) {
    const std::string tag = " instance " + std::to_string(k);
    // (a) linear change of coordinates, p conjugated.
    auto change = linear_change(ring, unimodular(4, rng));
    DetVariety moved = DetVariety::build(s.matrix().substitute(change, ring), 2);
    LinearForm p(substitute(parse_poly(ring, "w"), change, ring));
    c.equal(invariant_chain(moved, 1).m, m, "chain after coordinate change" + tag);
    c.equal(polar_multiplicity(moved, p, 1).value, polar, "m_2 after coordinate change" + tag);
    // (b) constant invertible row and column operations.
    PolyMatrix mixed = constant_matrix(ring, unimodular(2, rng)) * s.matrix() *
                       constant_matrix(ring, unimodular(3, rng));
    DetVariety mv = DetVariety::build(mixed, 2);
    c.expect(is_eids(mv).eids, "EIDS after row/column operations" + tag);
    c.equal(invariant_chain(mv, 1).m, m, "chain after row/column operations" + tag);
    c.equal(polar_multiplicity(mv, form(s, "w"), 1).value, polar,
            "m_2 after row/column operations" + tag);
    // (c) rescaled linear form.
    mpq_class scale(rng.nonzero_coefficient(7), 1 + static_cast<long>(rng.below(5)));
    LinearForm scaled(scale * parse_poly(ring, "w"));
    c.equal(polar_multiplicity(s, scaled, 1).value, polar, "m_2 for rescaled p" + tag);
  }
  c.note("m = " + describe(m) + ", m_2(w) = " + std::to_string(polar) +
         " under 3 instances of each change");
  return c.outcome();
}

Outcome criterion10() {
  Checks c;
  const std::vector<std::string> runs = {
      "invariants \"" + kFixtures + "/surface_c4.json\" --seed 17 --le-greuel",
      "genericity \"" + kFixtures + "/surface_c4.json\" --search --seed 5 --trials 4",
      "check \"" + kFixtures + "/cm_codim2_c7.json\"",
      "demo-swallowtail"};
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const std::string a = kScratch + "/replay" + std::to_string(i) + "a.json";
    const std::string b = kScratch + "/replay" + std::to_string(i) + "b.json";
    int sa = run_cli(runs[i], a), sb = run_cli(runs[i], b);
    c.expect(sa == 0 && sb == 0, runs[i] + ": exit status");
    const std::string ra = slurp(a), rb = slurp(b);
    c.expect(!ra.empty() && ra == rb, runs[i] + ": reports differ");
    // The recorded seed and config replay the run.
    if (!ra.empty()) {
      json j = json::parse(ra);
      c.expect(j["config"].contains("seed"), runs[i] + ": seed missing from report");
    }
  }
  c.note(std::to_string(runs.size()) + " commands run twice, byte-identical");
  return c.outcome();
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double budget;  // seconds; 0 means none
  };
  const std::vector<Criterion> criteria = {
      {1, "C^4 surface: m_2 = 3, curve mu = 2, mu = 1", criterion1, kBudgetSurface},
      {2, "C^4 plane section surface: mu = 1", criterion2, kBudgetSurface},
      {3, "C^5 3-fold: sections mu 4 and 2, search minimum 2", criterion3, kBudgetThreefold},
      {4, "Le-Greuel identities", criterion4, 0},
      {5, "sections by strongly general forms stay determinantal EIDS", criterion5, 0},
      {6, "surface section mu independent of the seed", criterion6, 0},
      {7, "algebra oracles", criterion7, 0},
      {8, "swallowtail demo", criterion8, 0},
      {9, "invariance under coordinates, matrix operations and scaling", criterion9, 0},
      {10, "byte-identical replay", criterion10, 0},
  };
  int failed = 0;
  for (const auto& k : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = k.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (k.budget > 0 && secs > k.budget) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(k.budget)) + " s budget)";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1f s", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k.id << ": " << k.name << " ["
              << timing << "] " << o.detail << std::endl;
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
