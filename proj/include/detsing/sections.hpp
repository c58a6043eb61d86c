#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "detsing/invariants.hpp"

namespace detsing {

// V cap ker p: solves p = 0 for section_pivot(F, p), substitutes, and
// rebuilds in the remaining variables.  NotDeterminantal if the section
// degenerates.
DetVariety section(const DetVariety& v, const LinearForm& p,
                   Arithmetic arithmetic = Arithmetic::Rational);

// Last variable of p that enters every entry of f at most linearly, else the
// last variable of p.  Eliminating a linear variable keeps entries sparse.
std::size_t section_pivot(const PolyMatrix& f, const LinearForm& p);

// Ring without x_pivot and the substitution realizing p = 0.
std::pair<RingPtr, std::map<std::string, Poly>> section_substitution(const LinearForm& p,
                                                                     std::size_t pivot);

// Lexicographic minimality key of a section Y: nu of Y and of its successive
// generic sections down to the curve, or the local length when Y is a point.
// A Y without smoothing is first cut by seeded transversal hyperplanes down
// to the first level that has one.
using Signature = std::vector<long>;
std::string to_string(const Signature& s);

Signature section_signature(const DetVariety& section, std::uint64_t seed,
                            const Settings& settings);

enum class Verdict { StronglyGeneral, NotStronglyGeneral, Inconclusive };
const char* to_string(Verdict v);

struct Trial {
  std::string form;
  Signature signature;
  std::string error;  // nonempty when the trial could not be evaluated
};

struct GeneralityReport {
  Verdict verdict = Verdict::Inconclusive;
  // For NotStronglyGeneral: "transversality", "reducedness" or "generality".
  // For Inconclusive: why the comparison could not certify.
  std::string reason;
  bool transversal = false;
  int failing_stratum = 0;
  std::vector<std::string> witness;
  std::optional<bool> reduced;
  Signature signature;
  Signature minimum;
  bool minimum_stable = false;
  std::vector<Trial> trials;
  std::vector<std::vector<std::string>> section_matrix;
  std::vector<std::string> section_variables;
  std::uint64_t seed = 0;
};

// Leg (a): every stratum of V is transversal to ker p off the origin.
// Leg (b): the signature of V cap ker p equals the minimum over `trials`
// seeded random forms, with the minimum unchanged over the last half.
GeneralityReport is_strongly_general(const DetVariety& v, const LinearForm& p,
                                     std::uint64_t seed, const Settings& settings = {});

// Transversality leg alone; the failing stratum and witness are recorded.
bool strata_transversal(const DetVariety& v, const LinearForm& p, Arithmetic arithmetic,
                        int* failing_stratum = nullptr,
                        std::vector<std::string>* witness = nullptr);

struct SearchResult {
  Signature minimum;
  std::string witness;
  bool stable = false;
  std::vector<Trial> trials;
  std::uint64_t seed = 0;
};

// Signatures for `settings.trials` random forms; the first form attaining
// the lexicographic minimum is the witness.
SearchResult minimal_invariant_search(const DetVariety& v, std::uint64_t seed,
                                      const Settings& settings = {});

struct SurfaceSection {
  std::vector<std::string> forms;            // applied in order
  std::vector<GeneralityReport> verdicts;    // one per accepted form
  unsigned rejected = 0;
  DetVariety surface;
  InvariantReport invariants;
};

// Strongly general sections down to dimension 2.  HypothesisViolation unless
// d > 2 and codim X < (m-t+2)(n-t+2) - 2; Inconclusive when a verdict
// cannot be certified.
SurfaceSection generic_surface_section(const DetVariety& v, std::uint64_t seed,
                                       const Settings& settings = {});

struct InvarianceReport {
  long mu_first = 0, mu_second = 0;
  bool equal = false;
  SurfaceSection first, second;
};

InvarianceReport section_invariance_check(const DetVariety& v, std::uint64_t seed1,
                                          std::uint64_t seed2, const Settings& settings = {});

// Lowest-degree homogeneous component.
Poly tangent_cone(const Poly& f);

}  // namespace detsing
