#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "detsing/detvar.hpp"

namespace detsing {

// Polar multiplicity of V for the linear function p: the number n_0 of
// critical points of p on a nearby smooth fibre that converge to the origin,
// read off the polar curve of the family F~ = F + sR as its local
// intersection with s = 0.
struct PolarResult {
  long value = 0;
  long fibre_count = 0;
  // n_0 again, from an independently drawn family; 0 when not requested.
  long check_count = 0;
  SmoothingFamily check_family;
  // Multiplicity of the polar curve (generic hyperplane of (x, s)).  Never
  // exceeds n_0 and is smaller when the curve is tangent to s = 0.
  long slice_count = 0;
  SmoothingFamily family;
  std::vector<long> slice;  // coefficients over (x..., s)
  unsigned slice_attempts = 0;
  std::vector<std::string> polar_curve;  // reduced basis of the curve ideal
};

// NotIsolatedCriticalLocus when the critical locus of (s, p) on the family is
// not a curve or meets s = 0 in a curve (p too special).
PolarResult polar_multiplicity(const DetVariety& v, const LinearForm& p, std::uint64_t seed,
                               const Settings& settings = {});

// Critical points of p on the whole fibre s = epsilon, counted with
// multiplicity.  Equals the polar multiplicity when every such point
// converges to the origin, e.g. for homogeneous F and R.
long fibre_critical_count(const DetVariety& v, const SmoothingFamily& family,
                          const LinearForm& p, const mpq_class& epsilon,
                          Arithmetic arithmetic = Arithmetic::Rational);

// One section level of the chain: a variety of dimension `dim`, the form
// used both as polar function and as the next hyperplane, and the sub-chain
// topology of this level.
struct ChainLevel {
  int dim = 0;
  std::vector<std::string> variables;
  std::vector<std::vector<std::string>> matrix;
  std::string form;
  long m = 0;
  long chi = 0;
  long nu = 0;
  std::optional<long> mu;
  std::optional<PolarResult> polar;  // absent at dimension 0
};

struct InvariantReport {
  int d = 0;
  std::vector<long> m;  // m[k], k = 0..d
  long chi = 0;
  long nu = 0;
  std::optional<long> mu;
  std::string smoothability;
  bool normality_assumed = false;
  std::uint64_t seed = 0;
  std::vector<ChainLevel> levels;  // levels[0] is V itself, then sections
  std::vector<std::string> warnings;
};

// m_k from successive sections V = V_d, V_{d-1} = V_d cap ker p_d, ...;
// m_0 is the local intersection number of V_1 with ker p_1.  `top` fixes
// p_d; all other forms are seeded random.
InvariantReport invariant_chain(const DetVariety& v, std::uint64_t seed,
                                const Settings& settings = {},
                                const std::optional<LinearForm>& top = std::nullopt);

// mu = m_1 - m_0 + 1 for a curve; WrongDimension otherwise.
long milnor_number_curve(const DetVariety& v, std::uint64_t seed, const Settings& settings = {});

struct LeGreuelReport {
  // "mu" for smoothable surfaces, "nu" otherwise.
  std::string form_of_identity;
  long top = 0;      // invariant of X
  long section = 0;  // invariant of X cap ker p
  long polar = 0;    // m_d(X, p)
  bool holds = false;
  InvariantReport top_chain, section_chain;
  PolarResult polar_detail;
};

// Left side from two independent chains, right side from polar_multiplicity;
// HypothesisViolation unless X is an isolated smoothable singularity.
LeGreuelReport le_greuel_check(const DetVariety& v, const LinearForm& p, std::uint64_t seed,
                               const Settings& settings = {});

// Seeded random linear form with nonzero integer coefficients.
LinearForm random_form(const RingPtr& ring, std::uint64_t seed, long bound);

}  // namespace detsing
