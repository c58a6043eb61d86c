#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "detsing/ideal.hpp"
#include "detsing/poly_matrix.hpp"
#include "detsing/settings.hpp"

namespace detsing {

// Codimension (m-t+1)(n-t+1) of the matrices of rank < t.
int generic_codim(int m, int n, int t);

enum class Smoothability { NonisolatedPossible, IsolatedSmoothable, IsolatedNoSmoothing };
const char* to_string(Smoothability s);

// Compares N with (m-t+2)(n-t+2): below is smoothable, equal is isolated
// without smoothing, above may be non-isolated.
Smoothability smoothability_class(int m, int n, int t, int N);

// X = F^{-1}(rank < t) with codim X equal to the generic codimension, based
// at the origin.  Stratum ideals are the i-minors of F, i = 1..t.
class DetVariety {
 public:
  DetVariety() = default;
  // Fails with NotDeterminantal when the codimension is wrong and with
  // InvalidType when t is out of range or the origin is not on X.
  static DetVariety build(PolyMatrix f, int t, Arithmetic arithmetic = Arithmetic::Rational);

  const PolyMatrix& matrix() const { return f_; }
  const RingPtr& ring() const { return f_.ring(); }
  int m() const { return static_cast<int>(f_.rows()); }
  int n() const { return static_cast<int>(f_.cols()); }
  int t() const { return t_; }
  int ambient_dim() const { return static_cast<int>(f_.ring()->size()); }
  int codim() const { return generic_codim(m(), n(), t_); }
  int dim() const { return ambient_dim() - codim(); }
  Smoothability smoothability() const {
    return smoothability_class(m(), n(), t_, ambient_dim());
  }

  // Ideal of the i-minors; i = 0 gives the unit ideal.
  const Ideal& stratum_ideal(int i) const;
  const Ideal& ideal() const { return stratum_ideal(t_); }

 private:
  DetVariety(PolyMatrix f, int t);

  PolyMatrix f_;
  int t_ = 0;
  std::vector<Ideal> strata_;
};

struct EidsResult {
  bool eids = false;
  // Stratum index whose non-transversal locus escapes the origin; 0 if none.
  int failing_stratum = 0;
  std::vector<std::string> witness;
};

// Every stratum i: the points of V(I_i) minus V(I_{i-1}) where the
// Jacobian of I_i drops rank lie at the origin.
EidsResult is_eids(const DetVariety& v, Arithmetic arithmetic = Arithmetic::Rational);

// Points of stratum i of `f` where the Jacobian of the i-minors (in
// `variables`, stacked with the differentials of `extra_rows`) drops below
// the expected rank, saturated by `saturate_by` and by the deeper stratum.
// When the deeper stratum is finite it is not saturated away: callers only
// ask whether the origin is a limit of bad points off the origin (or off
// s = 0), which a finite set cannot affect.
template <class C>
BasicIdeal<C> nontransversal_locus(const PolyMatrix& f, int i,
                                   const std::vector<std::size_t>& variables,
                                   const std::vector<Poly>& extra_rows,
                                   const std::vector<Poly>& saturate_by);

// F~(x, s) = F(x) + s R for a constant integer matrix R.
struct SmoothingFamily {
  PolyMatrix matrix;  // over (x..., s)
  std::vector<std::vector<long>> perturbation;
  std::uint64_t seed = 0;
  unsigned attempts = 0;
  std::size_t s_index = 0;  // index of s in matrix.ring()
};

// Draws R from `seed` until, near the origin, every fibre s != 0 is
// transversal to all strata; DegenerateAfterRetries when the budget runs out.
SmoothingFamily essential_smoothing(const DetVariety& v, std::uint64_t seed,
                                    const Settings& settings = {});

// The ring of `v` with a fresh parameter appended.
RingPtr family_ring(const RingPtr& ring);

// Perturbs by a prescribed R without validation.
SmoothingFamily perturb(const DetVariety& v, const std::vector<std::vector<long>>& r);

// Family fibre validation used by essential_smoothing.
bool fibres_transversal_near_origin(const DetVariety& v, const SmoothingFamily& family,
                                    Arithmetic arithmetic);

}  // namespace detsing
