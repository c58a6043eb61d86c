#include "detsing/detvar.hpp"

#include <set>

#include "detsing/random.hpp"
#include "detsing/util.hpp"

namespace detsing {

int generic_codim(int m, int n, int t) {
  if (m < 1 || n < 1 || t < 1 || t > std::min(m, n))
    fail(ErrorKind::InvalidType, "type (" + std::to_string(m) + "," + std::to_string(n) +
                                     "," + std::to_string(t) + ") needs 1 <= t <= min(m,n)");
  return (m - t + 1) * (n - t + 1);
}

const char* to_string(Smoothability s) {
  switch (s) {
    case Smoothability::NonisolatedPossible: return "nonisolated_possible";
    case Smoothability::IsolatedSmoothable: return "isolated_smoothable";
    case Smoothability::IsolatedNoSmoothing: return "isolated_no_smoothing";
  }
  return "?";
}

Smoothability smoothability_class(int m, int n, int t, int N) {
  generic_codim(m, n, t);
  const int bound = (m - t + 2) * (n - t + 2);
  if (N < bound) return Smoothability::IsolatedSmoothable;
  if (N == bound) return Smoothability::IsolatedNoSmoothing;
  return Smoothability::NonisolatedPossible;
}

DetVariety::DetVariety(PolyMatrix f, int t) : f_(std::move(f)), t_(t) {
  strata_.push_back(Ideal::unit(f_.ring()));
  for (int i = 1; i <= t_; ++i)
    strata_.emplace_back(f_.ring(), distinct_up_to_scalar(f_.minors(static_cast<std::size_t>(i))));
}

DetVariety DetVariety::build(PolyMatrix f, int t, Arithmetic arithmetic) {
  const int m = static_cast<int>(f.rows()), n = static_cast<int>(f.cols());
  const int c = generic_codim(m, n, t);
  const int N = static_cast<int>(f.ring()->size());
  DetVariety v(std::move(f), t);
  if (!v.ideal().vanishes_at_origin())
    fail(ErrorKind::InvalidType, "the origin does not lie on X (some " + std::to_string(t) +
                                     "-minor has a nonzero constant term)");
  const int d = with_arithmetic(arithmetic, v.ideal(), [](const auto& i) { return dimension(i); });
  if (d != N - c)
    fail(ErrorKind::NotDeterminantal,
         "the " + std::to_string(t) + "-minors define a set of dimension " + std::to_string(d) +
             ", expected " + std::to_string(N - c) + " (codimension " + std::to_string(c) + ")");
  return v;
}

const Ideal& DetVariety::stratum_ideal(int i) const {
  if (i < 0 || i > t_)
    fail(ErrorKind::IndexOutOfRange,
         "stratum " + std::to_string(i) + " outside 0.." + std::to_string(t_));
  return strata_[static_cast<std::size_t>(i)];
}

template <class C>
BasicIdeal<C> nontransversal_locus(const PolyMatrix& f, int i,
                                   const std::vector<std::size_t>& variables,
                                   const std::vector<Poly>& extra_rows,
                                   const std::vector<Poly>& saturate_by) {
  const RingPtr& ring = f.ring();
  const int m = static_cast<int>(f.rows()), n = static_cast<int>(f.cols());
  std::vector<Poly> stratum = distinct_up_to_scalar(f.minors(static_cast<std::size_t>(i)));
  const std::size_t rank = static_cast<std::size_t>(generic_codim(m, n, i)) + extra_rows.size();

  std::vector<Poly> gens = stratum;
  PolyMatrix jac = jacobian(stratum, ring, variables);
  if (!extra_rows.empty()) {
    PolyMatrix stacked(ring, jac.rows() + extra_rows.size(), jac.cols());
    for (std::size_t r = 0; r < jac.rows(); ++r)
      for (std::size_t c = 0; c < jac.cols(); ++c) stacked(r, c) = jac(r, c);
    for (std::size_t k = 0; k < extra_rows.size(); ++k)
      for (std::size_t c = 0; c < jac.cols(); ++c)
        stacked(jac.rows() + k, c) = extra_rows[k].derivative(variables[c]);
    jac = std::move(stacked);
  }
  if (rank <= jac.rows() && rank <= jac.cols()) {
    auto minors = distinct_up_to_scalar(jac.minors(rank));
    gens.insert(gens.end(), minors.begin(), minors.end());
  }
  BasicIdeal<C> locus(ring, convert_all<C>(gens));
  for (const auto& g : saturate_by) locus = saturate(locus, convert<C>(g));
  if (i > 1) {
    BasicIdeal<C> deeper(ring, convert_all<C>(distinct_up_to_scalar(
                                   f.minors(static_cast<std::size_t>(i - 1)))));
    // A finite deeper stratum only matters at the origin, which every caller
    // excises by its own local test; skipping it avoids a costly saturation.
    if (dimension(deeper) > 0) locus = saturate(locus, deeper);
  }
  return locus;
}

template BasicIdeal<mpq_class> nontransversal_locus(const PolyMatrix&, int,
                                                    const std::vector<std::size_t>&,
                                                    const std::vector<Poly>&,
                                                    const std::vector<Poly>&);
template BasicIdeal<Fp> nontransversal_locus(const PolyMatrix&, int,
                                             const std::vector<std::size_t>&,
                                             const std::vector<Poly>&,
                                             const std::vector<Poly>&);

EidsResult is_eids(const DetVariety& v, Arithmetic arithmetic) {
  EidsResult result;
  const auto vars = all_variables(*v.ring());
  for (int i = 1; i <= v.t(); ++i) {
    auto verdict = [&]<class C>(C) -> std::optional<std::vector<std::string>> {
      auto locus = nontransversal_locus<C>(v.matrix(), i, vars, {}, {});
      if (isolated_at_origin(locus)) return std::nullopt;
      return basis_strings(locus);
    };
    auto bad = arithmetic == Arithmetic::Rational ? verdict(mpq_class()) : verdict(Fp());
    if (bad) {
      result.failing_stratum = i;
      result.witness = std::move(*bad);
      return result;
    }
  }
  result.eids = true;
  return result;
}

RingPtr family_ring(const RingPtr& ring) {
  auto names = ring->names();
  names.push_back(fresh_name(*ring, "s"));
  return make_ring(std::move(names));
}

SmoothingFamily perturb(const DetVariety& v, const std::vector<std::vector<long>>& r) {
  SmoothingFamily fam;
  RingPtr ext = family_ring(v.ring());
  fam.s_index = ext->size() - 1;
  Poly s = Poly::variable(ext, fam.s_index);
  PolyMatrix f = v.matrix().extend_ring(ext);
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j)
      if (r[i][j] != 0) f(i, j) += mpq_class(r[i][j]) * s;
  fam.matrix = std::move(f);
  fam.perturbation = r;
  return fam;
}

bool fibres_transversal_near_origin(const DetVariety& v, const SmoothingFamily& family,
                                    Arithmetic arithmetic) {
  const RingPtr& ext = family.matrix.ring();
  std::vector<std::size_t> xs;
  for (std::size_t k = 0; k < ext->size(); ++k)
    if (k != family.s_index) xs.push_back(k);
  const Poly s = Poly::variable(ext, family.s_index);
  for (int i = 1; i <= v.t(); ++i) {
    auto origin_escapes = [&]<class C>(C) {
      auto locus = nontransversal_locus<C>(family.matrix, i, xs, {}, {s});
      // The closure of the bad set off s = 0 avoids the origin of (x, s).
      return !locus.vanishes_at_origin();
    };
    bool ok = arithmetic == Arithmetic::Rational ? origin_escapes(mpq_class())
                                                 : origin_escapes(Fp());
    if (!ok) return false;
  }
  return true;
}

SmoothingFamily essential_smoothing(const DetVariety& v, std::uint64_t seed,
                                    const Settings& settings) {
  for (unsigned attempt = 0; attempt < settings.retries; ++attempt) {
    Rng rng(derive_seed(seed, "smoothing", attempt));
    std::vector<std::vector<long>> r(static_cast<std::size_t>(v.m()),
                                     std::vector<long>(static_cast<std::size_t>(v.n())));
    for (auto& row : r)
      for (auto& e : row) e = rng.nonzero_coefficient(settings.coefficient_bound);
    SmoothingFamily fam = perturb(v, r);
    fam.seed = seed;
    fam.attempts = attempt + 1;
    if (fibres_transversal_near_origin(v, fam, settings.arithmetic)) return fam;
  }
  fail(ErrorKind::DegenerateAfterRetries,
       "no transversal perturbation found in " + std::to_string(settings.retries) + " draws");
}

}  // namespace detsing
