#include "detsing/invariants.hpp"

#include "detsing/random.hpp"
#include "detsing/sections.hpp"
#include "detsing/util.hpp"

namespace detsing {

LinearForm random_form(const RingPtr& ring, std::uint64_t seed, long bound) {
  Rng rng(seed);
  std::vector<mpq_class> coeffs;
  for (std::size_t i = 0; i < ring->size(); ++i) coeffs.emplace_back(rng.nonzero_coefficient(bound));
  return LinearForm::from_coefficients(ring, coeffs);
}

namespace {

// Critical locus of (s, p) on the regular part of the family, closed off
// s = 0.  On the regular part the Jacobian J of the t-minors has rank c, so
// (s, p) is critical iff J restricted to ker ds cap ker dp has rank < c.  The
// columns a_q e_i - a_i e_q (q the pivot of p, i != q, s) span that kernel.
template <class C>
BasicIdeal<C> polar_locus(const SmoothingFamily& family, int t, const Poly& p_ext) {
  const PolyMatrix& f = family.matrix;
  const RingPtr& ext = f.ring();
  const LinearForm p(p_ext);
  const std::size_t q = p.pivot();
  const auto& a = p.coefficients();
  std::vector<Poly> minors = distinct_up_to_scalar(f.minors(static_cast<std::size_t>(t)));
  const int c = generic_codim(static_cast<int>(f.rows()), static_cast<int>(f.cols()), t);

  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < ext->size(); ++i)
    if (i != q && i != family.s_index) others.push_back(i);
  PolyMatrix restricted(ext, minors.size(), others.size());
  for (std::size_t r = 0; r < minors.size(); ++r) {
    const Poly dq = minors[r].derivative(q);
    for (std::size_t k = 0; k < others.size(); ++k)
      restricted(r, k) = a[q] * minors[r].derivative(others[k]) - a[others[k]] * dq;
  }
  std::vector<Poly> gens = minors;
  if (static_cast<std::size_t>(c) <= std::min(restricted.rows(), restricted.cols())) {
    auto crit = distinct_up_to_scalar(restricted.minors(static_cast<std::size_t>(c)));
    gens.insert(gens.end(), crit.begin(), crit.end());
  }
  BasicIdeal<C> locus(ext, convert_all<C>(gens));
  locus = saturate(locus, convert<C>(Poly::variable(ext, family.s_index)));
  if (t > 1) {
    BasicIdeal<C> singular(ext, convert_all<C>(distinct_up_to_scalar(
                                    f.minors(static_cast<std::size_t>(t - 1)))));
    // Near the origin a finite singular set of the family is the origin at
    // most, so excising the origin is equivalent and far cheaper.
    if (dimension(singular) > 0)
      locus = saturate(locus, singular);
    else
      locus = saturate(locus, BasicIdeal<C>::origin(ext));
  }
  return locus;
}

// Local intersection of the polar curve with s = 0, i.e. n_0.
template <class C>
long fibre_count(const BasicIdeal<C>& curve, const SmoothingFamily& family) {
  auto fibre = curve.with({convert<C>(Poly::variable(family.matrix.ring(), family.s_index))});
  if (dimension(fibre) > 0)
    fail(ErrorKind::NotIsolatedCriticalLocus, "polar curve meets s = 0 in a curve");
  return static_cast<long>(local_count_at_origin(fibre));
}

template <class C>
BasicIdeal<C> checked_curve(const SmoothingFamily& family, int t, const Poly& p_ext) {
  auto curve = polar_locus<C>(family, t, p_ext);
  const int dim = dimension(curve);
  if (dim > 1)
    fail(ErrorKind::NotIsolatedCriticalLocus,
         "critical locus of the linear form on the family has dimension " + std::to_string(dim));
  return curve;
}

template <class C>
void polar_counts(const SmoothingFamily& family, int t, const Poly& p_ext, std::uint64_t seed,
                  const Settings& settings, PolarResult& out) {
  const RingPtr& ext = family.matrix.ring();
  auto curve = checked_curve<C>(family, t, p_ext);
  out.polar_curve = basis_strings(curve);
  if (dimension(curve) < 0 || !curve.vanishes_at_origin()) return;
  out.fibre_count = fibre_count(curve, family);

  for (unsigned attempt = 0; attempt < settings.retries; ++attempt) {
    Rng rng(derive_seed(seed, "slice", attempt));
    std::vector<long> coeffs;
    Poly l(ext);
    for (std::size_t i = 0; i < ext->size(); ++i) {
      coeffs.push_back(rng.nonzero_coefficient(settings.coefficient_bound));
      l += mpq_class(coeffs.back()) * Poly::variable(ext, i);
    }
    auto sliced = curve.with({convert<C>(l)});
    out.slice_attempts = attempt + 1;
    if (dimension(sliced) > 0) continue;
    out.slice = coeffs;
    out.slice_count = static_cast<long>(local_count_at_origin(sliced));
    return;
  }
  fail(ErrorKind::DegenerateAfterRetries, "no hyperplane cut the polar curve to points");
}

template <class C>
long check_count(const SmoothingFamily& family, int t, const Poly& p_ext) {
  auto curve = checked_curve<C>(family, t, p_ext);
  if (dimension(curve) < 0 || !curve.vanishes_at_origin()) return 0;
  return fibre_count(curve, family);
}

}  // namespace

PolarResult polar_multiplicity(const DetVariety& v, const LinearForm& p, std::uint64_t seed,
                               const Settings& settings) {
  if (v.dim() < 1)
    fail(ErrorKind::WrongDimension, "polar multiplicity needs dimension >= 1");
  if (!same_ring(p.ring(), v.ring()))
    fail(ErrorKind::RingMismatch, "linear form and variety live in different rings");
  PolarResult out;
  out.family = essential_smoothing(v, derive_seed(seed, "family"), settings);
  const Poly p_ext = substitute(p.poly(), {}, out.family.matrix.ring());
  const bool rational = settings.arithmetic == Arithmetic::Rational;
  if (rational)
    polar_counts<mpq_class>(out.family, v.t(), p_ext, seed, settings, out);
  else
    polar_counts<Fp>(out.family, v.t(), p_ext, seed, settings, out);
  out.value = out.fibre_count;
  if (settings.cross_check) {
    out.check_family = essential_smoothing(v, derive_seed(seed, "family-check"), settings);
    const Poly q = substitute(p.poly(), {}, out.check_family.matrix.ring());
    out.check_count = rational ? check_count<mpq_class>(out.check_family, v.t(), q)
                               : check_count<Fp>(out.check_family, v.t(), q);
  }
  return out;
}

long fibre_critical_count(const DetVariety& v, const SmoothingFamily& family,
                          const LinearForm& p, const mpq_class& epsilon, Arithmetic arithmetic) {
  const RingPtr& ext = family.matrix.ring();
  PolyMatrix fibre = family.matrix.substitute(
      {{ext->name(family.s_index), Poly::constant(v.ring(), epsilon)}}, v.ring());
  auto count = [&]<class C>(C) {
    auto locus = nontransversal_locus<C>(fibre, v.t(), all_variables(*v.ring()), {p.poly()}, {});
    if (dimension(locus) > 0)
      fail(ErrorKind::NotIsolatedCriticalLocus, "non-isolated critical points on the fibre");
    return static_cast<long>(quotient_count(locus));
  };
  return arithmetic == Arithmetic::Rational ? count(mpq_class()) : count(Fp());
}

namespace {

bool recoverable(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::NotIsolatedCriticalLocus:
    case ErrorKind::NotDeterminantal:
    case ErrorKind::NotZeroDimensional:
    case ErrorKind::DegenerateAfterRetries:
      return true;
    default:
      return false;
  }
}

}  // namespace

InvariantReport invariant_chain(const DetVariety& v, std::uint64_t seed, const Settings& settings,
                                const std::optional<LinearForm>& top) {
  if (v.dim() > 0 && v.smoothability() != Smoothability::IsolatedSmoothable)
    fail(ErrorKind::HypothesisViolation,
         std::string("invariant chain needs an isolated singularity with a smoothing; class is ") +
             to_string(v.smoothability()));
  InvariantReport report;
  report.d = v.dim();
  report.seed = seed;
  report.smoothability = to_string(v.smoothability());
  report.m.assign(static_cast<std::size_t>(report.d + 1), 0);

  DetVariety cur = v;
  for (int k = report.d; k >= 0; --k) {
    ChainLevel level;
    level.dim = k;
    level.variables = cur.ring()->names();
    level.matrix = cur.matrix().to_strings();
    if (k == 0) {
      level.m = with_arithmetic(settings.arithmetic, cur.ideal(), [](const auto& i) {
        return static_cast<long>(local_count_at_origin(i));
      });
      report.levels.push_back(std::move(level));
      break;
    }
    const bool fixed = k == report.d && top.has_value();
    std::optional<DetVariety> next;
    for (unsigned attempt = 0;; ++attempt) {
      if (attempt == (fixed ? 1u : settings.retries))
        fail(ErrorKind::DegenerateAfterRetries,
             "no usable hyperplane at dimension " + std::to_string(k));
      LinearForm p = fixed ? *top
                           : random_form(cur.ring(), derive_seed(seed, "form", static_cast<std::uint64_t>(k) * 1000 + attempt),
                                         settings.coefficient_bound);
      try {
        if (!fixed && !strata_transversal(cur, p, settings.arithmetic)) continue;
        auto polar = polar_multiplicity(cur, p, derive_seed(seed, "polar", static_cast<std::uint64_t>(k)), settings);
        if (settings.cross_check && polar.check_count != polar.fibre_count)
          report.warnings.push_back("dimension " + std::to_string(k) +
                                    ": two smoothing families give " +
                                    std::to_string(polar.fibre_count) + " and " +
                                    std::to_string(polar.check_count) + " critical points");
        DetVariety sec = section(cur, p, settings.arithmetic);
        level.form = to_string(p.poly());
        level.m = polar.value;
        level.polar = std::move(polar);
        next = std::move(sec);
        break;
      } catch (const Error& e) {
        if (fixed || !recoverable(e)) throw;
      }
    }
    report.levels.push_back(std::move(level));
    cur = std::move(*next);
  }

  // Bottom-up: chi_0 = m_0, chi_k = chi_{k-1} + (-1)^k m_k.
  long chi = 0;
  for (auto it = report.levels.rbegin(); it != report.levels.rend(); ++it) {
    const int k = it->dim;
    chi += (k % 2 == 0 ? 1 : -1) * it->m;
    it->chi = chi;
    it->nu = (k % 2 == 0 ? 1 : -1) * (chi - 1);
    report.m[static_cast<std::size_t>(k)] = it->m;
    const int depth = report.d - k;
    const bool smoothable =
        smoothability_class(v.m(), v.n(), v.t(), v.ambient_dim() - depth) ==
        Smoothability::IsolatedSmoothable;
    if ((k == 1 || k == 2) && smoothable) it->mu = it->nu;
  }
  report.chi = report.levels.front().chi;
  report.nu = report.levels.front().nu;
  report.mu = report.levels.front().mu;
  report.normality_assumed = report.d == 2 && report.mu.has_value();
  return report;
}

long milnor_number_curve(const DetVariety& v, std::uint64_t seed, const Settings& settings) {
  if (v.dim() != 1)
    fail(ErrorKind::WrongDimension, "curve Milnor number needs dimension 1, got " +
                                        std::to_string(v.dim()));
  if (v.smoothability() != Smoothability::IsolatedSmoothable)
    fail(ErrorKind::HypothesisViolation, "curve does not admit a smoothing");
  auto report = invariant_chain(v, seed, settings);
  return report.m[1] - report.m[0] + 1;
}

LeGreuelReport le_greuel_check(const DetVariety& v, const LinearForm& p, std::uint64_t seed,
                               const Settings& settings) {
  if (v.smoothability() != Smoothability::IsolatedSmoothable)
    fail(ErrorKind::HypothesisViolation,
         std::string("identity needs an isolated smoothable singularity, class is ") +
             to_string(v.smoothability()));
  if (v.dim() < 1) fail(ErrorKind::WrongDimension, "identity needs dimension >= 1");
  LeGreuelReport r;
  r.form_of_identity = v.dim() == 2 ? "mu" : "nu";
  r.top_chain = invariant_chain(v, derive_seed(seed, "lg-top"), settings);
  r.section_chain = invariant_chain(section(v, p, settings.arithmetic),
                                    derive_seed(seed, "lg-section"), settings);
  r.polar_detail = polar_multiplicity(v, p, derive_seed(seed, "lg-polar"), settings);
  if (v.dim() == 2) {
    r.top = r.top_chain.mu.value();
    r.section = r.section_chain.mu.value();
  } else {
    r.top = r.top_chain.nu;
    r.section = r.section_chain.nu;
  }
  r.polar = r.polar_detail.value;
  r.holds = r.top + r.section == r.polar;
  return r;
}

}  // namespace detsing
