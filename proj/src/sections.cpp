#include "detsing/sections.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "detsing/random.hpp"
#include "detsing/util.hpp"

namespace detsing {

std::size_t section_pivot(const PolyMatrix& f, const LinearForm& p) {
  const auto& a = p.coefficients();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] == 0) continue;
    bool linear = true;
    for (std::size_t r = 0; r < f.rows() && linear; ++r)
      for (std::size_t c = 0; c < f.cols() && linear; ++c)
        for (const auto& t : f(r, c).terms())
          if (t.mono[i] > 1) {
            linear = false;
            break;
          }
    if (linear) return i;
  }
  return p.pivot();
}

std::pair<RingPtr, std::map<std::string, Poly>> section_substitution(const LinearForm& p,
                                                                     std::size_t piv) {
  const Ring& ring = *p.ring();
  if (piv >= ring.size() || p.coefficients()[piv] == 0)
    fail(ErrorKind::IndexOutOfRange, "pivot variable does not occur in the linear form");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (i != piv) names.push_back(ring.name(i));
  if (names.empty()) fail(ErrorKind::WrongDimension, "cannot section a zero-dimensional ambient space");
  RingPtr target = make_ring(std::move(names));
  // x_piv = -(1/a_piv) sum_{j != piv} a_j x_j
  Poly value(target);
  const mpq_class scale = -1 / p.coefficients()[piv];
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (i == piv || p.coefficients()[i] == 0) continue;
    value += mpq_class(scale * p.coefficients()[i]) *
             Poly::variable(target, *target->index(ring.name(i)));
  }
  return {target, {{ring.name(piv), value}}};
}

DetVariety section(const DetVariety& v, const LinearForm& p, Arithmetic arithmetic) {
  if (!same_ring(p.ring(), v.ring()))
    fail(ErrorKind::RingMismatch, "linear form and variety live in different rings");
  auto [target, assignment] = section_substitution(p, section_pivot(v.matrix(), p));
  return DetVariety::build(v.matrix().substitute(assignment, target), v.t(), arithmetic);
}

std::string to_string(const Signature& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + std::to_string(s[i]);
  return out + ")";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::StronglyGeneral: return "strongly_general";
    case Verdict::NotStronglyGeneral: return "not_strongly_general";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

Signature section_signature(const DetVariety& y, std::uint64_t seed, const Settings& settings) {
  if (y.dim() == 0)
    return {with_arithmetic(settings.arithmetic, y.ideal(), [](const auto& i) {
      return static_cast<long>(local_count_at_origin(i));
    })};
  // Without a smoothing the chain is undefined; descend by transversal
  // sections to the first level that has one.
  DetVariety cur = y;
  for (int level = 0; cur.dim() > 0 && cur.smoothability() != Smoothability::IsolatedSmoothable;
       ++level) {
    bool cut = false;
    for (unsigned attempt = 0; attempt < settings.retries && !cut; ++attempt) {
      auto p = random_form(cur.ring(),
                           derive_seed(seed, "descend", static_cast<std::uint64_t>(level) * 1000 + attempt),
                           settings.coefficient_bound);
      if (!strata_transversal(cur, p, settings.arithmetic)) continue;
      try {
        cur = section(cur, p, settings.arithmetic);
        cut = true;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotDeterminantal) throw;
      }
    }
    if (!cut) fail(ErrorKind::DegenerateAfterRetries, "no transversal hyperplane to descend by");
  }
  if (cur.dim() == 0) return section_signature(cur, seed, settings);
  auto chain = invariant_chain(cur, seed, settings);
  Signature sig;
  for (const auto& level : chain.levels)
    if (level.dim >= 1) sig.push_back(level.nu);
  return sig;
}

bool strata_transversal(const DetVariety& v, const LinearForm& p, Arithmetic arithmetic,
                        int* failing_stratum, std::vector<std::string>* witness) {
  const auto vars = all_variables(*v.ring());
  for (int i = 1; i <= v.t(); ++i) {
    auto check = [&]<class C>(C) {
      auto locus = nontransversal_locus<C>(v.matrix(), i, vars, {p.poly()}, {});
      if (isolated_at_origin(locus)) return true;
      if (witness) *witness = basis_strings(locus);
      return false;
    };
    bool ok = arithmetic == Arithmetic::Rational ? check(mpq_class()) : check(Fp());
    if (!ok) {
      if (failing_stratum) *failing_stratum = i;
      return false;
    }
  }
  return true;
}

namespace {

// Runs fn(i) for i in [0, n) on up to `jobs` threads; results land by index.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, Fn fn) {
  std::vector<T> out(n);
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < std::min<std::size_t>(jobs, n); ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

bool recoverable(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::NotIsolatedCriticalLocus:
    case ErrorKind::NotDeterminantal:
    case ErrorKind::NotZeroDimensional:
    case ErrorKind::NotIsolated:
    case ErrorKind::DegenerateAfterRetries:
      return true;
    default:
      return false;
  }
}

}  // namespace

SearchResult minimal_invariant_search(const DetVariety& v, std::uint64_t seed,
                                      const Settings& settings) {
  if (settings.trials < 1) fail(ErrorKind::InvalidType, "at least one trial is required");
  SearchResult result;
  result.seed = seed;
  result.trials = parallel_map<Trial>(settings.trials, settings.jobs, [&](std::size_t i) {
    Trial trial;
    LinearForm p = random_form(v.ring(), derive_seed(seed, "trial", i), settings.coefficient_bound);
    trial.form = to_string(p.poly());
    try {
      Settings inner = settings;
      inner.jobs = 1;
      trial.signature = section_signature(section(v, p, settings.arithmetic),
                                          derive_seed(seed, "trial-chain", i), inner);
    } catch (const Error& e) {
      if (!recoverable(e)) throw;
      trial.error = e.what();
    }
    return trial;
  });
  std::vector<const Trial*> ok;
  for (const auto& t : result.trials)
    if (t.error.empty()) ok.push_back(&t);
  if (ok.empty()) fail(ErrorKind::DegenerateAfterRetries, "no trial produced a signature");
  const Trial* best = ok[0];
  for (const Trial* t : ok)
    if (t->signature < best->signature) best = t;
  result.minimum = best->signature;
  result.witness = best->form;
  // Stable when the first half of the trials already attained the minimum.
  const std::size_t half = (ok.size() + 1) / 2;
  result.stable = std::any_of(ok.begin(), ok.begin() + static_cast<long>(half),
                              [&](const Trial* t) { return t->signature == result.minimum; });
  return result;
}

GeneralityReport is_strongly_general(const DetVariety& v, const LinearForm& p,
                                     std::uint64_t seed, const Settings& settings) {
  GeneralityReport r;
  r.seed = seed;
  r.transversal = strata_transversal(v, p, settings.arithmetic, &r.failing_stratum, &r.witness);
  if (!r.transversal) {
    r.verdict = Verdict::NotStronglyGeneral;
    r.reason = "transversality";
    return r;
  }
  std::optional<DetVariety> y;
  try {
    y = section(v, p, settings.arithmetic);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotDeterminantal) throw;
    r.verdict = Verdict::NotStronglyGeneral;
    r.reason = "generality: section is not determinantal";
    return r;
  }
  r.section_matrix = y->matrix().to_strings();
  r.section_variables = y->ring()->names();
  if (y->m() == 1 && y->n() == 1 && y->dim() >= 1) {
    r.reduced = is_reduced_principal(y->matrix()(0, 0));
    if (!*r.reduced) {
      r.verdict = Verdict::NotStronglyGeneral;
      r.reason = "reducedness";
      return r;
    }
  }
  try {
    r.signature = section_signature(*y, derive_seed(seed, "signature"), settings);
  } catch (const Error& e) {
    if (!recoverable(e)) throw;
    r.verdict = Verdict::NotStronglyGeneral;
    r.reason = std::string("generality: section invariants undefined (") + e.what() + ")";
    return r;
  }
  auto search = minimal_invariant_search(v, derive_seed(seed, "search"), settings);
  r.minimum = search.minimum;
  r.minimum_stable = search.stable;
  r.trials = std::move(search.trials);
  if (!r.minimum_stable) {
    r.verdict = Verdict::Inconclusive;
    r.reason = "minimum changed in the last half of the trials";
  } else if (r.signature > r.minimum) {
    r.verdict = Verdict::NotStronglyGeneral;
    r.reason = "generality";
  } else if (r.signature < r.minimum) {
    r.verdict = Verdict::Inconclusive;
    r.reason = "form beats every random trial";
  } else {
    r.verdict = Verdict::StronglyGeneral;
  }
  return r;
}

SurfaceSection generic_surface_section(const DetVariety& v, std::uint64_t seed,
                                       const Settings& settings) {
  if (v.dim() <= 2)
    fail(ErrorKind::HypothesisViolation, "surface sections need dimension > 2");
  const int bound = (v.m() - v.t() + 2) * (v.n() - v.t() + 2);
  if (v.codim() >= bound - 2)
    fail(ErrorKind::HypothesisViolation,
         "codimension " + std::to_string(v.codim()) + " is not below " + std::to_string(bound - 2));
  SurfaceSection out;
  DetVariety cur = v;
  while (cur.dim() > 2) {
    bool accepted = false;
    for (unsigned attempt = 0; attempt < settings.retries && !accepted; ++attempt) {
      const std::uint64_t tag = static_cast<std::uint64_t>(cur.dim()) * 1000 + attempt;
      LinearForm p = random_form(cur.ring(), derive_seed(seed, "surface-form", tag),
                                 settings.coefficient_bound);
      auto verdict = is_strongly_general(cur, p, derive_seed(seed, "surface-verdict", tag), settings);
      if (verdict.verdict == Verdict::Inconclusive)
        fail(ErrorKind::Inconclusive, "section form " + to_string(p.poly()) + ": " + verdict.reason);
      if (verdict.verdict == Verdict::NotStronglyGeneral) {
        ++out.rejected;
        continue;
      }
      out.forms.push_back(to_string(p.poly()));
      out.verdicts.push_back(std::move(verdict));
      cur = section(cur, p, settings.arithmetic);
      accepted = true;
    }
    if (!accepted)
      fail(ErrorKind::DegenerateAfterRetries, "no strongly general form at dimension " +
                                                  std::to_string(cur.dim()));
  }
  if (cur.smoothability() != Smoothability::IsolatedSmoothable)
    fail(ErrorKind::HypothesisViolation, "surface section does not admit a smoothing");
  if (!is_eids(cur, settings.arithmetic).eids)
    fail(ErrorKind::HypothesisViolation, "surface section is not an EIDS");
  out.invariants = invariant_chain(cur, derive_seed(seed, "surface-chain"), settings);
  out.surface = std::move(cur);
  return out;
}

InvarianceReport section_invariance_check(const DetVariety& v, std::uint64_t seed1,
                                          std::uint64_t seed2, const Settings& settings) {
  InvarianceReport r;
  r.first = generic_surface_section(v, seed1, settings);
  r.second = generic_surface_section(v, seed2, settings);
  r.mu_first = r.first.invariants.mu.value();
  r.mu_second = r.second.invariants.mu.value();
  r.equal = r.mu_first == r.mu_second;
  return r;
}

Poly tangent_cone(const Poly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "tangent cone of the zero polynomial");
  return f.homogeneous_part(f.lowest_degree());
}

}  // namespace detsing
