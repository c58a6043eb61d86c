#include "detsing/swallowtail.hpp"

#include "detsing/poly_matrix.hpp"
#include "detsing/sections.hpp"
#include "detsing/util.hpp"

namespace detsing {

namespace {

template <class C>
void fill_locus(StratumTransversality& out, const BasicIdeal<C>& locus,
                const BasicIdeal<C>& singular) {
  BasicIdeal<C> cleaned = locus;
  // A finite singular set cannot change whether bad points accumulate at
  // the origin, so only curves of singular points are removed.
  if (dimension(singular) > 0) cleaned = saturate(locus, singular);
  out.locus = basis_strings(cleaned);
  out.locus_dim = dimension(cleaned);
  out.transversal = isolated_at_origin(cleaned);
}

// Ideal of the image of t -> (x(t), y(t), z(t)).
Ideal implicit_curve(const RingPtr& ring, const std::vector<std::string>& image) {
  RingPtr param = make_ring({"a", "x", "y", "z"});
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < image.size(); ++i)
    gens.push_back(Poly::variable(param, i + 1) - parse_poly(param, image[i]));
  return eliminate(Ideal(param, std::move(gens)), ring);
}

}  // namespace

StratumTransversality stratum_transversal(const Ideal& stratum, int codim, const LinearForm& p,
                                          Arithmetic arithmetic) {
  const RingPtr& ring = stratum.ring();
  if (!same_ring(ring, p.ring()))
    fail(ErrorKind::RingMismatch, "stratum and hyperplane live in different rings");
  StratumTransversality out;
  out.stratum_ideal = basis_strings(stratum);
  const std::vector<Poly> gens = distinct_up_to_scalar(stratum.generators());
  const PolyMatrix jac = jacobian(gens, ring);
  std::vector<std::vector<Poly>> rows;
  for (std::size_t i = 0; i < jac.rows(); ++i) {
    rows.emplace_back();
    for (std::size_t j = 0; j < jac.cols(); ++j) rows.back().push_back(jac(i, j));
  }
  std::vector<Poly> dp;
  for (std::size_t j = 0; j < ring->size(); ++j) dp.push_back(p.poly().derivative(j));
  rows.push_back(dp);
  const PolyMatrix stacked = PolyMatrix::from_rows(ring, std::move(rows));

  Ideal locus = stratum.with(distinct_up_to_scalar(stacked.minors(codim + 1)));
  Ideal singular = stratum.with(distinct_up_to_scalar(jac.minors(codim)));
  if (arithmetic == Arithmetic::Modular)
    fill_locus(out, convert<Fp>(locus), convert<Fp>(singular));
  else
    fill_locus(out, locus, singular);
  return out;
}

bool hyperplane_in_tangent_cone(const Poly& cone, const LinearForm& p) {
  const std::size_t pivot = p.pivot();
  auto [ring, assignment] = section_substitution(p, pivot);
  return substitute(cone, assignment, ring).is_zero();
}

Poly swallowtail_equation(const RingPtr& ring) {
  return parse_poly(ring,
                    "256*z^3 - 27*x^4 - 128*z^2*y^2 + 144*z*x^2*y + 16*z*y^4 - 4*x^2*y^3");
}

SwallowtailReport swallowtail_demo(Arithmetic arithmetic) {
  const RingPtr ring = make_ring({"x", "y", "z"});
  const Poly f = swallowtail_equation(ring);
  const Poly cone = tangent_cone(f);

  SwallowtailReport r;
  r.equation = to_string(f);
  r.tangent_cone = to_string(cone);

  const Ideal self_intersection = implicit_curve(ring, {"0", "-2*a^2", "a^4"});
  const Ideal cuspidal_edge = implicit_curve(ring, {"8*a^3", "-6*a^2", "-3*a^4"});
  r.stratum_names = {"self-intersection", "cuspidal edge"};
  r.stratum_ideals = {basis_strings(self_intersection), basis_strings(cuspidal_edge)};

  std::vector<Poly> sing_gens = partial_derivatives(f);
  sing_gens.push_back(f);
  const Ideal singular(ring, sing_gens);
  r.singular_locus_dim = dimension(singular);
  bool inside = self_intersection.contains(singular) && cuspidal_edge.contains(singular);
  bool exhausted = true;
  const Ideal both = intersect(self_intersection, cuspidal_edge);
  for (const auto& g : both.generators())
    exhausted = exhausted && radical_contains(singular, g);
  r.strata_cover_singular_locus = inside && exhausted;

  const Ideal regular(ring, {f});
  for (const char* name : {"z", "x"}) {
    const LinearForm p(parse_poly(ring, name));
    HyperplaneDemo h;
    h.form = name;
    auto [section_ring, assignment] = section_substitution(p, p.pivot());
    h.section_variables = section_ring->names();
    const Poly g = substitute(f, assignment, section_ring);
    h.section = to_string(g);
    h.reduced = is_reduced_principal(g);
    h.in_tangent_cone = hyperplane_in_tangent_cone(cone, p);
    h.strata.push_back(stratum_transversal(regular, 1, p, arithmetic));
    h.strata.back().stratum = "regular part";
    h.strata.push_back(stratum_transversal(self_intersection, 2, p, arithmetic));
    h.strata.back().stratum = r.stratum_names[0];
    h.strata.push_back(stratum_transversal(cuspidal_edge, 2, p, arithmetic));
    h.strata.back().stratum = r.stratum_names[1];
    r.hyperplanes.push_back(std::move(h));
  }
  return r;
}

}  // namespace detsing
