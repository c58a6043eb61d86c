#pragma once

#include <string>
#include <vector>

#include "detsing/ideal.hpp"
#include "detsing/settings.hpp"

namespace detsing {

// Transversality of ker p to a smooth stratum S of codimension c, away from
// the origin: the points of S where dp is dependent on the differentials of
// S, minus the singular points of S itself.
struct StratumTransversality {
  std::string stratum;
  std::vector<std::string> stratum_ideal;
  std::vector<std::string> locus;  // reduced basis of the saturated locus
  int locus_dim = -1;
  bool transversal = false;  // the origin is not a limit of locus points
};

StratumTransversality stratum_transversal(const Ideal& stratum, int codim, const LinearForm& p,
                                          Arithmetic arithmetic = Arithmetic::Rational);

// p divides the tangent cone polynomial, so ker p is a component of the cone.
bool hyperplane_in_tangent_cone(const Poly& cone, const LinearForm& p);

struct HyperplaneDemo {
  std::string form;
  std::vector<std::string> section_variables;
  std::string section;  // the equation restricted to ker p
  bool reduced = false;
  bool in_tangent_cone = false;
  std::vector<StratumTransversality> strata;
};

struct SwallowtailReport {
  std::string equation;
  std::string tangent_cone;
  // Parametrized one-dimensional strata with their implicit ideals.
  std::vector<std::string> stratum_names;
  std::vector<std::vector<std::string>> stratum_ideals;
  // Each stratum lies in the singular locus and together they exhaust it.
  bool strata_cover_singular_locus = false;
  int singular_locus_dim = -1;
  std::vector<HyperplaneDemo> hyperplanes;  // z, then x
};

// The swallowtail surface in (x, y, z).
Poly swallowtail_equation(const RingPtr& ring);

SwallowtailReport swallowtail_demo(Arithmetic arithmetic = Arithmetic::Rational);

}  // namespace detsing
