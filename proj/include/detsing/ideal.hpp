#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "detsing/groebner.hpp"
#include "detsing/poly.hpp"

namespace detsing {

// Ideal given by generators, with a write-once degrevlex Groebner basis cache
// shared between copies of the same value.
template <class C>
class BasicIdeal {
 public:
  using Polynomial = detsing::Polynomial<C>;

  BasicIdeal() = default;
  BasicIdeal(RingPtr ring, std::vector<Polynomial> gens);

  static BasicIdeal unit(const RingPtr& ring);
  static BasicIdeal zero(const RingPtr& ring) { return BasicIdeal(ring, {}); }
  // The maximal ideal of the origin, generated by all variables.
  static BasicIdeal origin(const RingPtr& ring);
  // Adopts `gb` as both generators and cached basis.
  static BasicIdeal from_basis(GroebnerBasis<C> gb);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const GroebnerBasis<C>& groebner() const;
  bool has_cached_basis() const;

  bool is_unit() const { return groebner().is_unit(); }
  bool contains(const Polynomial& f) const { return groebner().contains(f); }
  bool contains(const BasicIdeal& other) const;
  // Every generator vanishes at the origin.
  bool vanishes_at_origin() const;

  BasicIdeal operator+(const BasicIdeal& other) const;
  BasicIdeal with(const std::vector<Polynomial>& extra) const;

 private:
  struct Cache {
    std::once_flag once;
    GroebnerBasis<C> gb;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

using Ideal = BasicIdeal<mpq_class>;
using IdealModp = BasicIdeal<Fp>;

template <class D>
BasicIdeal<D> convert(const Ideal& ideal) {
  std::vector<Polynomial<D>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(convert<D>(g));
  return BasicIdeal<D>(ideal.ring(), std::move(gens));
}

// Ideal with its reduced degrevlex basis as generators.
template <class C>
BasicIdeal<C> groebner_basis(const BasicIdeal<C>& ideal);

// Same ideal: mutual containment.
template <class C>
bool ideals_equal(const BasicIdeal<C>& a, const BasicIdeal<C>& b);

// Krull dimension of the quotient ring; -1 for the unit ideal.
template <class C>
int dimension(const BasicIdeal<C>& ideal);

// Standard monomials of a zero-dimensional ideal (NotZeroDimensional
// otherwise), in increasing degrevlex order.
template <class C>
std::vector<Monomial> standard_monomials(const BasicIdeal<C>& ideal);

// Vector-space dimension of the quotient of a zero-dimensional ideal.
template <class C>
std::size_t quotient_count(const BasicIdeal<C>& ideal);

// I : g^infinity.
template <class C>
BasicIdeal<C> saturate(const BasicIdeal<C>& ideal, const Polynomial<C>& g);
// I : J^infinity.
template <class C>
BasicIdeal<C> saturate(const BasicIdeal<C>& ideal, const BasicIdeal<C>& by);

template <class C>
BasicIdeal<C> intersect(const BasicIdeal<C>& a, const BasicIdeal<C>& b);

// I intersected with the polynomials in the variables of `target`, which must
// all be variables of I's ring; the others are eliminated.
template <class C>
BasicIdeal<C> eliminate(const BasicIdeal<C>& ideal, const RingPtr& target);

// g vanishes on V(I): I : g^infinity is the unit ideal.
template <class C>
bool radical_contains(const BasicIdeal<C>& ideal, const Polynomial<C>& g);

// Length of the origin-primary component of a zero-dimensional ideal; zero
// when the origin is not a solution.
template <class C>
std::size_t local_count_at_origin(const BasicIdeal<C>& ideal);

// dim <= 0 and every solution sits at the origin.
template <class C>
bool zero_set_within_origin(const BasicIdeal<C>& ideal);

// The origin is not a limit of other points of V(I): it is either outside
// V(I) or an isolated point of it.
template <class C>
bool isolated_at_origin(const BasicIdeal<C>& ideal);

// Squarefree test: the common zeros of f and its partials have codimension
// at least two.  Fails with ZeroPolynomial on f = 0.
bool is_reduced_principal(const Poly& f);

// Colength of the Jacobian ideal; NotIsolated when it is not
// zero-dimensional.
std::size_t milnor_number_isolated_hypersurface(const Poly& f);

// Gradient ideal generators.
template <class C>
std::vector<Polynomial<C>> partial_derivatives(const Polynomial<C>& f);

Ideal substitute(const Ideal& ideal, const std::map<std::string, Poly>& assignment,
                 RingPtr target = nullptr);

}  // namespace detsing
