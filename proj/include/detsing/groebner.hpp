#pragma once

#include <cstddef>
#include <vector>

#include "detsing/monomial.hpp"
#include "detsing/poly.hpp"

namespace detsing {

// Hard caps on Groebner computations.  Exceeding one raises
// ErrorKind::ResourceLimit; there is no partial answer.
struct ResourceLimits {
  std::size_t max_basis_size = 20000;
  unsigned max_degree = 200;
  std::size_t max_pairs = 2000000;

  // Defaults overridden by DETSING_MAX_BASIS, DETSING_MAX_DEGREE and
  // DETSING_MAX_PAIRS when set.
  static ResourceLimits from_env();
};

// Process-wide limits used by every ideal operation.  Set once at startup
// (the CLI does this); reads are unsynchronized.
ResourceLimits& active_limits();

// A reduced Groebner basis: monic, interreduced, sorted by increasing leading
// monomial.  Immutable once built.
template <class C>
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, MonomialOrder order,
                std::vector<Polynomial<C>> elements,
                std::vector<Monomial> leading);

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial<C>>& elements() const { return elements_; }
  const std::vector<Monomial>& leading_monomials() const { return leading_; }
  bool is_unit() const {
    return leading_.size() == 1 && leading_[0].is_one();
  }

  // Fully reduced remainder of f; zero iff f lies in the ideal.
  Polynomial<C> normal_form(const Polynomial<C>& f) const;
  bool contains(const Polynomial<C>& f) const { return normal_form(f).is_zero(); }
  // True iff some leading monomial divides m.
  bool in_leading_ideal(const Monomial& m) const;

 private:
  RingPtr ring_;
  MonomialOrder order_;
  std::vector<Polynomial<C>> elements_;
  std::vector<Monomial> leading_;
};

template <class C>
GroebnerBasis<C> compute_groebner_basis(const RingPtr& ring,
                                        const std::vector<Polynomial<C>>& gens,
                                        const MonomialOrder& order);

}  // namespace detsing
