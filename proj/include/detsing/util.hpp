#pragma once

#include <string>
#include <vector>

#include "detsing/ideal.hpp"
#include "detsing/settings.hpp"

namespace detsing {

// Drops zeros and scalar multiples, keeping first occurrences.
std::vector<Poly> distinct_up_to_scalar(const std::vector<Poly>& polys);

template <class D>
std::vector<Polynomial<D>> convert_all(const std::vector<Poly>& polys) {
  std::vector<Polynomial<D>> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(convert<D>(p));
  return out;
}

inline std::vector<std::size_t> all_variables(const Ring& ring) {
  std::vector<std::size_t> v(ring.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

// Reduced Groebner basis as canonical strings.
template <class C>
std::vector<std::string> basis_strings(const BasicIdeal<C>& ideal) {
  std::vector<std::string> out;
  const BasicIdeal<C> gb = groebner_basis(ideal);
  for (const auto& g : gb.generators()) out.push_back(to_string(g));
  return out;
}

// Runs `fn` on the ideal in the requested coefficient field.
template <class Fn>
auto with_arithmetic(Arithmetic arithmetic, const Ideal& ideal, Fn&& fn) {
  if (arithmetic == Arithmetic::Modular) return fn(convert<Fp>(ideal));
  return fn(ideal);
}

}  // namespace detsing
