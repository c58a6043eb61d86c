#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "detsing/errors.hpp"
#include "detsing/field.hpp"
#include "detsing/monomial.hpp"

namespace detsing {

// Ordered list of variable names.  Rings compare equal when their variable
// lists do.
class Ring {
 public:
  explicit Ring(std::vector<std::string> vars);

  std::size_t size() const { return vars_.size(); }
  const std::string& name(std::size_t i) const { return vars_.at(i); }
  const std::vector<std::string>& names() const { return vars_; }
  std::optional<std::size_t> index(std::string_view name) const;
  // Index of `name`, failing with UnknownVariable.
  std::size_t require(std::string_view name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.vars_ == b.vars_;
  }

 private:
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars);
bool same_ring(const RingPtr& a, const RingPtr& b);
// A name not in `taken`, preferring `base`.
std::string fresh_name(const Ring& taken, const std::string& base);

// Sparse polynomial with coefficients in C (mpq_class or Fp).  Terms are kept
// strictly decreasing in degrevlex with no zero coefficients, so structural
// equality is mathematical equality.
template <class C>
class Polynomial {
 public:
  using Coeff = C;
  using Traits = FieldTraits<C>;
  struct Term {
    Monomial mono;
    C coeff;
  };

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const C& c) {
    Polynomial p(std::move(ring));
    if (!Traits::is_zero(c)) p.terms_.push_back({Monomial(), c});
    return p;
  }
  static Polynomial variable(RingPtr ring, std::size_t index) {
    Polynomial p(std::move(ring));
    p.terms_.push_back({Monomial::variable(index), Traits::one()});
    return p;
  }
  static Polynomial monomial(RingPtr ring, const Monomial& m, const C& c) {
    Polynomial p(std::move(ring));
    if (!Traits::is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }
  // Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max<int>(d, t.mono.degree());
    return d;
  }
  int lowest_degree() const {
    if (terms_.empty()) return -1;
    int d = terms_[0].mono.degree();
    for (const auto& t : terms_) d = std::min<int>(d, t.mono.degree());
    return d;
  }
  C constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return Traits::zero();
  }
  C coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return Traits::zero();
  }
  // Degree-k homogeneous component.
  Polynomial homogeneous_part(int k) const {
    Polynomial r(ring_);
    for (const auto& t : terms_)
      if (static_cast<int>(t.mono.degree()) == k) r.terms_.push_back(t);
    return r;
  }
  bool is_homogeneous() const {
    return terms_.empty() ||
           std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
             return t.mono.degree() == terms_[0].mono.degree();
           });
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    return combine(a, b, false);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return combine(a, b, true);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    return multiply(a, b);
  }
  friend Polynomial operator*(const C& c, const Polynomial& a) {
    if (Traits::is_zero(c)) return Polynomial(a.ring_);
    Polynomial r = a;
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned k) const {
    Polynomial r = constant(ring_, Traits::one());
    Polynomial base = *this;
    while (k) {
      if (k & 1u) r *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return r;
  }

  Polynomial derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      unsigned e = t.mono[var];
      if (e == 0) continue;
      Monomial m = t.mono;
      m.set(var, e - 1);
      out.push_back({m, t.coeff * C(static_cast<long>(e))});
    }
    return from_terms(ring_, std::move(out));
  }

  // Divides every term by the monomial m (which must divide each term).
  Polynomial divide_monomial(const Monomial& m) const {
    Polynomial r(ring_);
    for (const auto& t : terms_) r.terms_.push_back({t.mono / m, t.coeff});
    return r;
  }

  // Image under x_i -> images[i]; images live in a common target ring.
  Polynomial compose(const RingPtr& target,
                     const std::vector<Polynomial>& images) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono ||
          a.terms_[i].coeff != b.terms_[i].coeff)
        return false;
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

 private:
  static Polynomial combine(const Polynomial& a, const Polynomial& b,
                            bool subtract);
  static Polynomial multiply(const Polynomial& a, const Polynomial& b);

  RingPtr ring_;
  std::vector<Term> terms_;
};

using Poly = Polynomial<mpq_class>;
using PolyModp = Polynomial<Fp>;

const MonomialOrder& canonical_order(std::size_t nvars);

template <class C>
Polynomial<C> Polynomial<C>::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto order = MonomialOrder::degrevlex(ring ? ring->size() : 0);
  std::sort(terms.begin(), terms.end(), [&](const Term& x, const Term& y) {
    return order.greater(x.mono, y.mono);
  });
  Polynomial p(std::move(ring));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (Traits::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
    } else if (!Traits::is_zero(t.coeff)) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

template <class C>
Polynomial<C> Polynomial<C>::combine(const Polynomial& a, const Polynomial& b,
                                     bool subtract) {
  const RingPtr& ring = a.ring_ ? a.ring_ : b.ring_;
  if (a.ring_ && b.ring_ && !same_ring(a.ring_, b.ring_))
    fail(ErrorKind::RingMismatch, "polynomials live in different rings");
  const auto order = MonomialOrder::degrevlex(ring ? ring->size() : 0);
  Polynomial r(ring);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    int cmp;
    if (i == a.terms_.size())
      cmp = -1;
    else if (j == b.terms_.size())
      cmp = 1;
    else
      cmp = order.compare(a.terms_[i].mono, b.terms_[j].mono);
    if (cmp > 0) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (cmp < 0) {
      Term t = b.terms_[j++];
      if (subtract) t.coeff = -t.coeff;
      r.terms_.push_back(std::move(t));
    } else {
      C c = a.terms_[i].coeff;
      if (subtract)
        c -= b.terms_[j].coeff;
      else
        c += b.terms_[j].coeff;
      if (!Traits::is_zero(c)) r.terms_.push_back({a.terms_[i].mono, c});
      ++i;
      ++j;
    }
  }
  return r;
}

template <class C>
Polynomial<C> Polynomial<C>::multiply(const Polynomial& a, const Polynomial& b) {
  const RingPtr& ring = a.ring() ? a.ring() : b.ring();
  if (a.ring() && b.ring() && !same_ring(a.ring(), b.ring()))
    fail(ErrorKind::RingMismatch, "polynomials live in different rings");
  if (a.is_zero() || b.is_zero()) return Polynomial<C>(ring);
  std::unordered_map<Monomial, C, MonomialHash> acc;
  acc.reserve(a.terms().size() * b.terms().size());
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) {
      auto [it, inserted] = acc.try_emplace(x.mono * y.mono, x.coeff * y.coeff);
      if (!inserted) it->second += x.coeff * y.coeff;
    }
  std::vector<typename Polynomial<C>::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) terms.push_back({m, c});
  return Polynomial<C>::from_terms(ring, std::move(terms));
}

template <class C>
Polynomial<C> Polynomial<C>::compose(const RingPtr& target,
                                     const std::vector<Polynomial>& images) const {
  Polynomial result(target);
  // Cache powers of each image; entries are small in practice.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t var, unsigned e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, Traits::one()));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };
  for (const auto& t : terms_) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t v = 0; v < ring_->size(); ++v)
      if (t.mono[v] != 0) term = term * power(v, t.mono[v]);
    result += term;
  }
  return result;
}

// Coefficient-wise image of a rational polynomial in another field.
template <class D>
Polynomial<D> convert(const Poly& f) {
  if constexpr (std::is_same_v<D, mpq_class>) {
    return f;
  } else {
    std::vector<typename Polynomial<D>::Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms())
      terms.push_back({t.mono, FieldTraits<D>::from_rational(t.coeff)});
    return Polynomial<D>::from_terms(f.ring(), std::move(terms));
  }
}

// Canonical human-readable form, e.g. "y^3 + x^2 - 2*x*y".
std::string to_string(const Poly& f);
std::string to_string(const PolyModp& f);
std::string to_string(const Monomial& m, const Ring& ring);

// Parses `text` in the variables of `ring`.  Grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*
//   factor := atom ['^' integer]
//   atom   := integer ['/' integer] | variable | '(' expr ')'
// Juxtaposition multiplies ("2x y").  Errors carry the 1-based column.
Poly parse_poly(const RingPtr& ring, std::string_view text);

// Substitution by variable name.  Unmentioned variables map to the variable
// of the same name in the target ring (the ring of the assignment values, or
// `target` when given).
Poly substitute(const Poly& f, const std::map<std::string, Poly>& assignment,
                RingPtr target = nullptr);

// Degree-1 homogeneous polynomial: a hyperplane through the origin.
class LinearForm {
 public:
  explicit LinearForm(Poly p);
  static LinearForm from_coefficients(const RingPtr& ring,
                                      const std::vector<mpq_class>& coeffs);

  const Poly& poly() const { return poly_; }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }
  const RingPtr& ring() const { return poly_.ring(); }
  // Largest variable index with a nonzero coefficient.
  std::size_t pivot() const;

 private:
  Poly poly_;
  std::vector<mpq_class> coeffs_;
};

}  // namespace detsing
