#include "detsing/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace detsing {

ResourceLimits ResourceLimits::from_env() {
  ResourceLimits limits;
  auto read = [](const char* name, auto& slot) {
    if (const char* v = std::getenv(name)) {
      char* end = nullptr;
      unsigned long long parsed = std::strtoull(v, &end, 10);
      if (end != v && *end == '\0' && parsed > 0)
        slot = static_cast<std::remove_reference_t<decltype(slot)>>(parsed);
    }
  };
  read("DETSING_MAX_BASIS", limits.max_basis_size);
  read("DETSING_MAX_DEGREE", limits.max_degree);
  read("DETSING_MAX_PAIRS", limits.max_pairs);
  return limits;
}

ResourceLimits& active_limits() {
  static ResourceLimits limits = ResourceLimits::from_env();
  return limits;
}

namespace {

// Polynomial sorted by the engine's monomial order.  `head` marks the first
// live term so leading terms can be dropped in O(1).
template <class K>
struct GPoly {
  std::vector<Monomial> mono;
  std::vector<K> coeff;
  std::size_t head = 0;
  unsigned sugar = 0;

  bool empty() const { return head >= mono.size(); }
  std::size_t size() const { return mono.size() - head; }
  const Monomial& lt() const { return mono[head]; }
  const K& lc() const { return coeff[head]; }
  void compact() {
    if (head == 0) return;
    mono.erase(mono.begin(), mono.begin() + static_cast<std::ptrdiff_t>(head));
    coeff.erase(coeff.begin(), coeff.begin() + static_cast<std::ptrdiff_t>(head));
    head = 0;
  }
};

// Coefficient arithmetic of the engine.  Over a prime field polynomials are
// kept monic.  Over the rationals they are kept as primitive integer
// polynomials with positive leading coefficient; reduction cross-multiplies
// instead of dividing, which avoids denominator blow-up.
template <class C>
struct FieldPolicy {
  using K = C;
  static K lift(const C& c) { return c; }
  static C lower(const K& k) { return k; }
  // Scales making a * lc(p) - b * lc(g) vanish; a_is_one skips a scaling.
  static void factors(const K& cp, const K& cg, K& a, K& b, bool& a_is_one) {
    a_is_one = true;
    b = cp / cg;
    (void)a;
  }
  static void normalize(GPoly<K>& p) {
    if (p.empty()) return;
    K inv = FieldTraits<C>::one() / p.lc();
    for (std::size_t i = p.head; i < p.mono.size(); ++i) p.coeff[i] *= inv;
  }
  static bool is_zero(const K& k) { return FieldTraits<C>::is_zero(k); }
  static std::vector<K> scaled(const std::vector<const C*>& cs) {
    std::vector<K> out;
    for (auto* c : cs) out.push_back(*c);
    return out;
  }
};

struct IntegerPolicy {
  using K = mpz_class;
  static void factors(const K& cp, const K& cg, K& a, K& b, bool& a_is_one) {
    K g = gcd(cp, cg);
    a = cg / g;
    b = cp / g;
    a_is_one = a == 1;
  }
  static void normalize(GPoly<K>& p) {
    if (p.empty()) return;
    K content = 0;
    for (std::size_t i = p.head; i < p.mono.size() && content != 1; ++i)
      content = gcd(content, p.coeff[i]);
    if (sgn(p.lc()) < 0) content = -content;
    if (content == 1) return;
    for (std::size_t i = p.head; i < p.mono.size(); ++i)
      mpz_divexact(p.coeff[i].get_mpz_t(), p.coeff[i].get_mpz_t(), content.get_mpz_t());
  }
  static bool is_zero(const K& k) { return sgn(k) == 0; }
  // Clears denominators of a rational coefficient list.
  static std::vector<K> scaled(const std::vector<const mpq_class*>& cs) {
    K l = 1;
    for (auto* c : cs) l = lcm(l, K(c->get_den()));
    std::vector<K> out;
    for (auto* c : cs) out.push_back(K(c->get_num() * (l / c->get_den())));
    return out;
  }
};

template <class C>
struct PolicyFor {
  using type = FieldPolicy<C>;
};
template <>
struct PolicyFor<mpq_class> {
  using type = IntegerPolicy;
};

template <class P, class C>
GPoly<typename P::K> to_gpoly(const Polynomial<C>& f, const MonomialOrder& order) {
  GPoly<typename P::K> g;
  std::vector<const typename Polynomial<C>::Term*> terms;
  for (const auto& t : f.terms()) terms.push_back(&t);
  if (order.eliminated() != 0)
    std::stable_sort(terms.begin(), terms.end(), [&](auto* a, auto* b) {
      return order.greater(a->mono, b->mono);
    });
  std::vector<const C*> cs;
  for (auto* t : terms) {
    g.mono.push_back(t->mono);
    cs.push_back(&t->coeff);
  }
  g.coeff = P::scaled(cs);
  g.sugar = static_cast<unsigned>(std::max(0, f.total_degree()));
  return g;
}

// Monic polynomial over C from an engine polynomial.
template <class C, class K>
Polynomial<C> from_gpoly(const RingPtr& ring, const GPoly<K>& g) {
  std::vector<typename Polynomial<C>::Term> terms;
  if (g.empty()) return Polynomial<C>(ring);
  for (std::size_t i = g.head; i < g.mono.size(); ++i) {
    if constexpr (std::is_same_v<K, mpz_class>) {
      mpq_class q(g.coeff[i], g.lc());
      q.canonicalize();
      terms.push_back({g.mono[i], q});
    } else {
      terms.push_back({g.mono[i], g.coeff[i] / g.lc()});
    }
  }
  return Polynomial<C>::from_terms(ring, std::move(terms));
}

// Returns a * p[1..] - b * m * g[1..] (a = 1 when a_is_one): the leading
// terms are assumed to cancel and are dropped.
template <class K>
GPoly<K> reduce_step(const GPoly<K>& p, const K& a, bool a_is_one, const K& b,
                     const Monomial& m, const GPoly<K>& g, const MonomialOrder& order) {
  GPoly<K> r;
  r.sugar = std::max(p.sugar, g.sugar + m.degree());
  std::size_t i = p.head + 1, j = g.head + 1;
  r.mono.reserve(p.size() + g.size());
  r.coeff.reserve(p.size() + g.size());
  auto scaled_p = [&](std::size_t k) -> K { return a_is_one ? p.coeff[k] : K(a * p.coeff[k]); };
  while (i < p.mono.size() || j < g.mono.size()) {
    if (j >= g.mono.size()) {
      r.mono.push_back(p.mono[i]);
      r.coeff.push_back(scaled_p(i));
      ++i;
      continue;
    }
    Monomial gm = g.mono[j] * m;
    int cmp = i < p.mono.size() ? order.compare(p.mono[i], gm) : -1;
    if (cmp > 0) {
      r.mono.push_back(p.mono[i]);
      r.coeff.push_back(scaled_p(i));
      ++i;
    } else if (cmp < 0) {
      r.mono.push_back(gm);
      r.coeff.push_back(K(-(b * g.coeff[j])));
      ++j;
    } else {
      K v = scaled_p(i);
      v -= b * g.coeff[j];
      if (!(v == K())) {
        r.mono.push_back(gm);
        r.coeff.push_back(std::move(v));
      }
      ++i;
      ++j;
    }
  }
  return r;
}

// Reduces p by g at its leading term.
template <class P>
GPoly<typename P::K> reduce_lead(const GPoly<typename P::K>& p, const GPoly<typename P::K>& g,
                                 const MonomialOrder& order) {
  typename P::K a, b;
  bool a_is_one;
  P::factors(p.lc(), g.lc(), a, b, a_is_one);
  return reduce_step(p, a, a_is_one, b, p.lt() / g.lt(), g, order);
}

template <class P>
class Engine {
 public:
  using K = typename P::K;

  Engine(const MonomialOrder& order, const ResourceLimits& limits)
      : order_(order), limits_(limits) {}

  // Index of the shortest active reducer whose leading monomial divides m.
  long find_reducer(const Monomial& m, std::uint32_t mask) const {
    long best = -1;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (!active_[k]) continue;
      if ((masks_[k] & ~mask) != 0) continue;
      if (!polys_[k].lt().divides(m)) continue;
      if (best < 0 || polys_[k].size() < polys_[static_cast<std::size_t>(best)].size())
        best = static_cast<long>(k);
    }
    return best;
  }

  void top_reduce(GPoly<K>& p) const {
    unsigned steps = 0;
    while (!p.empty()) {
      long k = find_reducer(p.lt(), p.lt().support());
      if (k < 0) break;
      p = reduce_lead<P>(p, polys_[static_cast<std::size_t>(k)], order_);
      if (++steps % 8 == 0) P::normalize(p);
    }
    P::normalize(p);
  }

  // Reduces every term of p after the first `keep` against `using_set`.
  GPoly<K> full_reduce(GPoly<K> p, const std::vector<std::size_t>& using_set,
                       std::size_t keep) const {
    GPoly<K> out;
    out.sugar = p.sugar;
    for (std::size_t k = 0; k < keep && !p.empty(); ++k) {
      out.mono.push_back(p.lt());
      out.coeff.push_back(p.lc());
      ++p.head;
    }
    unsigned steps = 0;
    while (!p.empty()) {
      const Monomial& lt = p.lt();
      std::uint32_t mask = lt.support();
      long best = -1;
      for (std::size_t k : using_set) {
        if ((masks_[k] & ~mask) != 0 || !polys_[k].lt().divides(lt)) continue;
        if (best < 0 || polys_[k].size() < polys_[static_cast<std::size_t>(best)].size())
          best = static_cast<long>(k);
      }
      if (best < 0) {
        out.mono.push_back(p.lt());
        out.coeff.push_back(p.lc());
        ++p.head;
        continue;
      }
      const GPoly<K>& g = polys_[static_cast<std::size_t>(best)];
      K a, b;
      bool a_is_one;
      P::factors(p.lc(), g.lc(), a, b, a_is_one);
      if (!a_is_one)
        for (auto& c : out.coeff) c *= a;
      p = reduce_step(p, a, a_is_one, b, lt / g.lt(), g, order_);
      if (++steps % 8 == 0 && !a_is_one) {
        // Joint content of the finished and pending parts.
        GPoly<K> joint;
        joint.mono = out.mono;
        joint.coeff = out.coeff;
        joint.mono.insert(joint.mono.end(), p.mono.begin() + static_cast<long>(p.head), p.mono.end());
        joint.coeff.insert(joint.coeff.end(), p.coeff.begin() + static_cast<long>(p.head), p.coeff.end());
        P::normalize(joint);
        const std::size_t split = out.mono.size();
        out.coeff.assign(joint.coeff.begin(), joint.coeff.begin() + static_cast<long>(split));
        std::copy(joint.coeff.begin() + static_cast<long>(split), joint.coeff.end(),
                  p.coeff.begin() + static_cast<long>(p.head));
      }
    }
    P::normalize(out);
    return out;
  }

  bool run(std::vector<GPoly<K>> inputs) {
    std::sort(inputs.begin(), inputs.end(), [&](const GPoly<K>& a, const GPoly<K>& b) {
      return order_.greater(b.lt(), a.lt());
    });
    for (auto& f : inputs) {
      top_reduce(f);
      if (f.empty()) continue;
      if (f.lt().is_one()) return true;
      f.compact();
      insert(std::move(f));
    }
    while (!pairs_.empty()) {
      auto it = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        return order_.greater(b.lcm, a.lcm);
      });
      Pair pair = *it;
      *it = pairs_.back();
      pairs_.pop_back();

      GPoly<K> s = spoly(pair);
      top_reduce(s);
      if (s.empty()) continue;
      if (s.lt().is_one()) return true;
      s.compact();
      insert(std::move(s));
    }
    return false;
  }

  // Minimal, interreduced basis sorted by increasing leading monomial.
  std::vector<GPoly<K>> reduced_basis() const {
    std::vector<std::size_t> minimal;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (!active_[k]) continue;
      bool redundant = false;
      for (std::size_t j = 0; j < polys_.size() && !redundant; ++j) {
        if (j == k || !active_[j]) continue;
        if (polys_[j].lt().divides(polys_[k].lt()) &&
            (polys_[j].lt() != polys_[k].lt() || j < k))
          redundant = true;
      }
      if (!redundant) minimal.push_back(k);
    }
    std::vector<GPoly<K>> out;
    for (std::size_t k : minimal) {
      std::vector<std::size_t> others;
      for (std::size_t j : minimal)
        if (j != k) others.push_back(j);
      out.push_back(full_reduce(polys_[k], others, 1));
    }
    std::sort(out.begin(), out.end(), [&](const GPoly<K>& a, const GPoly<K>& b) {
      return order_.greater(b.lt(), a.lt());
    });
    return out;
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    unsigned sugar;
  };

  GPoly<K> spoly(const Pair& p) const {
    const GPoly<K>& a = polys_[p.i];
    const GPoly<K>& b = polys_[p.j];
    Monomial ma = p.lcm / a.lt();
    GPoly<K> shifted;
    shifted.sugar = a.sugar + ma.degree();
    for (std::size_t k = a.head; k < a.mono.size(); ++k) {
      shifted.mono.push_back(a.mono[k] * ma);
      shifted.coeff.push_back(a.coeff[k]);
    }
    return reduce_lead<P>(shifted, b, order_);
  }

  unsigned pair_sugar(std::size_t i, std::size_t j, const Monomial& lcm) const {
    unsigned si = polys_[i].sugar + lcm.degree() - polys_[i].lt().degree();
    unsigned sj = polys_[j].sugar + lcm.degree() - polys_[j].lt().degree();
    return std::max(si, sj);
  }

  // Gebauer-Moeller update.
  void insert(GPoly<K> h) {
    const std::size_t hk = polys_.size();
    const Monomial hlt = h.lt();
    polys_.push_back(std::move(h));
    active_.push_back(true);
    masks_.push_back(hlt.support());

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Cand> cands;
    for (std::size_t g = 0; g < hk; ++g) {
      if (!active_[g]) continue;
      cands.push_back({g, Monomial::lcm(hlt, polys_[g].lt()),
                       Monomial::coprime(hlt, polys_[g].lt())});
    }
    // Chain criterion among the new pairs.
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (cands[a].coprime) continue;
      for (std::size_t b = 0; b < cands.size(); ++b) {
        if (a == b || !cands[b].keep) continue;
        if (!cands[b].lcm.divides(cands[a].lcm)) continue;
        // Equal lcms: keep exactly one (the later index).
        if (cands[b].lcm == cands[a].lcm && b < a) continue;
        cands[a].keep = false;
        break;
      }
    }
    // Old pairs made redundant by h.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (const Pair& p : pairs_) {
      if (hlt.divides(p.lcm) &&
          Monomial::lcm(polys_[p.i].lt(), hlt) != p.lcm &&
          Monomial::lcm(polys_[p.j].lt(), hlt) != p.lcm)
        continue;
      kept.push_back(p);
    }
    pairs_ = std::move(kept);
    for (const Cand& c : cands) {
      if (!c.keep || c.coprime) continue;
      pairs_.push_back({c.g, hk, c.lcm, pair_sugar(c.g, hk, c.lcm)});
      if (pairs_.back().sugar > limits_.max_degree)
        fail(ErrorKind::ResourceLimit,
             "Groebner basis degree cap " + std::to_string(limits_.max_degree) + " exceeded");
    }
    for (std::size_t g = 0; g < hk; ++g)
      if (active_[g] && hlt.divides(polys_[g].lt())) active_[g] = false;

    std::size_t count = static_cast<std::size_t>(std::count(active_.begin(), active_.end(), true));
    if (count > limits_.max_basis_size)
      fail(ErrorKind::ResourceLimit,
           "Groebner basis size cap " + std::to_string(limits_.max_basis_size) + " exceeded");
    if (pairs_.size() > limits_.max_pairs)
      fail(ErrorKind::ResourceLimit,
           "critical pair cap " + std::to_string(limits_.max_pairs) + " exceeded");
  }

  MonomialOrder order_;
  ResourceLimits limits_;
  std::vector<GPoly<K>> polys_;
  std::vector<bool> active_;
  std::vector<std::uint32_t> masks_;
  std::vector<Pair> pairs_;
};

}  // namespace

template <class C>
GroebnerBasis<C>::GroebnerBasis(RingPtr ring, MonomialOrder order,
                                std::vector<Polynomial<C>> elements,
                                std::vector<Monomial> leading)
    : ring_(std::move(ring)),
      order_(order),
      elements_(std::move(elements)),
      leading_(std::move(leading)) {}

template <class C>
bool GroebnerBasis<C>::in_leading_ideal(const Monomial& m) const {
  for (const auto& l : leading_)
    if (l.divides(m)) return true;
  return false;
}

template <class C>
Polynomial<C> GroebnerBasis<C>::normal_form(const Polynomial<C>& f) const {
  using P = typename PolicyFor<C>::type;
  using K = typename P::K;
  if (f.is_zero() || elements_.empty()) return f;
  if (is_unit()) return Polynomial<C>(ring_);
  std::vector<GPoly<K>> basis;
  basis.reserve(elements_.size());
  for (const auto& e : elements_) basis.push_back(to_gpoly<P>(e, order_));
  GPoly<K> p = to_gpoly<P>(f, order_);
  // p and out stay equal to scale * (f - reductions); scale is undone at the end.
  C scale = C(p.lc());
  for (const auto& t : f.terms())
    if (t.mono == p.lt()) scale /= t.coeff;
  GPoly<K> out;
  while (!p.empty()) {
    const Monomial& lt = p.lt();
    long best = -1;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (leading_[k].divides(lt)) {
        best = static_cast<long>(k);
        break;
      }
    if (best < 0) {
      out.mono.push_back(p.lt());
      out.coeff.push_back(p.lc());
      ++p.head;
      continue;
    }
    const auto& g = basis[static_cast<std::size_t>(best)];
    K a, b;
    bool a_is_one;
    P::factors(p.lc(), g.lc(), a, b, a_is_one);
    if (!a_is_one) {
      for (auto& c : out.coeff) c *= a;
      scale *= C(a);
    }
    p = reduce_step(p, a, a_is_one, b, lt / g.lt(), g, order_);
  }
  if (out.empty()) return Polynomial<C>(ring_);
  return (C(out.lc()) / scale) * from_gpoly<C>(ring_, out);
}

template <class C>
GroebnerBasis<C> compute_groebner_basis(const RingPtr& ring,
                                        const std::vector<Polynomial<C>>& gens,
                                        const MonomialOrder& order) {
  using P = typename PolicyFor<C>::type;
  std::vector<GPoly<typename P::K>> inputs;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!same_ring(g.ring(), ring))
      fail(ErrorKind::RingMismatch, "generator outside the ideal's ring");
    inputs.push_back(to_gpoly<P>(g, order));
  }
  if (inputs.empty()) return GroebnerBasis<C>(ring, order, {}, {});
  Engine<P> engine(order, active_limits());
  if (engine.run(std::move(inputs))) {
    return GroebnerBasis<C>(ring, order,
                            {Polynomial<C>::constant(ring, FieldTraits<C>::one())},
                            {Monomial()});
  }
  std::vector<Polynomial<C>> elements;
  std::vector<Monomial> leading;
  for (auto& g : engine.reduced_basis()) {
    leading.push_back(g.lt());
    elements.push_back(from_gpoly<C>(ring, g));
  }
  return GroebnerBasis<C>(ring, order, std::move(elements), std::move(leading));
}

template class GroebnerBasis<mpq_class>;
template class GroebnerBasis<Fp>;
template GroebnerBasis<mpq_class> compute_groebner_basis(
    const RingPtr&, const std::vector<Polynomial<mpq_class>>&, const MonomialOrder&);
template GroebnerBasis<Fp> compute_groebner_basis(const RingPtr&,
                                                  const std::vector<Polynomial<Fp>>&,
                                                  const MonomialOrder&);

}  // namespace detsing
