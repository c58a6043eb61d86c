#include "detsing/ideal.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "detsing/random.hpp"

namespace detsing {

template <class C>
BasicIdeal<C>::BasicIdeal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!same_ring(g.ring(), ring_))
      fail(ErrorKind::RingMismatch, "generator outside the ideal's ring");
    gens_.push_back(std::move(g));
  }
}

template <class C>
BasicIdeal<C> BasicIdeal<C>::unit(const RingPtr& ring) {
  return BasicIdeal(ring, {Polynomial::constant(ring, FieldTraits<C>::one())});
}

template <class C>
BasicIdeal<C> BasicIdeal<C>::origin(const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->size(); ++i)
    gens.push_back(Polynomial::variable(ring, i));
  return BasicIdeal(ring, std::move(gens));
}

template <class C>
BasicIdeal<C> BasicIdeal<C>::from_basis(GroebnerBasis<C> gb) {
  BasicIdeal ideal(gb.ring(), gb.elements());
  std::call_once(ideal.cache_->once, [&] { ideal.cache_->gb = std::move(gb); });
  return ideal;
}

template <class C>
const GroebnerBasis<C>& BasicIdeal<C>::groebner() const {
  std::call_once(cache_->once, [&] {
    cache_->gb = compute_groebner_basis(ring_, gens_, canonical_order(ring_->size()));
  });
  return cache_->gb;
}

template <class C>
bool BasicIdeal<C>::has_cached_basis() const {
  // once_flag has no query; a populated ring pointer marks completion.
  return cache_->gb.ring() != nullptr;
}

template <class C>
bool BasicIdeal<C>::contains(const BasicIdeal& other) const {
  const auto& gb = groebner();
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Polynomial& f) { return gb.contains(f); });
}

template <class C>
bool BasicIdeal<C>::vanishes_at_origin() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& f) {
    return FieldTraits<C>::is_zero(f.constant_term());
  });
}

template <class C>
BasicIdeal<C> BasicIdeal<C>::operator+(const BasicIdeal& other) const {
  if (!same_ring(ring_, other.ring_))
    fail(ErrorKind::RingMismatch, "sum of ideals in different rings");
  return with(other.gens_);
}

template <class C>
BasicIdeal<C> BasicIdeal<C>::with(const std::vector<Polynomial>& extra) const {
  std::vector<Polynomial> gens = gens_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return BasicIdeal(ring_, std::move(gens));
}

template <class C>
BasicIdeal<C> groebner_basis(const BasicIdeal<C>& ideal) {
  return BasicIdeal<C>::from_basis(ideal.groebner());
}

template <class C>
bool ideals_equal(const BasicIdeal<C>& a, const BasicIdeal<C>& b) {
  return a.contains(b) && b.contains(a);
}

template <class C>
int dimension(const BasicIdeal<C>& ideal) {
  const auto& gb = ideal.groebner();
  const std::size_t n = ideal.ring()->size();
  if (gb.is_unit()) return -1;
  std::vector<std::uint32_t> supports;
  for (const auto& m : gb.leading_monomials()) supports.push_back(m.support());
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  // Largest variable set containing no leading-monomial support.
  int best = 0;
  const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1u);
  for (std::uint32_t s = full;; --s) {
    int size = std::popcount(s);
    if (size > best) {
      bool independent = std::none_of(supports.begin(), supports.end(),
                                      [&](std::uint32_t sup) { return (sup & ~s) == 0; });
      if (independent) best = size;
    }
    if (s == 0) break;
  }
  return best;
}

template <class C>
std::vector<Monomial> standard_monomials(const BasicIdeal<C>& ideal) {
  int d = dimension(ideal);
  if (d > 0)
    fail(ErrorKind::NotZeroDimensional,
         "ideal has dimension " + std::to_string(d));
  std::vector<Monomial> out;
  if (d < 0) return out;
  const auto& gb = ideal.groebner();
  const std::size_t n = ideal.ring()->size();
  std::vector<std::pair<Monomial, std::size_t>> stack{{Monomial(), 0}};
  while (!stack.empty()) {
    auto [m, last] = stack.back();
    stack.pop_back();
    out.push_back(m);
    for (std::size_t i = last; i < n; ++i) {
      Monomial next = m * Monomial::variable(i);
      if (!gb.in_leading_ideal(next)) stack.push_back({next, i});
    }
  }
  const auto& order = canonical_order(n);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return order.greater(b, a); });
  return out;
}

template <class C>
std::size_t quotient_count(const BasicIdeal<C>& ideal) {
  return standard_monomials(ideal).size();
}

namespace {

template <class C>
Polynomial<C> shift_variables(const Polynomial<C>& f, const RingPtr& target, int offset) {
  std::vector<typename Polynomial<C>::Term> terms;
  terms.reserve(f.terms().size());
  const std::size_t n = f.ring()->size();
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < n; ++i) {
      if (t.mono[i] == 0) continue;
      m.set(static_cast<std::size_t>(static_cast<long>(i) + offset), t.mono[i]);
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial<C>::from_terms(target, std::move(terms));
}

// Ring with one extra leading variable to be eliminated.
RingPtr prepend_variable(const RingPtr& ring, const std::string& base) {
  std::vector<std::string> names{fresh_name(*ring, base)};
  names.insert(names.end(), ring->names().begin(), ring->names().end());
  return make_ring(std::move(names));
}

// Groebner basis (in `ring`, degrevlex) of the elimination ideal obtained by
// dropping the leading variable of `extended`.
template <class C>
BasicIdeal<C> eliminate_leading(const RingPtr& ring, const RingPtr& extended,
                                const std::vector<Polynomial<C>>& gens) {
  const std::size_t n = extended->size();
  auto gb = compute_groebner_basis(extended, gens, MonomialOrder::elimination(n, 1));
  std::vector<Polynomial<C>> kept;
  std::vector<Monomial> leading;
  for (std::size_t k = 0; k < gb.elements().size(); ++k) {
    const Monomial& lt = gb.leading_monomials()[k];
    if (lt[0] != 0) continue;
    kept.push_back(shift_variables(gb.elements()[k], ring, -1));
    Monomial m;
    for (std::size_t i = 1; i < n; ++i)
      if (lt[i]) m.set(i - 1, lt[i]);
    leading.push_back(m);
  }
  if (kept.empty()) return BasicIdeal<C>::zero(ring);
  // Sort by degrevlex leading monomial to keep the GroebnerBasis invariant.
  std::vector<std::size_t> idx(kept.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  const auto& order = canonical_order(ring->size());
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return order.greater(leading[b], leading[a]);
  });
  std::vector<Polynomial<C>> el;
  std::vector<Monomial> lm;
  for (auto i : idx) {
    el.push_back(kept[i]);
    lm.push_back(leading[i]);
  }
  return BasicIdeal<C>::from_basis(
      GroebnerBasis<C>(ring, canonical_order(ring->size()), std::move(el), std::move(lm)));
}

// I : l^inf for a linear form l without constant term.  Coordinates are
// changed so that l becomes the variable u, ordered last after a
// homogenizing variable; in a degrevlex basis of the homogenized ideal the
// saturation by u is division of each element by its largest power of u
// (Bayer).  Setting the homogenizing variable to 1 and u back to l commutes
// with saturation by u, so the result is exact.
template <class C>
BasicIdeal<C> saturate_linear(const BasicIdeal<C>& ideal, const Polynomial<C>& l) {
  const RingPtr& ring = ideal.ring();
  const std::size_t n = ring->size();
  // Pivot q: the last variable of l; x_q = (u - sum_{j != q} a_j x_j) / a_q.
  std::vector<C> a(n, FieldTraits<C>::zero());
  for (const auto& t : l.terms())
    for (std::size_t i = 0; i < n; ++i)
      if (t.mono[i]) a[i] = t.coeff;
  std::size_t q = n;
  for (std::size_t i = n; i-- > 0;)
    if (!FieldTraits<C>::is_zero(a[i])) {
      q = i;
      break;
    }
  // Working ring: the other variables in order, then h, then u.
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    if (i != q) names.push_back(ring->name(i));
  names.push_back(fresh_name(*ring, "hom"));
  names.push_back(fresh_name(*ring, "sat"));
  RingPtr work = make_ring(names);
  const std::size_t hi = n - 1, ui = n;
  auto slot = [&](std::size_t i) { return i < q ? i : i - 1; };

  std::vector<Polynomial<C>> image(n, Polynomial<C>(work));
  for (std::size_t i = 0; i < n; ++i) {
    if (i != q) {
      image[i] = Polynomial<C>::variable(work, slot(i));
      continue;
    }
    const C inv = FieldTraits<C>::one() / a[q];
    Polynomial<C> v = inv * Polynomial<C>::variable(work, ui);
    for (std::size_t j = 0; j < n; ++j)
      if (j != q && !FieldTraits<C>::is_zero(a[j]))
        v -= (a[j] * inv) * Polynomial<C>::variable(work, slot(j));
    image[i] = v;
  }
  std::vector<Polynomial<C>> gens;
  for (const auto& f : ideal.generators()) {
    // Substitute, then homogenize with h.
    Polynomial<C> g(work);
    for (const auto& t : f.terms()) {
      Polynomial<C> m = Polynomial<C>::constant(work, t.coeff);
      for (std::size_t i = 0; i < n; ++i)
        for (unsigned e = 0; e < t.mono[i]; ++e) m = m * image[i];
      g += m;
    }
    if (g.is_zero()) continue;
    const int d = g.total_degree();
    std::vector<typename Polynomial<C>::Term> terms;
    for (const auto& t : g.terms()) {
      Monomial m = t.mono;
      m.set(hi, static_cast<unsigned>(d) - t.mono.degree());
      terms.push_back({m, t.coeff});
    }
    gens.push_back(Polynomial<C>::from_terms(work, std::move(terms)));
  }
  auto gb = compute_groebner_basis(work, gens, MonomialOrder::degrevlex(work->size()));
  // Back to the original ring: u -> l, h -> 1.
  std::vector<Polynomial<C>> out;
  for (const auto& g : gb.elements()) {
    unsigned k = ~0u;
    for (const auto& t : g.terms()) k = std::min<unsigned>(k, t.mono[ui]);
    Polynomial<C> back(ring);
    for (const auto& t : g.terms()) {
      Polynomial<C> m = Polynomial<C>::constant(ring, t.coeff);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == q) continue;
        for (unsigned e = 0; e < t.mono[slot(i)]; ++e) m = m * Polynomial<C>::variable(ring, i);
      }
      for (unsigned e = k; e < t.mono[ui]; ++e) m = m * l;
      back += m;
    }
    out.push_back(std::move(back));
  }
  return groebner_basis(BasicIdeal<C>(ring, std::move(out)));
}

}  // namespace

template <class C>
BasicIdeal<C> saturate(const BasicIdeal<C>& ideal, const Polynomial<C>& g) {
  const RingPtr& ring = ideal.ring();
  if (g.is_zero()) return BasicIdeal<C>::unit(ring);
  if (g.is_constant()) return ideal;
  if (ideal.generators().empty()) return ideal;
  if (g.total_degree() == 1 && g.lowest_degree() == 1) return saturate_linear(ideal, g);
  // Rabinowitsch: (I + <1 - y g>) intersected with the original ring.
  RingPtr ext = prepend_variable(ring, "sat");
  std::vector<Polynomial<C>> gens;
  for (const auto& f : ideal.generators()) gens.push_back(shift_variables(f, ext, 1));
  auto y = Polynomial<C>::variable(ext, 0);
  gens.push_back(Polynomial<C>::constant(ext, FieldTraits<C>::one()) -
                 y * shift_variables(g, ext, 1));
  return eliminate_leading(ring, ext, gens);
}

template <class C>
BasicIdeal<C> intersect(const BasicIdeal<C>& a, const BasicIdeal<C>& b) {
  const RingPtr& ring = a.ring();
  if (!same_ring(ring, b.ring()))
    fail(ErrorKind::RingMismatch, "intersection of ideals in different rings");
  if (a.generators().empty() || b.generators().empty()) return BasicIdeal<C>::zero(ring);
  RingPtr ext = prepend_variable(ring, "cap");
  auto t = Polynomial<C>::variable(ext, 0);
  auto one_minus_t = Polynomial<C>::constant(ext, FieldTraits<C>::one()) - t;
  std::vector<Polynomial<C>> gens;
  for (const auto& f : a.generators()) gens.push_back(t * shift_variables(f, ext, 1));
  for (const auto& f : b.generators())
    gens.push_back(one_minus_t * shift_variables(f, ext, 1));
  return eliminate_leading(ring, ext, gens);
}

template <class C>
BasicIdeal<C> eliminate(const BasicIdeal<C>& ideal, const RingPtr& target) {
  const RingPtr& ring = ideal.ring();
  std::vector<std::size_t> kept;
  for (const auto& name : target->names()) {
    auto i = ring->index(name);
    if (!i) fail(ErrorKind::UnknownVariable, "'" + name + "' is not a variable of the ideal");
    kept.push_back(*i);
  }
  // Work ring: eliminated variables first, then target's in target order.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < ring->size(); ++i)
    if (std::find(kept.begin(), kept.end(), i) == kept.end()) order.push_back(i);
  const std::size_t k = order.size();
  order.insert(order.end(), kept.begin(), kept.end());
  std::vector<std::string> names;
  for (auto i : order) names.push_back(ring->name(i));
  RingPtr work = make_ring(names);
  std::vector<std::size_t> slot(ring->size());
  for (std::size_t j = 0; j < order.size(); ++j) slot[order[j]] = j;

  auto remap = [](const Polynomial<C>& f, const RingPtr& to, auto&& index_of) {
    std::vector<typename Polynomial<C>::Term> terms;
    for (const auto& t : f.terms()) {
      Monomial m;
      for (std::size_t i = 0; i < f.ring()->size(); ++i)
        if (t.mono[i]) m.set(index_of(i), t.mono[i]);
      terms.push_back({m, t.coeff});
    }
    return Polynomial<C>::from_terms(to, std::move(terms));
  };
  std::vector<Polynomial<C>> gens;
  for (const auto& f : ideal.generators())
    gens.push_back(remap(f, work, [&](std::size_t i) { return slot[i]; }));
  if (gens.empty()) return BasicIdeal<C>::zero(target);
  auto gb = compute_groebner_basis(work, gens, MonomialOrder::elimination(work->size(), k));
  std::vector<Polynomial<C>> out;
  for (std::size_t j = 0; j < gb.elements().size(); ++j) {
    const Monomial& lt = gb.leading_monomials()[j];
    bool free = true;
    for (std::size_t i = 0; i < k; ++i) free = free && lt[i] == 0;
    if (free) out.push_back(remap(gb.elements()[j], target, [&](std::size_t i) { return i - k; }));
  }
  return groebner_basis(BasicIdeal<C>(target, std::move(out)));
}

template <class C>
bool radical_contains(const BasicIdeal<C>& ideal, const Polynomial<C>& g) {
  if (!same_ring(ideal.ring(), g.ring()))
    fail(ErrorKind::RingMismatch, "polynomial outside the ideal's ring");
  return saturate(ideal, g).is_unit();
}

template <class C>
BasicIdeal<C> saturate(const BasicIdeal<C>& ideal, const BasicIdeal<C>& by) {
  const RingPtr& ring = ideal.ring();
  if (!same_ring(ring, by.ring()))
    fail(ErrorKind::RingMismatch, "saturation by an ideal of another ring");
  const auto& js = by.generators();
  if (js.empty()) return BasicIdeal<C>::unit(ring);
  if (by.is_unit()) return ideal;
  if (ideal.generators().empty() || ideal.is_unit()) return ideal;
  if (js.size() == 1) return saturate(ideal, js[0]);

  // I : J^inf is the intersection of the I : g^inf.  Any ideal between I and
  // some I : g^inf that is contained in every I : g^inf equals it.  Each
  // I : g^inf is tried first, then I : h^inf for random combinations h.
  std::vector<BasicIdeal<C>> per_generator;
  per_generator.reserve(js.size());
  for (const auto& g : js) per_generator.push_back(saturate(ideal, g));
  for (const auto& candidate : per_generator)
    if (std::all_of(per_generator.begin(), per_generator.end(),
                    [&](const BasicIdeal<C>& t) { return t.contains(candidate); }))
      return candidate;
  Rng rng(0x5A7u + js.size());
  for (int attempt = 0; attempt < 3; ++attempt) {
    Polynomial<C> h(ring);
    for (const auto& g : js)
      h += FieldTraits<C>::from_rational(mpq_class(rng.nonzero_coefficient(7))) * g;
    BasicIdeal<C> candidate = saturate(ideal, h);
    bool exact = std::all_of(per_generator.begin(), per_generator.end(),
                             [&](const BasicIdeal<C>& t) { return t.contains(candidate); });
    if (exact) return candidate;
  }
  BasicIdeal<C> acc = per_generator[0];
  for (std::size_t k = 1; k < per_generator.size(); ++k)
    acc = intersect(acc, per_generator[k]);
  return acc;
}

namespace {

// Row-reduces `rows` in place to reduced echelon form; returns pivot columns.
template <class C>
std::vector<std::size_t> row_reduce(std::vector<std::vector<C>>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && FieldTraits<C>::is_zero(rows[sel][col])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    C inv = FieldTraits<C>::one() / rows[r][col];
    for (std::size_t k = col; k < ncols; ++k) rows[r][k] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || FieldTraits<C>::is_zero(rows[i][col])) continue;
      C f = rows[i][col];
      for (std::size_t k = col; k < ncols; ++k)
        if (!FieldTraits<C>::is_zero(rows[r][k])) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

template <class C>
using Matrix = std::vector<std::vector<C>>;

template <class C>
Matrix<C> multiply(const Matrix<C>& a, const Matrix<C>& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), inner = b.size();
  Matrix<C> out(n, std::vector<C>(m, FieldTraits<C>::zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (FieldTraits<C>::is_zero(a[i][k])) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!FieldTraits<C>::is_zero(b[k][j])) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

template <class C>
std::size_t rank_of(Matrix<C> m, std::size_t ncols) {
  return row_reduce(m, ncols).size();
}

// Basis of the null space of a square matrix.
template <class C>
Matrix<C> kernel(Matrix<C> m, std::size_t ncols) {
  auto pivots = row_reduce(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix<C> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<C> v(ncols, FieldTraits<C>::zero());
    v[free] = FieldTraits<C>::one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

template <class C>
std::size_t local_count_at_origin(const BasicIdeal<C>& ideal) {
  int d = dimension(ideal);
  if (d > 0)
    fail(ErrorKind::NotZeroDimensional, "ideal has dimension " + std::to_string(d));
  if (d < 0 || !ideal.vanishes_at_origin()) return 0;

  // The quotient A splits into local algebras A_p over the solutions p.  The
  // multiplication maps by the variables commute, and the origin component is
  // their common generalized kernel; it is found variable by variable.
  const auto basis = standard_monomials(ideal);
  const std::size_t dim = basis.size();
  const std::size_t n = ideal.ring()->size();
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t i = 0; i < dim; ++i) index[basis[i]] = i;
  const auto& gb = ideal.groebner();

  // Column b of the multiplication matrix by x_var, sparse.
  auto column = [&](std::size_t var, std::size_t b) {
    std::vector<std::pair<std::size_t, C>> col;
    Monomial m = basis[b] * Monomial::variable(var);
    auto it = index.find(m);
    if (it != index.end()) {
      col.push_back({it->second, FieldTraits<C>::one()});
      return col;
    }
    auto nf = gb.normal_form(Polynomial<C>::monomial(ideal.ring(), m, FieldTraits<C>::one()));
    for (const auto& t : nf.terms()) col.push_back({index.at(t.mono), t.coeff});
    return col;
  };

  Matrix<C> rows(dim, std::vector<C>(dim, FieldTraits<C>::zero()));
  for (std::size_t i = 0; i < dim; ++i) rows[i][i] = FieldTraits<C>::one();
  std::vector<std::size_t> pivots(dim);
  for (std::size_t i = 0; i < dim; ++i) pivots[i] = i;

  for (std::size_t var = 0; var < n && !rows.empty(); ++var) {
    std::vector<std::vector<std::pair<std::size_t, C>>> cols(dim);
    for (std::size_t b = 0; b < dim; ++b) cols[b] = column(var, b);
    const std::size_t k = rows.size();
    // R[a][b]: coordinate along basis row a of x_var * (row b).
    Matrix<C> restricted(k, std::vector<C>(k, FieldTraits<C>::zero()));
    for (std::size_t b = 0; b < k; ++b) {
      std::vector<C> image(dim, FieldTraits<C>::zero());
      for (std::size_t j = 0; j < dim; ++j) {
        if (FieldTraits<C>::is_zero(rows[b][j])) continue;
        for (const auto& [r, c] : cols[j]) image[r] += rows[b][j] * c;
      }
      for (std::size_t a = 0; a < k; ++a) restricted[a][b] = image[pivots[a]];
    }
    Matrix<C> power = restricted;
    std::size_t rank = rank_of(power, k);
    while (rank > 0) {
      Matrix<C> next = multiply(power, restricted);
      std::size_t next_rank = rank_of(next, k);
      if (next_rank == rank) break;
      power = std::move(next);
      rank = next_rank;
    }
    Matrix<C> coords = kernel(power, k);
    Matrix<C> next_rows;
    for (const auto& kappa : coords) {
      std::vector<C> v(dim, FieldTraits<C>::zero());
      for (std::size_t a = 0; a < k; ++a) {
        if (FieldTraits<C>::is_zero(kappa[a])) continue;
        for (std::size_t j = 0; j < dim; ++j)
          if (!FieldTraits<C>::is_zero(rows[a][j])) v[j] += kappa[a] * rows[a][j];
      }
      next_rows.push_back(std::move(v));
    }
    pivots = row_reduce(next_rows, dim);
    rows = std::move(next_rows);
  }
  return rows.size();
}

template <class C>
bool zero_set_within_origin(const BasicIdeal<C>& ideal) {
  int d = dimension(ideal);
  if (d < 0) return true;
  if (d > 0) return false;
  return quotient_count(ideal) == local_count_at_origin(ideal);
}

template <class C>
bool isolated_at_origin(const BasicIdeal<C>& ideal) {
  if (ideal.is_unit() || !ideal.vanishes_at_origin()) return true;
  if (dimension(ideal) <= 0) return true;
  return !saturate(ideal, BasicIdeal<C>::origin(ideal.ring())).vanishes_at_origin();
}

template <class C>
std::vector<Polynomial<C>> partial_derivatives(const Polynomial<C>& f) {
  std::vector<Polynomial<C>> out;
  for (std::size_t i = 0; i < f.ring()->size(); ++i) out.push_back(f.derivative(i));
  return out;
}

bool is_reduced_principal(const Poly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "reducedness of the zero polynomial");
  if (f.is_constant()) return true;
  // f has a repeated factor g iff V(g) lies in the singular locus of V(f),
  // i.e. iff <f, grad f> keeps codimension one.
  Ideal sing(f.ring(), partial_derivatives(f));
  sing = sing.with({f});
  int n = static_cast<int>(f.ring()->size());
  return dimension(sing) <= n - 2;
}

std::size_t milnor_number_isolated_hypersurface(const Poly& f) {
  Ideal jac(f.ring(), partial_derivatives(f));
  int d = dimension(jac);
  if (d > 0)
    fail(ErrorKind::NotIsolated,
         "Jacobian ideal of " + to_string(f) + " has dimension " + std::to_string(d));
  return quotient_count(jac);
}

Ideal substitute(const Ideal& ideal, const std::map<std::string, Poly>& assignment,
                 RingPtr target) {
  std::vector<Poly> gens;
  for (const auto& g : ideal.generators()) {
    gens.push_back(substitute(g, assignment, target));
    if (!target) target = gens.back().ring();
  }
  if (!target) target = ideal.ring();
  return Ideal(target, std::move(gens));
}

#define DETSING_INSTANTIATE(C)                                                     \
  template class BasicIdeal<C>;                                                    \
  template BasicIdeal<C> groebner_basis(const BasicIdeal<C>&);                     \
  template bool ideals_equal(const BasicIdeal<C>&, const BasicIdeal<C>&);          \
  template int dimension(const BasicIdeal<C>&);                                    \
  template std::vector<Monomial> standard_monomials(const BasicIdeal<C>&);         \
  template std::size_t quotient_count(const BasicIdeal<C>&);                       \
  template BasicIdeal<C> saturate(const BasicIdeal<C>&, const Polynomial<C>&);     \
  template BasicIdeal<C> saturate(const BasicIdeal<C>&, const BasicIdeal<C>&);     \
  template BasicIdeal<C> eliminate(const BasicIdeal<C>&, const RingPtr&);          \
  template bool radical_contains(const BasicIdeal<C>&, const Polynomial<C>&);      \
  template BasicIdeal<C> intersect(const BasicIdeal<C>&, const BasicIdeal<C>&);    \
  template std::size_t local_count_at_origin(const BasicIdeal<C>&);                \
  template bool zero_set_within_origin(const BasicIdeal<C>&);                      \
  template bool isolated_at_origin(const BasicIdeal<C>&);                          \
  template std::vector<Polynomial<C>> partial_derivatives(const Polynomial<C>&);

DETSING_INSTANTIATE(mpq_class)
DETSING_INSTANTIATE(Fp)

#undef DETSING_INSTANTIATE

}  // namespace detsing
