#include "detsing/poly_matrix.hpp"

#include <set>

#include "detsing/util.hpp"

#include <unordered_map>

namespace detsing {

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      entries_(rows * cols, Poly(ring_)) {}

PolyMatrix PolyMatrix::from_rows(RingPtr ring, std::vector<std::vector<Poly>> rows) {
  if (rows.empty() || rows[0].empty())
    fail(ErrorKind::InvalidType, "matrix must have at least one row and column");
  PolyMatrix m(ring, rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      fail(ErrorKind::InvalidType, "matrix rows have different lengths");
    for (std::size_t j = 0; j < m.cols_; ++j) {
      if (!same_ring(rows[i][j].ring(), ring) && rows[i][j].ring())
        fail(ErrorKind::RingMismatch, "matrix entry from a different ring");
      m(i, j) = rows[i][j].ring() ? std::move(rows[i][j]) : Poly(ring);
    }
  }
  return m;
}

PolyMatrix PolyMatrix::parse(const RingPtr& ring,
                             const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Poly>> polys;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    polys.emplace_back();
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      try {
        polys.back().push_back(parse_poly(ring, rows[i][j]));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Parse) throw;
        throw Error(ErrorKind::Parse, std::string(e.what()) + " (matrix entry [" +
                                          std::to_string(i) + "][" + std::to_string(j) + "])");
      }
    }
  }
  return from_rows(ring, std::move(polys));
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

// Laplace expansion along the first chosen row, memoized on (row offset,
// column mask).  Rows are consumed in order, so the row set is determined by
// how many columns remain.
class MinorEvaluator {
 public:
  MinorEvaluator(const PolyMatrix& m, const std::vector<std::size_t>& rows)
      : m_(m), rows_(rows) {}

  const Poly& det(std::uint64_t mask, std::size_t depth) {
    auto key = mask;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Poly acc(m_.ring());
    if (depth == rows_.size()) {
      acc = Poly::constant(m_.ring(), 1);
    } else {
      int sign = 1;
      for (std::size_t j = 0; j < m_.cols(); ++j) {
        if (!(mask >> j & 1u)) continue;
        const Poly& e = m_(rows_[depth], j);
        if (!e.is_zero()) {
          const Poly& sub = det(mask & ~(std::uint64_t{1} << j), depth + 1);
          if (!sub.is_zero()) {
            if (sign > 0)
              acc += e * sub;
            else
              acc -= e * sub;
          }
        }
        sign = -sign;
      }
    }
    return memo_.emplace(key, std::move(acc)).first->second;
  }

 private:
  const PolyMatrix& m_;
  const std::vector<std::size_t>& rows_;
  std::unordered_map<std::uint64_t, Poly> memo_;
};

}  // namespace

std::vector<Poly> PolyMatrix::minors(std::size_t k) const {
  if (k == 0 || k > rows_ || k > cols_)
    fail(ErrorKind::IndexOutOfRange, "minor size " + std::to_string(k) +
                                         " out of range for a " + std::to_string(rows_) +
                                         "x" + std::to_string(cols_) + " matrix");
  if (cols_ > 63) fail(ErrorKind::ResourceLimit, "too many columns for minors");
  std::vector<Poly> out;
  const auto col_sets = subsets(cols_, k);
  for (const auto& rs : subsets(rows_, k)) {
    MinorEvaluator eval(*this, rs);
    for (const auto& cs : col_sets) {
      std::uint64_t mask = 0;
      for (auto c : cs) mask |= std::uint64_t{1} << c;
      out.push_back(eval.det(mask, 0));
    }
  }
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PolyMatrix PolyMatrix::substitute(const std::map<std::string, Poly>& assignment,
                                  const RingPtr& target) const {
  PolyMatrix out(target, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    out.entries_[k] = detsing::substitute(entries_[k], assignment, target);
  return out;
}

PolyMatrix PolyMatrix::extend_ring(const RingPtr& target) const {
  return substitute({}, target);
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorKind::InvalidType, "matrix shapes do not multiply");
  PolyMatrix r(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
  return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    fail(ErrorKind::InvalidType, "matrix shapes differ");
  PolyMatrix r = a;
  for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] += b.entries_[k];
  return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::vector<std::vector<std::string>> PolyMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i].push_back(to_string((*this)(i, j)));
  return out;
}

PolyMatrix jacobian(const std::vector<Poly>& polys, const RingPtr& ring,
                    const std::vector<std::size_t>& variables) {
  PolyMatrix j(ring, polys.size(), variables.size());
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (std::size_t c = 0; c < variables.size(); ++c)
      j(r, c) = polys[r].derivative(variables[c]);
  return j;
}

PolyMatrix jacobian(const std::vector<Poly>& polys, const RingPtr& ring) {
  std::vector<std::size_t> all(ring->size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return jacobian(polys, ring, all);
}

PolyMatrix constant_matrix(const RingPtr& ring,
                           const std::vector<std::vector<long>>& values) {
  PolyMatrix m(ring, values.size(), values.empty() ? 0 : values[0].size());
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = 0; j < values[i].size(); ++j)
      m(i, j) = Poly::constant(ring, mpq_class(values[i][j]));
  return m;
}

std::vector<Poly> distinct_up_to_scalar(const std::vector<Poly>& polys) {
  std::vector<Poly> out;
  std::set<std::string> seen;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    Poly monic = mpq_class(1 / p.terms()[0].coeff) * p;
    if (seen.insert(to_string(monic)).second) out.push_back(p);
  }
  return out;
}

}  // namespace detsing
