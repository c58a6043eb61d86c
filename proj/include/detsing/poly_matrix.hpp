#pragma once

#include <map>
#include <string>
#include <vector>

#include "detsing/poly.hpp"

namespace detsing {

// Dense rows x cols matrix of rational polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  // Rows must be non-empty and of equal length; entries share one ring.
  static PolyMatrix from_rows(RingPtr ring, std::vector<std::vector<Poly>> rows);
  static PolyMatrix parse(const RingPtr& ring,
                          const std::vector<std::vector<std::string>>& rows);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Poly& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  Poly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const std::vector<Poly>& entries() const { return entries_; }

  // All k x k minors, row subsets outer and column subsets inner, both in
  // lexicographic order.  Zero minors are kept so positions are stable.
  std::vector<Poly> minors(std::size_t k) const;

  PolyMatrix transpose() const;
  // Every entry moved into `target` by substitution (see substitute(Poly)).
  PolyMatrix substitute(const std::map<std::string, Poly>& assignment,
                        const RingPtr& target) const;
  // Entries re-embedded into a ring that contains all current variables.
  PolyMatrix extend_ring(const RingPtr& target) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  RingPtr ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Poly> entries_;
};

// Rows indexed by `polys`, columns by the given variable indices.
PolyMatrix jacobian(const std::vector<Poly>& polys, const RingPtr& ring,
                    const std::vector<std::size_t>& variables);
// Jacobian with respect to every variable of the ring.
PolyMatrix jacobian(const std::vector<Poly>& polys, const RingPtr& ring);

// Constant integer matrix as polynomials.
PolyMatrix constant_matrix(const RingPtr& ring,
                           const std::vector<std::vector<long>>& values);

// Lexicographically ordered k-subsets of {0..n-1}.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

}  // namespace detsing
