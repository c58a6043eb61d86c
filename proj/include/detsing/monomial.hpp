#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace detsing {

inline constexpr std::size_t kMaxVars = 16;

// Exponent vector with cached total degree.  Unused slots (index >= number of
// ring variables) stay zero, so equality and hashing ignore the ring size.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  static Monomial variable(std::size_t index, unsigned power = 1) {
    Monomial m;
    m.set(index, power);
    return m;
  }

  Exponent operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned power) {
    degree_ = degree_ - e_[i] + power;
    e_[i] = static_cast<Exponent>(power);
  }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = a.e_[i] + b.e_[i];
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  // Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = a.e_[i] - b.e_[i];
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
      d += r.e_[i];
    }
    r.degree_ = d;
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.e_[i] != 0 && b.e_[i] != 0) return false;
    return true;
  }

  // Bit i set iff variable i occurs.
  std::uint32_t support() const {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e_[i] != 0) s |= 1u << i;
    return s;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

  std::size_t hash() const {
    std::size_t h = degree_;
    for (auto x : e_) h = h * 1000003u ^ x;
    return h;
  }

 private:
  std::array<Exponent, kMaxVars> e_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Graded reverse lexicographic order, optionally refined into a block
// elimination order: monomials are first compared by their total degree in
// the leading `eliminate` variables, then by degrevlex on all variables.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  static MonomialOrder degrevlex(std::size_t nvars) {
    return MonomialOrder(nvars, 0);
  }
  static MonomialOrder elimination(std::size_t nvars, std::size_t eliminate) {
    return MonomialOrder(nvars, eliminate);
  }

  std::size_t nvars() const { return nvars_; }
  std::size_t eliminated() const { return eliminate_; }

  // Negative, zero or positive like strcmp.
  int compare(const Monomial& a, const Monomial& b) const {
    if (eliminate_ != 0) {
      unsigned da = 0, db = 0;
      for (std::size_t i = 0; i < eliminate_; ++i) {
        da += a[i];
        db += b[i];
      }
      if (da != db) return da > db ? 1 : -1;
    }
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (std::size_t i = nvars_; i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.nvars_ == b.nvars_ && a.eliminate_ == b.eliminate_;
  }

 private:
  MonomialOrder(std::size_t nvars, std::size_t eliminate)
      : nvars_(nvars), eliminate_(eliminate) {}
  std::size_t nvars_ = 0;
  std::size_t eliminate_ = 0;
};

}  // namespace detsing
