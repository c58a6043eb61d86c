#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace detsing {

// Element of Z/pZ for the fixed word-size prime p = 2^31 - 1.  Used by the
// modular arithmetic mode; results are compared against rational mode.
class Fp {
 public:
  static constexpr std::uint32_t kModulus = 2147483647u;

  constexpr Fp() = default;
  constexpr explicit Fp(std::uint32_t v) : v_(v % kModulus) {}
  static Fp from_int(long long v) {
    long long r = v % static_cast<long long>(kModulus);
    if (r < 0) r += kModulus;
    return Fp(static_cast<std::uint32_t>(r));
  }

  constexpr std::uint32_t value() const { return v_; }

  friend Fp operator+(Fp a, Fp b) {
    std::uint32_t s = a.v_ + b.v_;
    if (s >= kModulus) s -= kModulus;
    return raw(s);
  }
  friend Fp operator-(Fp a, Fp b) {
    return raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + kModulus - b.v_);
  }
  friend Fp operator*(Fp a, Fp b) {
    return raw(static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a.v_) * b.v_) % kModulus));
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return raw(v_ == 0 ? 0 : kModulus - v_); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  Fp inverse() const;
  Fp pow(std::uint64_t e) const;

  friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v_; }

 private:
  static constexpr Fp raw(std::uint32_t v) {
    Fp r;
    r.v_ = v;
    return r;
  }
  std::uint32_t v_ = 0;
};

// Uniform access to the two coefficient fields.
template <class C>
struct FieldTraits;

template <>
struct FieldTraits<mpq_class> {
  static constexpr const char* name = "rational";
  static mpq_class zero() { return mpq_class(0); }
  static mpq_class one() { return mpq_class(1); }
  static bool is_zero(const mpq_class& a) { return sgn(a) == 0; }
  static mpq_class from_rational(const mpq_class& q) { return q; }
};

template <>
struct FieldTraits<Fp> {
  static constexpr const char* name = "modular";
  static Fp zero() { return Fp(); }
  static Fp one() { return Fp(1); }
  static bool is_zero(Fp a) { return a.value() == 0; }
  // Throws if the denominator vanishes modulo p.
  static Fp from_rational(const mpq_class& q);
};

std::string to_string(const mpq_class& q);

}  // namespace detsing
