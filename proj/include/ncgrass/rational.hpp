#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

#include "ncgrass/errors.hpp"

namespace ncgrass {

/**
 * Arbitrary-precision rational number, always in lowest terms with a
 * positive denominator. Thin canonicalizing wrapper around GMP's mpq_class;
 * all arithmetic is exact.
 */
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, 3 == Rational(3)
  Rational(long num, long den) {
    if (den == 0) throw ZeroInverse();
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /** Parses "7", "-3/4", etc. Input must already be an integer ratio. */
  static Rational from_string(const std::string& s) {
    mpq_class v(s);
    v.canonicalize();
    return Rational(std::move(v));
  }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator/(const Rational& o) const { return *this * o.invert(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  Rational invert() const {
    if (is_zero()) throw ZeroInverse();
    return Rational(mpq_class(1 / v_));
  }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }

  /** Canonical decimal-free form: "5/6", "-2", "0". */
  std::string str() const { return v_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
  }

 private:
  mpq_class v_;
};

}  // namespace ncgrass
