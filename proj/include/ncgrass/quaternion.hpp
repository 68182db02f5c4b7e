#pragma once

#include <ostream>
#include <sstream>
#include <string>

#include "ncgrass/errors.hpp"
#include "ncgrass/rational.hpp"

namespace ncgrass {

/**
 * Quaternion with rational coefficients: a + bi + cj + dk.
 *
 * This is the stock noncommutative division ring used to exercise matrix
 * identities that hold over any division ring. Multiplication follows the
 * usual Hamilton table (ij = k, ji = -k, ...); inversion goes through the
 * conjugate and the reduced norm a^2 + b^2 + c^2 + d^2, which never
 * vanishes for a nonzero element.
 */
class Quaternion {
 public:
  Quaternion() = default;
  Quaternion(long n) : a_(n) {}  // NOLINT: implicit scalar embedding
  Quaternion(Rational a) : a_(std::move(a)) {}  // NOLINT
  Quaternion(Rational a, Rational b, Rational c, Rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  const Rational& re() const { return a_; }
  const Rational& bi() const { return b_; }
  const Rational& cj() const { return c_; }
  const Rational& dk() const { return d_; }

  static Quaternion i() { return Quaternion(0, 1, 0, 0); }
  static Quaternion j() { return Quaternion(0, 0, 1, 0); }
  static Quaternion k() { return Quaternion(0, 0, 0, 1); }

  bool is_zero() const {
    return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero();
  }
  bool is_one() const {
    return a_.is_one() && b_.is_zero() && c_.is_zero() && d_.is_zero();
  }

  Quaternion conjugate() const { return Quaternion(a_, -b_, -c_, -d_); }

  /** Reduced norm a^2 + b^2 + c^2 + d^2; zero iff the quaternion is zero. */
  Rational norm() const {
    return a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_;
  }

  Quaternion operator-() const { return Quaternion(-a_, -b_, -c_, -d_); }

  Quaternion operator+(const Quaternion& o) const {
    return Quaternion(a_ + o.a_, b_ + o.b_, c_ + o.c_, d_ + o.d_);
  }
  Quaternion operator-(const Quaternion& o) const {
    return Quaternion(a_ - o.a_, b_ - o.b_, c_ - o.c_, d_ - o.d_);
  }
  Quaternion operator*(const Quaternion& o) const {
    return Quaternion(
        a_ * o.a_ - b_ * o.b_ - c_ * o.c_ - d_ * o.d_,
        a_ * o.b_ + b_ * o.a_ + c_ * o.d_ - d_ * o.c_,
        a_ * o.c_ - b_ * o.d_ + c_ * o.a_ + d_ * o.b_,
        a_ * o.d_ + b_ * o.c_ - c_ * o.b_ + d_ * o.a_);
  }

  Quaternion& operator+=(const Quaternion& o) { *this = *this + o; return *this; }
  Quaternion& operator-=(const Quaternion& o) { *this = *this - o; return *this; }
  Quaternion& operator*=(const Quaternion& o) { *this = *this * o; return *this; }

  Quaternion invert() const {
    if (is_zero()) throw ZeroInverse();
    Rational ninv = norm().invert();
    Quaternion c = conjugate();
    return Quaternion(c.a_ * ninv, c.b_ * ninv, c.c_ * ninv, c.d_ * ninv);
  }

  bool operator==(const Quaternion& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
  }
  bool operator!=(const Quaternion& o) const { return !(*this == o); }

  std::string str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    if (q.is_zero()) return os << "0";
    bool first = true;
    auto term = [&](const Rational& coeff, const char* unit) {
      if (coeff.is_zero()) return;
      if (!first && coeff.sign() > 0) os << "+";
      if (unit[0] == '\0') {
        os << coeff;
      } else if (coeff == Rational(1)) {
        os << unit;
      } else if (coeff == Rational(-1)) {
        os << "-" << unit;
      } else {
        os << coeff << unit;
      }
      first = false;
    };
    term(q.a_, "");
    term(q.b_, "i");
    term(q.c_, "j");
    term(q.d_, "k");
    return os;
  }

 private:
  Rational a_, b_, c_, d_;
};

}  // namespace ncgrass
