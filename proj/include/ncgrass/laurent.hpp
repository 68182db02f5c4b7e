#pragma once

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "ncgrass/errors.hpp"
#include "ncgrass/rational.hpp"

namespace ncgrass {

/**
 * Laurent polynomial in one variable q with rational coefficients,
 * stored as a sparse exponent -> coefficient map with no zero entries.
 *
 * These are the scalars of the quantized coordinate ring: every scalar
 * that appears in a structure constant is a Laurent polynomial, and the
 * ones that need inverting are single monomials c*q^k. invert() therefore
 * only accepts monomials and reports NonUnit otherwise; this keeps the
 * ring honest instead of silently moving to rational functions.
 */
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long n) { if (n != 0) c_[0] = Rational(n); }  // NOLINT
  LaurentPoly(Rational r) {  // NOLINT: implicit constant embedding
    if (!r.is_zero()) c_[0] = std::move(r);
  }

  /** The variable itself, or any pure power q^k. */
  static LaurentPoly q(int k = 1) { return monomial(Rational(1), k); }

  static LaurentPoly monomial(Rational coeff, int exp) {
    LaurentPoly p;
    if (!coeff.is_zero()) p.c_[exp] = std::move(coeff);
    return p;
  }

  /** (-q)^m for any integer m, negative exponents included. */
  static LaurentPoly neg_q_pow(long m) {
    return monomial(m % 2 == 0 ? Rational(1) : Rational(-1),
                    static_cast<int>(m));
  }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const {
    return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second.is_one();
  }
  bool is_monomial() const { return c_.size() == 1; }

  /** Coefficient of q^k (zero when absent). */
  Rational coeff(int k) const {
    auto it = c_.find(k);
    return it == c_.end() ? Rational(0) : it->second;
  }

  const std::map<int, Rational>& terms() const { return c_; }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, co] : c_) r.c_[e] = -co;
    return r;
  }

  LaurentPoly operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, co] : o.c_) {
      auto it = r.c_.find(e);
      if (it == r.c_.end()) {
        r.c_[e] = co;
      } else {
        it->second += co;
        if (it->second.is_zero()) r.c_.erase(it);
      }
    }
    return r;
  }

  LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }

  LaurentPoly operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : c_) {
      for (const auto& [e2, c2] : o.c_) {
        Rational prod = c1 * c2;
        auto it = r.c_.find(e1 + e2);
        if (it == r.c_.end()) {
          r.c_[e1 + e2] = prod;
        } else {
          it->second += prod;
          if (it->second.is_zero()) r.c_.erase(it);
        }
      }
    }
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { *this = *this + o; return *this; }
  LaurentPoly& operator-=(const LaurentPoly& o) { *this = *this - o; return *this; }
  LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

  /** Only monomials c*q^k are units here; anything else raises NonUnit. */
  LaurentPoly invert() const {
    if (is_zero()) throw ZeroInverse();
    if (!is_monomial()) throw NonUnit(str());
    const auto& [e, co] = *c_.begin();
    return monomial(co.invert(), -e);
  }

  /** Evaluates at a nonzero rational q0; q0 = 0 is outside the domain. */
  Rational eval_q(const Rational& q0) const {
    if (q0.is_zero()) throw ZeroSubstitution();
    Rational acc(0);
    for (const auto& [e, co] : c_) {
      Rational p(1);
      Rational base = e >= 0 ? q0 : q0.invert();
      for (int t = 0; t < (e >= 0 ? e : -e); ++t) p *= base;
      acc += co * p;
    }
    return acc;
  }

  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }

  /** Deterministic form, ascending exponents: "-q^-1+2+q^3". */
  std::string str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    if (p.c_.empty()) return os << "0";
    bool first = true;
    for (const auto& [e, co] : p.c_) {
      if (!first && co.sign() > 0) os << "+";
      if (e == 0) {
        os << co;
      } else {
        if (co == Rational(-1)) {
          os << "-";
        } else if (!(co == Rational(1))) {
          os << co << "*";
        }
        os << "q";
        if (e != 1) os << "^" << e;
      }
      first = false;
    }
    return os;
  }

 private:
  std::map<int, Rational> c_;
};

}  // namespace ncgrass
