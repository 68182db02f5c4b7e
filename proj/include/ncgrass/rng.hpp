#pragma once

#include <cstdint>
#include <random>

#include "ncgrass/laurent.hpp"
#include "ncgrass/matrix.hpp"
#include "ncgrass/quaternion.hpp"
#include "ncgrass/rational.hpp"

namespace ncgrass {

/**
 * Deterministic random source for trials. We take raw mt19937_64 output
 * and reduce it by hand: std::uniform_int_distribution is allowed to
 * differ between standard library implementations, and reports here must
 * be reproducible from a seed on any platform.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  /** Uniform-ish draw in [0, n). Modulo bias is irrelevant at our sizes. */
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }

  /** Integer in [lo, hi] inclusive. */
  long int_in(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 eng_;
};

/** Rational with small numerator and denominator, suitable for matrix entries. */
inline Rational random_rational(Rng& rng) {
  return Rational(rng.int_in(-9, 9), rng.int_in(1, 9));
}

/** Quaternion with integer components in [-9, 9]. */
inline Quaternion random_quaternion(Rng& rng) {
  return Quaternion(Rational(rng.int_in(-9, 9)), Rational(rng.int_in(-9, 9)),
                    Rational(rng.int_in(-9, 9)), Rational(rng.int_in(-9, 9)));
}

/** Nonzero quaternion (redraws until it is). */
inline Quaternion random_nonzero_quaternion(Rng& rng) {
  for (;;) {
    Quaternion x = random_quaternion(rng);
    if (!x.is_zero()) return x;
  }
}

/** Sparse Laurent polynomial with a few small terms. */
inline LaurentPoly random_laurent(Rng& rng, int max_terms = 3, int exp_range = 3) {
  LaurentPoly p;
  long terms = rng.int_in(0, max_terms);
  for (long t = 0; t < terms; ++t) {
    int e = static_cast<int>(rng.int_in(-exp_range, exp_range));
    p += LaurentPoly::monomial(Rational(rng.int_in(-5, 5)), e);
  }
  return p;
}

inline DivMatrix<Quaternion> random_quaternion_matrix(Rng& rng, int rows, int cols) {
  DivMatrix<Quaternion> A(rows, cols);
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) A.set(i, j, random_quaternion(rng));
  return A;
}

inline DivMatrix<Rational> random_rational_matrix(Rng& rng, int rows, int cols) {
  DivMatrix<Rational> A(rows, cols);
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) A.set(i, j, random_rational(rng));
  return A;
}

}  // namespace ncgrass
