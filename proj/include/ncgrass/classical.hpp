#pragma once

#include "ncgrass/matrix.hpp"

namespace ncgrass {

/**
 * Classical determinant by cofactor expansion along the first row.
 * Exponential, but only ever used on small matrices as an independent
 * oracle for the commutative specializations; deliberately shares no code
 * with any quasideterminant or elimination routine. Needs a commutative
 * scalar to mean anything, which the call sites guarantee.
 */
template <RingScalar S>
S det_cofactor(const DivMatrix<S>& A) {
  if (A.rows() != A.cols())
    throw ShapeMismatch("determinant of " + A.dims() + " matrix");
  const int n = A.rows();
  if (n == 1) return A.at(1, 1);
  S acc(0);
  for (int j = 1; j <= n; ++j) {
    if (A.at(1, j).is_zero()) continue;
    S term = A.at(1, j) * det_cofactor(submatrix_delete(A, {1}, {j}));
    acc = (j % 2 == 1) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace ncgrass
