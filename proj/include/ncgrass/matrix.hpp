#pragma once

#include <concepts>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ncgrass/combinatorics.hpp"
#include "ncgrass/errors.hpp"

namespace ncgrass {

/** Value-semantic scalar with exact ring arithmetic. */
template <typename S>
concept RingScalar = requires(const S a, const S b) {
  S(0);
  S(1);
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
};

/** Ring scalar whose nonzero elements invert (invert() on zero must throw). */
template <typename S>
concept DivisionRingScalar = RingScalar<S> && requires(const S a) {
  { a.invert() } -> std::convertible_to<S>;
};

/**
 * Dense rectangular matrix over an exact scalar, indexed 1-based in both
 * coordinates to match the conventions of the identities being checked.
 * Treated as a value: verifiers build modified copies, never mutate shared
 * state.
 */
template <RingScalar S>
class DivMatrix {
 public:
  DivMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows * cols), S(0)) {
    if (rows < 1 || cols < 1)
      throw BadSize("matrix dimensions must be positive, got " +
                    std::to_string(rows) + "x" + std::to_string(cols));
  }

  static DivMatrix identity(int n) {
    DivMatrix I(n, n);
    for (int i = 1; i <= n; ++i) I.set(i, i, S(1));
    return I;
  }

  static DivMatrix from_rows(std::initializer_list<std::initializer_list<S>> grid) {
    std::vector<std::vector<S>> rows;
    for (const auto& r : grid) rows.emplace_back(r);
    return from_rows(rows);
  }

  static DivMatrix from_rows(const std::vector<std::vector<S>>& grid) {
    if (grid.empty() || grid.front().empty())
      throw BadSize("matrix needs at least one row and column");
    DivMatrix A(static_cast<int>(grid.size()), static_cast<int>(grid.front().size()));
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (grid[i].size() != grid.front().size())
        throw ShapeMismatch("ragged row " + std::to_string(i + 1));
      for (std::size_t j = 0; j < grid[i].size(); ++j)
        A.set(static_cast<int>(i) + 1, static_cast<int>(j) + 1, grid[i][j]);
    }
    return A;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const S& at(int i, int j) const {
    check(i, j);
    return e_[static_cast<std::size_t>((i - 1) * cols_ + (j - 1))];
  }

  void set(int i, int j, S v) {
    check(i, j);
    e_[static_cast<std::size_t>((i - 1) * cols_ + (j - 1))] = std::move(v);
  }

  DivMatrix operator*(const DivMatrix& B) const {
    if (cols_ != B.rows_)
      throw ShapeMismatch("cannot multiply " + dims() + " by " + B.dims());
    DivMatrix C(rows_, B.cols_);
    for (int i = 1; i <= rows_; ++i)
      for (int j = 1; j <= B.cols_; ++j) {
        S acc(0);
        for (int k = 1; k <= cols_; ++k) acc = acc + at(i, k) * B.at(k, j);
        C.set(i, j, std::move(acc));
      }
    return C;
  }

  DivMatrix operator+(const DivMatrix& B) const {
    if (rows_ != B.rows_ || cols_ != B.cols_)
      throw ShapeMismatch("cannot add " + dims() + " and " + B.dims());
    DivMatrix C(rows_, cols_);
    for (int i = 1; i <= rows_; ++i)
      for (int j = 1; j <= cols_; ++j) C.set(i, j, at(i, j) + B.at(i, j));
    return C;
  }

  bool operator==(const DivMatrix& B) const {
    return rows_ == B.rows_ && cols_ == B.cols_ && e_ == B.e_;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 1; i <= rows_; ++i)
      for (int j = 1; j <= cols_; ++j) {
        if (i == j && !(at(i, j) == S(1))) return false;
        if (i != j && !at(i, j).is_zero()) return false;
      }
    return true;
  }

  std::string dims() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  void check(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
      throw IndexOutOfRange("(" + std::to_string(i) + "," + std::to_string(j) +
                            ") in " + dims() + " matrix");
  }

  int rows_, cols_;
  std::vector<S> e_;
};

/** Rows I and columns J of A, in exactly the listed order (repeats allowed). */
template <RingScalar S>
DivMatrix<S> submatrix_keep(const DivMatrix<S>& A, const IndexTuple& I,
                            const IndexTuple& J) {
  if (I.empty() || J.empty()) throw BadSize("empty row or column selection");
  DivMatrix<S> B(static_cast<int>(I.size()), static_cast<int>(J.size()));
  for (std::size_t a = 0; a < I.size(); ++a)
    for (std::size_t b = 0; b < J.size(); ++b)
      B.set(static_cast<int>(a) + 1, static_cast<int>(b) + 1, A.at(I[a], J[b]));
  return B;
}

/** Copy of A without the rows in I and columns in J (sets, any order). */
template <RingScalar S>
DivMatrix<S> submatrix_delete(const DivMatrix<S>& A, const IndexTuple& I,
                              const IndexTuple& J) {
  for (int i : I)
    if (i < 1 || i > A.rows()) throw IndexOutOfRange("row " + std::to_string(i));
  for (int j : J)
    if (j < 1 || j > A.cols()) throw IndexOutOfRange("col " + std::to_string(j));
  IndexTuple keep_rows, keep_cols;
  for (int i = 1; i <= A.rows(); ++i)
    if (!contains(I, i)) keep_rows.push_back(i);
  for (int j = 1; j <= A.cols(); ++j)
    if (!contains(J, j)) keep_cols.push_back(j);
  return submatrix_keep(A, keep_rows, keep_cols);
}

/**
 * Two-sided inverse by Gauss-Jordan elimination. All row operations are
 * left multiplications, which is what makes this valid over a
 * noncommutative division ring. Pivot choice is the first nonzero entry
 * scanning down the column; there is no notion of magnitude here, and a
 * fixed rule keeps runs reproducible.
 */
template <DivisionRingScalar S>
DivMatrix<S> dr_inverse(const DivMatrix<S>& A) {
  if (A.rows() != A.cols())
    throw ShapeMismatch("cannot invert " + A.dims() + " matrix");
  const int n = A.rows();
  DivMatrix<S> work = A;
  DivMatrix<S> inv = DivMatrix<S>::identity(n);
  for (int c = 1; c <= n; ++c) {
    int pivot = 0;
    for (int r = c; r <= n; ++r)
      if (!work.at(r, c).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot == 0)
      throw SingularMatrix("no pivot in column " + std::to_string(c));
    if (pivot != c) {
      for (int j = 1; j <= n; ++j) {
        S tw = work.at(c, j);
        work.set(c, j, work.at(pivot, j));
        work.set(pivot, j, std::move(tw));
        S ti = inv.at(c, j);
        inv.set(c, j, inv.at(pivot, j));
        inv.set(pivot, j, std::move(ti));
      }
    }
    const S scale = work.at(c, c).invert();
    for (int j = 1; j <= n; ++j) {
      work.set(c, j, scale * work.at(c, j));
      inv.set(c, j, scale * inv.at(c, j));
    }
    for (int r = 1; r <= n; ++r) {
      if (r == c) continue;
      const S f = work.at(r, c);
      if (f.is_zero()) continue;
      for (int j = 1; j <= n; ++j) {
        work.set(r, j, work.at(r, j) - f * work.at(c, j));
        inv.set(r, j, inv.at(r, j) - f * inv.at(c, j));
      }
    }
  }
  return inv;
}

}  // namespace ncgrass
