#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ncgrass/classical.hpp"
#include "ncgrass/combinatorics.hpp"
#include "ncgrass/errors.hpp"
#include "ncgrass/matrix.hpp"
#include "ncgrass/outcome.hpp"

namespace ncgrass {

/**
 * A quasideterminant evaluation. Over a general division ring the value
 * may simply not exist (some inner inverse fails), and that is a result,
 * not an error: verifiers inspect defined() and skip vacuous instances.
 * When undefined, fail_row/fail_col name the position whose inner
 * quasideterminant or minor could not be inverted.
 */
template <typename S>
class Quasi {
 public:
  static Quasi ok(S v) {
    Quasi q;
    q.v_ = std::move(v);
    return q;
  }
  static Quasi undef(int fail_row, int fail_col, std::string why) {
    Quasi q;
    q.fr_ = fail_row;
    q.fc_ = fail_col;
    q.why_ = std::move(why);
    return q;
  }

  bool defined() const { return v_.has_value(); }
  bool defined_nonzero() const { return v_.has_value() && !v_->is_zero(); }

  const S& get() const {
    if (!v_) throw Error("quasideterminant undefined: " + why_);
    return *v_;
  }

  int fail_row() const { return fr_; }
  int fail_col() const { return fc_; }
  const std::string& reason() const { return why_; }

 private:
  std::optional<S> v_;
  int fr_ = 0, fc_ = 0;
  std::string why_;
};

enum class QdMethod { recursive, border };

namespace detail {

using SubKey = std::tuple<std::uint64_t, std::uint64_t, int, int>;

inline std::uint64_t tuple_mask(const IndexTuple& t) {
  std::uint64_t m = 0;
  for (int x : t) m |= (1ull << x);
  return m;
}

/**
 * The recursive definition on the submatrix of A with row set R and
 * column set C, evaluated at original indices (i, j):
 *
 *   |B|_ij = b_ij - sum over r in R\i, s in C\j of  b_is (|B^ij|_rs)^-1 b_rj
 *
 * Every inner quasideterminant must exist and be nonzero. Submatrices
 * recur heavily (each level deletes one row and one column), so results
 * are memoized by (row mask, column mask, position).
 */
template <DivisionRingScalar S>
Quasi<S> qd_recursive(const DivMatrix<S>& A, const IndexTuple& R,
                      const IndexTuple& C, int i, int j,
                      std::map<SubKey, Quasi<S>>& memo) {
  const SubKey key{tuple_mask(R), tuple_mask(C), i, j};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  auto compute = [&]() -> Quasi<S> {
    if (R.size() == 1) return Quasi<S>::ok(A.at(i, j));
    const IndexTuple Ri = tuple_diff(R, {i});
    const IndexTuple Cj = tuple_diff(C, {j});
    S corr(0);
    for (int r : Ri) {
      for (int s : Cj) {
        Quasi<S> inner = qd_recursive(A, Ri, Cj, r, s, memo);
        if (!inner.defined())
          return Quasi<S>::undef(r, s, "inner value undefined at (" +
                                           std::to_string(r) + "," +
                                           std::to_string(s) + ")");
        if (inner.get().is_zero())
          return Quasi<S>::undef(r, s, "inner value zero at (" +
                                           std::to_string(r) + "," +
                                           std::to_string(s) + ")");
        corr = corr + A.at(i, s) * inner.get().invert() * A.at(r, j);
      }
    }
    return Quasi<S>::ok(A.at(i, j) - corr);
  };
  Quasi<S> result = compute();
  memo.emplace(key, result);
  return result;
}

template <DivisionRingScalar S>
Quasi<S> qd_border(const DivMatrix<S>& A, const IndexTuple& R,
                   const IndexTuple& C, int i, int j) {
  if (R.size() == 1) return Quasi<S>::ok(A.at(i, j));
  const IndexTuple Ri = tuple_diff(R, {i});
  const IndexTuple Cj = tuple_diff(C, {j});
  const DivMatrix<S> minor = submatrix_keep(A, Ri, Cj);
  DivMatrix<S> minor_inv(1, 1);
  try {
    minor_inv = dr_inverse(minor);
  } catch (const SingularMatrix&) {
    return Quasi<S>::undef(i, j, "deleted-row-and-column minor is singular");
  }
  // a_ij minus (row i over C\j) * minor^-1 * (column j over R\i).
  S corr(0);
  const int m = static_cast<int>(Ri.size());
  for (int u = 1; u <= m; ++u)
    for (int v = 1; v <= m; ++v)
      corr = corr + A.at(i, Cj[static_cast<std::size_t>(u) - 1]) *
                        minor_inv.at(u, v) *
                        A.at(Ri[static_cast<std::size_t>(v) - 1], j);
  return Quasi<S>::ok(A.at(i, j) - corr);
}

inline void validate_selection(int rows, int cols, const IndexTuple& R,
                               const IndexTuple& C, int i, int j) {
  if (R.empty() || R.size() != C.size())
    throw BadSize("quasideterminant needs equal nonempty row and column sets");
  for (int r : R)
    if (r < 1 || r > rows) throw IndexOutOfRange("row " + std::to_string(r));
  for (int c : C)
    if (c < 1 || c > cols) throw IndexOutOfRange("col " + std::to_string(c));
  if (sorted(R).size() != R.size() || sorted(C).size() != C.size())
    throw BadSize("row and column selections must not repeat");
  if (!contains(R, i) || !contains(C, j))
    throw IndexOutOfRange("position (" + std::to_string(i) + "," +
                          std::to_string(j) + ") outside selection");
}

}  // namespace detail

/**
 * Quasideterminant of the square submatrix of A given by row set R and
 * column set C, at position (i, j) in original coordinates. The border
 * method inverts the deleted-row-and-column minor once; the recursive
 * method follows the inner-inverse definition and exists to cross-check
 * the border result, since the two are equal whenever both are defined.
 */
template <DivisionRingScalar S>
Quasi<S> quasidet_on(const DivMatrix<S>& A, const IndexTuple& R,
                     const IndexTuple& C, int i, int j,
                     QdMethod method = QdMethod::border) {
  detail::validate_selection(A.rows(), A.cols(), R, C, i, j);
  if (method == QdMethod::border) return detail::qd_border(A, sorted(R), sorted(C), i, j);
  std::map<detail::SubKey, Quasi<S>> memo;
  return detail::qd_recursive(A, sorted(R), sorted(C), i, j, memo);
}

/** Quasideterminant |A|_ij of a full square matrix. */
template <DivisionRingScalar S>
Quasi<S> quasidet(const DivMatrix<S>& A, int i, int j,
                  QdMethod method = QdMethod::border) {
  if (A.rows() != A.cols())
    throw ShapeMismatch("quasideterminant of " + A.dims() + " matrix");
  IndexTuple R, C;
  for (int r = 1; r <= A.rows(); ++r) R.push_back(r);
  for (int c = 1; c <= A.cols(); ++c) C.push_back(c);
  return quasidet_on(A, R, C, i, j, method);
}

/**
 * Shared evaluation cache for many quasideterminants of one matrix. The
 * recursive definition revisits the same submatrices relentlessly, and a
 * sweep touching every position of every relation tuple re-derives the
 * whole lattice per call unless the memo is shared. One cache per matrix
 * makes the lattice fill a one-time cost; values come from the recursive
 * definition, so sweeps should pair it with a border cross-check.
 */
template <DivisionRingScalar S>
class QdCache {
 public:
  explicit QdCache(const DivMatrix<S>& A) : A_(&A) {
    for (int r = 1; r <= A.rows(); ++r) rows_.push_back(r);
    for (int c = 1; c <= A.cols(); ++c) cols_.push_back(c);
  }

  /** Quasideterminant of the (R, C) submatrix at original position (i, j). */
  Quasi<S> at(const IndexTuple& R, const IndexTuple& C, int i, int j) {
    detail::validate_selection(A_->rows(), A_->cols(), R, C, i, j);
    return detail::qd_recursive(*A_, sorted(R), sorted(C), i, j, memo_);
  }

  /** Full-matrix quasideterminant |A|_ij. */
  Quasi<S> top(int i, int j) { return at(rows_, cols_, i, j); }

  const DivMatrix<S>& matrix() const { return *A_; }
  const IndexTuple& all_rows() const { return rows_; }
  const IndexTuple& all_cols() const { return cols_; }

 private:
  const DivMatrix<S>* A_;
  IndexTuple rows_, cols_;
  std::map<detail::SubKey, Quasi<S>> memo_;
};

/**
 * Commutative sanity anchor: over a field, |A|_ij equals
 * (-1)^(i+j) det(A) / det(A^ij), with both determinants computed by the
 * independent cofactor routine. Requires the minor to be nonsingular.
 */
template <DivisionRingScalar S>
bool commutative_ratio_check(const DivMatrix<S>& A, int i, int j) {
  const S dminor = det_cofactor(submatrix_delete(A, {i}, {j}));
  if (dminor.is_zero())
    throw SingularMinor("det A^(" + std::to_string(i) + "," + std::to_string(j) +
                        ") = 0");
  const S ratio = det_cofactor(A) * dminor.invert();
  const S expected = (i + j) % 2 == 0 ? ratio : -ratio;
  const Quasi<S> qd = quasidet(A, i, j);
  return qd.defined() && qd.get() == expected;
}

/** One elementary column transformation, for verify_elem_transform. */
template <DivisionRingScalar S>
struct ElemTransform {
  enum class Kind { permute_cols, rescale_col, add_col };
  Kind kind;
  IndexTuple tau;   // permute_cols: column j of the result is column tau[j] ... see apply
  int r = 0, s = 0; // rescale_col uses r; add_col sends column r (times rho) into column s
  S rho = S(1);

  static ElemTransform permute(IndexTuple t) {
    return {Kind::permute_cols, std::move(t), 0, 0, S(1)};
  }
  static ElemTransform rescale(int r, S rho) {
    return {Kind::rescale_col, {}, r, 0, std::move(rho)};
  }
  static ElemTransform add(int r, int s, S rho) {
    return {Kind::add_col, {}, r, s, std::move(rho)};
  }
};

/** B = A transformed: columns permuted, column r rescaled on the right, or column s += column r * rho. */
template <DivisionRingScalar S>
DivMatrix<S> apply_elem_transform(const DivMatrix<S>& A, const ElemTransform<S>& t) {
  using Kind = typename ElemTransform<S>::Kind;
  DivMatrix<S> B = A;
  switch (t.kind) {
    case Kind::permute_cols: {
      if (static_cast<int>(t.tau.size()) != A.cols())
        throw ShapeMismatch("permutation size does not match column count");
      // Column j of A lands in column tau(j) of B.
      for (int j = 1; j <= A.cols(); ++j)
        for (int i = 1; i <= A.rows(); ++i)
          B.set(i, t.tau[static_cast<std::size_t>(j) - 1], A.at(i, j));
      break;
    }
    case Kind::rescale_col: {
      if (t.rho.is_zero()) throw ZeroInverse();
      for (int i = 1; i <= A.rows(); ++i) B.set(i, t.r, A.at(i, t.r) * t.rho);
      break;
    }
    case Kind::add_col: {
      if (t.r == t.s) throw BadSize("source and target columns must differ");
      for (int i = 1; i <= A.rows(); ++i)
        B.set(i, t.s, A.at(i, t.s) + A.at(i, t.r) * t.rho);
      break;
    }
  }
  return B;
}

/**
 * Checks how |.|_ij responds to one elementary column transformation:
 * permutations relocate the value, a right rescale of column j multiplies
 * it by rho on the right, and adding a right multiple of column r changes
 * nothing at any position with j != r.
 */
template <DivisionRingScalar S>
Outcome verify_elem_transform(const DivMatrix<S>& A, const ElemTransform<S>& t,
                              int i, int j) {
  using Kind = typename ElemTransform<S>::Kind;
  const DivMatrix<S> B = apply_elem_transform(A, t);
  const Quasi<S> lhs_a = quasidet(A, i, j);
  if (!lhs_a.defined()) return Outcome::Undefined;

  int target_col = j;
  S expected = lhs_a.get();
  switch (t.kind) {
    case Kind::permute_cols:
      target_col = t.tau[static_cast<std::size_t>(j) - 1];
      break;
    case Kind::rescale_col:
      if (j == t.r) expected = lhs_a.get() * t.rho;
      break;
    case Kind::add_col:
      if (j == t.r)
        throw BadSize("the add transformation makes no claim at the source column");
      break;
  }
  const Quasi<S> rhs = quasidet(B, i, target_col);
  if (!rhs.defined()) return Outcome::Undefined;
  return rhs.get() == expected ? Outcome::Pass : Outcome::Fail;
}

/**
 * Installs column s := sum over j != s of column j * coeffs[j], then
 * checks that |B|_rs vanishes at every row r where it is defined.
 * coeffs is 1-based-by-column with coeffs[s] ignored.
 */
template <DivisionRingScalar S>
Outcome verify_dependent_column(const DivMatrix<S>& A, int s,
                                const std::vector<S>& coeffs) {
  if (static_cast<int>(coeffs.size()) != A.cols() + 1)
    throw BadSize("need one coefficient per column (1-based)");
  if (s < 1 || s > A.cols()) throw IndexOutOfRange("col " + std::to_string(s));
  DivMatrix<S> B = A;
  for (int i = 1; i <= A.rows(); ++i) {
    S acc(0);
    for (int j = 1; j <= A.cols(); ++j)
      if (j != s) acc = acc + A.at(i, j) * coeffs[static_cast<std::size_t>(j)];
    B.set(i, s, std::move(acc));
  }
  bool any_defined = false;
  for (int r = 1; r <= B.rows(); ++r) {
    const Quasi<S> qd = quasidet(B, r, s);
    if (!qd.defined()) continue;
    any_defined = true;
    if (!qd.get().is_zero()) return Outcome::Fail;
  }
  return any_defined ? Outcome::Pass : Outcome::Undefined;
}

/**
 * Row counterpart: row r := sum over i != r of coeffs[i] * row i (left
 * coefficients, as row dependence demands), then |B|_rj = 0 wherever defined.
 */
template <DivisionRingScalar S>
Outcome verify_dependent_row(const DivMatrix<S>& A, int r,
                             const std::vector<S>& coeffs) {
  if (static_cast<int>(coeffs.size()) != A.rows() + 1)
    throw BadSize("need one coefficient per row (1-based)");
  if (r < 1 || r > A.rows()) throw IndexOutOfRange("row " + std::to_string(r));
  DivMatrix<S> B = A;
  for (int j = 1; j <= A.cols(); ++j) {
    S acc(0);
    for (int i = 1; i <= A.rows(); ++i)
      if (i != r) acc = acc + coeffs[static_cast<std::size_t>(i)] * A.at(i, j);
    B.set(r, j, std::move(acc));
  }
  bool any_defined = false;
  for (int j = 1; j <= B.cols(); ++j) {
    const Quasi<S> qd = quasidet(B, r, j);
    if (!qd.defined()) continue;
    any_defined = true;
    if (!qd.get().is_zero()) return Outcome::Fail;
  }
  return any_defined ? Outcome::Pass : Outcome::Undefined;
}

/**
 * Column homological relation linking values in column j to the minors
 * with row k or row i deleted:
 *
 *   -(|A^kj|_il)^-1 |A|_ij  =  (|A^ij|_kl)^-1 |A|_kj      (l != j, i != k)
 */
template <DivisionRingScalar S>
Outcome verify_homological(const DivMatrix<S>& A, int i, int j, int k, int l) {
  if (l == j || i == k) throw BadSize("homological relation needs l != j and i != k");
  const int n = A.rows();
  IndexTuple all;
  for (int r = 1; r <= n; ++r) all.push_back(r);

  const Quasi<S> a_ij = quasidet(A, i, j);
  const Quasi<S> a_kj = quasidet(A, k, j);
  const Quasi<S> m_il = quasidet_on(A, tuple_diff(all, {k}), tuple_diff(all, {j}), i, l);
  const Quasi<S> m_kl = quasidet_on(A, tuple_diff(all, {i}), tuple_diff(all, {j}), k, l);
  if (!a_ij.defined() || !a_kj.defined() || !m_il.defined_nonzero() ||
      !m_kl.defined_nonzero())
    return Outcome::Undefined;

  const S lhs = -(m_il.get().invert() * a_ij.get());
  const S rhs = m_kl.get().invert() * a_kj.get();
  return lhs == rhs ? Outcome::Pass : Outcome::Fail;
}

/** Same relation through a shared cache, for sweeps over all tuples. */
template <DivisionRingScalar S>
Outcome verify_homological(QdCache<S>& cache, int i, int j, int k, int l) {
  if (l == j || i == k) throw BadSize("homological relation needs l != j and i != k");
  const IndexTuple& all = cache.all_rows();
  const IndexTuple& cols = cache.all_cols();

  const Quasi<S> a_ij = cache.top(i, j);
  const Quasi<S> a_kj = cache.top(k, j);
  const Quasi<S> m_il = cache.at(tuple_diff(all, {k}), tuple_diff(cols, {j}), i, l);
  const Quasi<S> m_kl = cache.at(tuple_diff(all, {i}), tuple_diff(cols, {j}), k, l);
  if (!a_ij.defined() || !a_kj.defined() || !m_il.defined_nonzero() ||
      !m_kl.defined_nonzero())
    return Outcome::Undefined;

  const S lhs = -(m_il.get().invert() * a_ij.get());
  const S rhs = m_kl.get().invert() * a_kj.get();
  return lhs == rhs ? Outcome::Pass : Outcome::Fail;
}

/**
 * One-column expansion of |A|_rs along column s, using a helper column
 * l != s:
 *
 *   |A|_rs = a_rs - sum over i != r of |A^is|_rl (|A^rs|_il)^-1 a_is
 */
template <DivisionRingScalar S>
Outcome verify_col_expansion(const DivMatrix<S>& A, int r, int s, int l) {
  if (l == s) throw BadSize("expansion needs a helper column l != s");
  const int n = A.rows();
  IndexTuple all;
  for (int t = 1; t <= n; ++t) all.push_back(t);

  const Quasi<S> target = quasidet(A, r, s);
  if (!target.defined()) return Outcome::Undefined;

  S sum(0);
  for (int i = 1; i <= n; ++i) {
    if (i == r) continue;
    const Quasi<S> outer =
        quasidet_on(A, tuple_diff(all, {i}), tuple_diff(all, {s}), r, l);
    const Quasi<S> inner =
        quasidet_on(A, tuple_diff(all, {r}), tuple_diff(all, {s}), i, l);
    if (!outer.defined() || !inner.defined_nonzero()) return Outcome::Undefined;
    sum = sum + outer.get() * inner.get().invert() * A.at(i, s);
  }
  return target.get() == A.at(r, s) - sum ? Outcome::Pass : Outcome::Fail;
}

/** Same expansion through a shared cache, for sweeps over all (r, s, l). */
template <DivisionRingScalar S>
Outcome verify_col_expansion(QdCache<S>& cache, int r, int s, int l) {
  if (l == s) throw BadSize("expansion needs a helper column l != s");
  const DivMatrix<S>& A = cache.matrix();
  const IndexTuple& all = cache.all_rows();
  const IndexTuple& cols = cache.all_cols();

  const Quasi<S> target = cache.top(r, s);
  if (!target.defined()) return Outcome::Undefined;

  S sum(0);
  for (int i = 1; i <= A.rows(); ++i) {
    if (i == r) continue;
    const Quasi<S> outer = cache.at(tuple_diff(all, {i}), tuple_diff(cols, {s}), r, l);
    const Quasi<S> inner = cache.at(tuple_diff(all, {r}), tuple_diff(cols, {s}), i, l);
    if (!outer.defined() || !inner.defined_nonzero()) return Outcome::Undefined;
    sum = sum + outer.get() * inner.get().invert() * A.at(i, s);
  }
  return target.get() == A.at(r, s) - sum ? Outcome::Pass : Outcome::Fail;
}

/**
 * Inversion law: the (j,i) entry of A^-1 is the inverse of |A|_ij,
 * whenever A is invertible and the quasideterminant is defined and nonzero.
 */
template <DivisionRingScalar S>
Outcome verify_inversion_law(const DivMatrix<S>& A, int i, int j) {
  DivMatrix<S> inv(1, 1);
  try {
    inv = dr_inverse(A);
  } catch (const SingularMatrix&) {
    return Outcome::Undefined;
  }
  const Quasi<S> qd = quasidet(A, i, j);
  if (!qd.defined_nonzero()) return Outcome::Undefined;
  return qd.get().invert() == inv.at(j, i) ? Outcome::Pass : Outcome::Fail;
}

/**
 * Same law through a shared cache and a precomputed inverse, so a sweep
 * over every position inverts the matrix once. inv must be the inverse
 * of cache.matrix().
 */
template <DivisionRingScalar S>
Outcome verify_inversion_law(QdCache<S>& cache, const DivMatrix<S>& inv, int i,
                             int j) {
  const Quasi<S> qd = cache.top(i, j);
  if (!qd.defined_nonzero()) return Outcome::Undefined;
  return qd.get().invert() == inv.at(j, i) ? Outcome::Pass : Outcome::Fail;
}

}  // namespace ncgrass
