#pragma once

#include <string>
#include <vector>

#include "ncgrass/combinatorics.hpp"
#include "ncgrass/errors.hpp"
#include "ncgrass/matrix.hpp"
#include "ncgrass/outcome.hpp"
#include "ncgrass/quasidet.hpp"

namespace ncgrass {

namespace detail {

inline void validate_qp_inputs(int n, int d, int j, int i, const IndexTuple& M,
                               int s) {
  if (static_cast<int>(M.size()) != d - 1)
    throw BadSize("marked row set must have " + std::to_string(d - 1) +
                  " entries, got " + std::to_string(M.size()));
  const IndexTuple ms = sorted(M);
  for (std::size_t a = 0; a + 1 < ms.size(); ++a)
    if (ms[a] == ms[a + 1]) throw BadSize("marked row set must not repeat");
  for (int r : M)
    if (r < 1 || r > n) throw IndexOutOfRange("row " + std::to_string(r));
  if (j < 1 || j > n) throw IndexOutOfRange("row " + std::to_string(j));
  if (i < 1 || i > n) throw IndexOutOfRange("row " + std::to_string(i));
  if (s < 1 || s > d) throw IndexOutOfRange("column " + std::to_string(s));
  if (contains(M, i)) throw BadSize("denominator row i must not lie in M");
}

}  // namespace detail

/**
 * Ratio coordinate of the tall matrix A (n rows, d columns) attached to
 * rows (j, i) and a marker set M of d-1 further rows:
 *
 *   r_ji^M  =  |A_{j,M}|_{j,s} * (|A_{i,M}|_{i,s})^-1
 *
 * where A_{x,M} stacks row x on top of the rows M in the order listed.
 * The value does not depend on s, nor on the ordering of M; both facts
 * are verified elsewhere rather than assumed here. This variant keeps
 * M exactly as listed so that ordering independence is testable.
 */
template <DivisionRingScalar S>
Quasi<S> qp_coord_ordered(const DivMatrix<S>& A, int j, int i,
                          const IndexTuple& M, int s) {
  const int n = A.rows(), d = A.cols();
  detail::validate_qp_inputs(n, d, j, i, M, s);

  IndexTuple cols;
  for (int c = 1; c <= d; ++c) cols.push_back(c);

  const DivMatrix<S> top = submatrix_keep(A, concat({j}, M), cols);
  const DivMatrix<S> bottom = submatrix_keep(A, concat({i}, M), cols);
  const Quasi<S> num = quasidet(top, 1, s);
  const Quasi<S> den = quasidet(bottom, 1, s);
  if (!num.defined())
    return Quasi<S>::undef(j, s, "numerator: " + num.reason());
  if (!den.defined())
    return Quasi<S>::undef(i, s, "denominator: " + den.reason());
  if (den.get().is_zero())
    return Quasi<S>::undef(i, s, "denominator value is zero");
  return Quasi<S>::ok(num.get() * den.get().invert());
}

/** Canonical form of the ratio coordinate: marker rows in increasing order, s = 1. */
template <DivisionRingScalar S>
Quasi<S> qp_coord(const DivMatrix<S>& A, int j, int i, const IndexTuple& M,
                  int s = 1) {
  return qp_coord_ordered(A, j, i, sorted(M), s);
}

/**
 * Cache-backed coordinate. The two quasideterminants live on row subsets
 * of the one matrix behind the cache, so exhaustive sweeps over (j, i, M)
 * revisit the same lattice entries instead of rebuilding them. When j
 * lies in M the stacked matrix carries a repeated row, which no subset
 * selection can express; that case takes the literal construction.
 */
template <DivisionRingScalar S>
Quasi<S> qp_coord(QdCache<S>& cache, int j, int i, const IndexTuple& M,
                  int s = 1) {
  const DivMatrix<S>& A = cache.matrix();
  const IndexTuple Ms = sorted(M);
  detail::validate_qp_inputs(A.rows(), A.cols(), j, i, Ms, s);
  if (contains(Ms, j)) return qp_coord(A, j, i, Ms, s);

  const Quasi<S> num = cache.at(tuple_union(Ms, {j}), cache.all_cols(), j, s);
  const Quasi<S> den = cache.at(tuple_union(Ms, {i}), cache.all_cols(), i, s);
  if (!num.defined())
    return Quasi<S>::undef(j, s, "numerator: " + num.reason());
  if (!den.defined())
    return Quasi<S>::undef(i, s, "denominator: " + den.reason());
  if (den.get().is_zero())
    return Quasi<S>::undef(i, s, "denominator value is zero");
  return Quasi<S>::ok(num.get() * den.get().invert());
}

/** All d column choices give the same coordinate value. */
template <DivisionRingScalar S>
Outcome verify_s_independence(const DivMatrix<S>& A, int j, int i,
                              const IndexTuple& M) {
  bool have = false;
  S first(0);
  for (int s = 1; s <= A.cols(); ++s) {
    const Quasi<S> r = qp_coord(A, j, i, M, s);
    if (!r.defined()) continue;
    if (!have) {
      first = r.get();
      have = true;
    } else if (!(r.get() == first)) {
      return Outcome::Fail;
    }
  }
  return have ? Outcome::Pass : Outcome::Undefined;
}

/** Cache-backed column-choice sweep for exhaustive (j, i, M) passes. */
template <DivisionRingScalar S>
Outcome verify_s_independence(QdCache<S>& cache, int j, int i,
                              const IndexTuple& M) {
  bool have = false;
  S first(0);
  for (int s = 1; s <= cache.matrix().cols(); ++s) {
    const Quasi<S> r = qp_coord(cache, j, i, M, s);
    if (!r.defined()) continue;
    if (!have) {
      first = r.get();
      have = true;
    } else if (!(r.get() == first)) {
      return Outcome::Fail;
    }
  }
  return have ? Outcome::Pass : Outcome::Undefined;
}

/** Right multiplication by an invertible d x d matrix leaves every coordinate fixed. */
template <DivisionRingScalar S>
Outcome verify_gl_invariance(const DivMatrix<S>& A, const DivMatrix<S>& g, int j,
                             int i, const IndexTuple& M) {
  if (g.rows() != A.cols() || g.cols() != A.cols())
    throw ShapeMismatch("transforming matrix must be " + std::to_string(A.cols()) +
                        "x" + std::to_string(A.cols()));
  dr_inverse(g);  // SingularMatrix if g is not invertible
  const DivMatrix<S> Ag = A * g;
  for (int s = 1; s <= A.cols(); ++s) {
    const Quasi<S> lhs = qp_coord(Ag, j, i, M, s);
    const Quasi<S> rhs = qp_coord(A, j, i, M, s);
    if (!lhs.defined() || !rhs.defined()) continue;
    return lhs.get() == rhs.get() ? Outcome::Pass : Outcome::Fail;
  }
  return Outcome::Undefined;
}

/**
 * Cache-backed invariance check for sweeps that reuse one transforming
 * matrix: the caller supplies caches over A and over A*g and guarantees
 * that relationship, with g invertible, having built the product once.
 */
template <DivisionRingScalar S>
Outcome verify_gl_invariance(QdCache<S>& on_A, QdCache<S>& on_Ag, int j, int i,
                             const IndexTuple& M) {
  if (on_Ag.matrix().rows() != on_A.matrix().rows() ||
      on_Ag.matrix().cols() != on_A.matrix().cols())
    throw ShapeMismatch("transformed matrix must match the original shape");
  for (int s = 1; s <= on_A.matrix().cols(); ++s) {
    const Quasi<S> lhs = qp_coord(on_Ag, j, i, M, s);
    const Quasi<S> rhs = qp_coord(on_A, j, i, M, s);
    if (!lhs.defined() || !rhs.defined()) continue;
    return lhs.get() == rhs.get() ? Outcome::Pass : Outcome::Fail;
  }
  return Outcome::Undefined;
}

/**
 * Structural properties of the ratio coordinates, swept exhaustively for
 * the given matrix:
 *   (a) the ordering of M does not matter;
 *   (b) r_ji^M = 0 when j lies in M, and r_ii^M = 1;
 *   (c) cocycle: r_ji^M r_il^M = r_jl^M whenever i, l avoid M;
 *   (d) for |M| = d-2 and distinct i, j, l outside M,
 *       r_ij^(M+l) r_jl^(M+i) r_li^(M+j) = -1.
 */
template <DivisionRingScalar S>
Outcome verify_qp_properties(const DivMatrix<S>& A) {
  const int n = A.rows(), d = A.cols();
  IndexTuple rows_all;
  for (int r = 1; r <= n; ++r) rows_all.push_back(r);
  bool any = false;
  // One coordinate shows up in many properties; share its evaluations.
  // The permuted comparisons in (a) stay on the literal construction,
  // since the ordering of the build is the thing under test there.
  QdCache<S> cache(A);

  // (a)-(c) walk the same marker sets, so each coordinate is evaluated
  // once per set and reread from a local table after that.
  for (const auto& M : subsets(rows_all, static_cast<std::size_t>(d - 1))) {
    std::vector<Quasi<S>> table(static_cast<std::size_t>((n + 1) * (n + 1)),
                                Quasi<S>::undef(0, 0, "unset"));
    auto coord = [&](int j, int i) -> Quasi<S>& {
      return table[static_cast<std::size_t>(j * (n + 1) + i)];
    };
    for (int j = 1; j <= n; ++j)
      for (int i = 1; i <= n; ++i) {
        if (contains(M, i)) continue;
        coord(j, i) = qp_coord(cache, j, i, M);
      }

    // (a) ordering of M, every permutation of each marker set
    for (int j = 1; j <= n; ++j)
      for (int i = 1; i <= n; ++i) {
        if (contains(M, i)) continue;
        const Quasi<S>& canon = coord(j, i);
        if (!canon.defined()) continue;
        IndexTuple perm = M;
        while (std::next_permutation(perm.begin(), perm.end())) {
          const Quasi<S> other = qp_coord_ordered(A, j, i, perm, 1);
          if (!other.defined()) continue;
          any = true;
          if (!(other.get() == canon.get())) return Outcome::Fail;
        }
        // (b) pinned values
        if (contains(M, j)) {
          any = true;
          if (!canon.get().is_zero()) return Outcome::Fail;
        }
        if (j == i) {
          any = true;
          if (!canon.get().is_one()) return Outcome::Fail;
        }
      }

    // (c) cocycle, including l = j which forces r_ji^M r_ij^M = 1
    for (int j = 1; j <= n; ++j)
      for (int i = 1; i <= n; ++i) {
        if (contains(M, i)) continue;
        for (int l = 1; l <= n; ++l) {
          if (contains(M, l)) continue;
          const Quasi<S>& r_ji = coord(j, i);
          const Quasi<S>& r_il = coord(i, l);
          const Quasi<S>& r_jl = coord(j, l);
          if (!r_ji.defined() || !r_il.defined() || !r_jl.defined()) continue;
          any = true;
          if (!(r_ji.get() * r_il.get() == r_jl.get())) return Outcome::Fail;
        }
      }
  }

  // (d) triple product, only meaningful when marker sets of size d-2 exist
  if (d >= 2) {
    for (const auto& M : subsets(rows_all, static_cast<std::size_t>(d - 2))) {
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (int l = 1; l <= n; ++l) {
            if (i == j || j == l || i == l) continue;
            if (contains(M, i) || contains(M, j) || contains(M, l)) continue;
            const Quasi<S> f1 = qp_coord(cache, i, j, tuple_union(M, {l}));
            const Quasi<S> f2 = qp_coord(cache, j, l, tuple_union(M, {i}));
            const Quasi<S> f3 = qp_coord(cache, l, i, tuple_union(M, {j}));
            if (!f1.defined() || !f2.defined() || !f3.defined()) continue;
            any = true;
            if (!(f1.get() * f2.get() * f3.get() == -S(1))) return Outcome::Fail;
          }
    }
  }

  return any ? Outcome::Pass : Outcome::Undefined;
}

/**
 * The coordinate relation attached to a pivot row i, a row set L of size
 * d and a marker set M of size d-1:
 *
 *   sum over j in L of   r_ij^(L minus j) * r_ji^M   =  1
 *
 * Returns the exact sum so callers can inspect near-misses; undefined if
 * any participating coordinate is.
 */
template <DivisionRingScalar S>
Quasi<S> verify_qp_relation(const DivMatrix<S>& A, int i, const IndexTuple& L,
                            const IndexTuple& M) {
  const int d = A.cols();
  if (static_cast<int>(L.size()) != d)
    throw BadSize("row set L must have " + std::to_string(d) + " entries");
  if (sorted(L).size() != L.size()) throw BadSize("row set L must not repeat");
  S acc(0);
  QdCache<S> cache(A);
  for (int j : L) {
    const Quasi<S> left = qp_coord(cache, i, j, tuple_diff(L, {j}));
    const Quasi<S> right = qp_coord(cache, j, i, M);
    if (!left.defined())
      return Quasi<S>::undef(i, j, "term j=" + std::to_string(j) +
                                       " left factor: " + left.reason());
    if (!right.defined())
      return Quasi<S>::undef(j, i, "term j=" + std::to_string(j) +
                                       " right factor: " + right.reason());
    acc = acc + left.get() * right.get();
  }
  return Quasi<S>::ok(acc);
}

/**
 * Column-normalized form C = A * B^-1 with B the top d x d block of A.
 * The top block of C is the identity and everything below it is made of
 * ratio coordinates of A, which is what makes C a complete invariant of
 * the column span.
 */
template <DivisionRingScalar S>
DivMatrix<S> normalize_columns(const DivMatrix<S>& A) {
  const int n = A.rows(), d = A.cols();
  if (n < d) throw BadSize("need at least as many rows as columns");
  IndexTuple top;
  for (int r = 1; r <= d; ++r) top.push_back(r);
  IndexTuple cols = top;
  const DivMatrix<S> B = submatrix_keep(A, top, cols);
  return A * dr_inverse(B);  // SingularMatrix propagates
}

/**
 * Checks the content of normalize_columns: identity on top, and below it
 * C(i, j) = r_ij^M(A) with M = {1..d} minus {j}. Undefined coordinate
 * instances are skipped.
 */
template <DivisionRingScalar S>
Outcome verify_normalized_entries(const DivMatrix<S>& A) {
  const int n = A.rows(), d = A.cols();
  const DivMatrix<S> C = normalize_columns(A);
  IndexTuple top;
  for (int r = 1; r <= d; ++r) top.push_back(r);
  if (!submatrix_keep(C, top, top).is_identity()) return Outcome::Fail;

  bool any = false;
  for (int i = d + 1; i <= n; ++i)
    for (int j = 1; j <= d; ++j) {
      Quasi<S> r = Quasi<S>::undef(0, 0, "no defined column choice");
      for (int s = 1; s <= d && !r.defined(); ++s)
        r = qp_coord(A, i, j, tuple_diff(top, {j}), s);
      if (!r.defined()) continue;
      any = true;
      if (!(C.at(i, j) == r.get())) return Outcome::Fail;
    }
  return (n == d || any) ? Outcome::Pass : Outcome::Undefined;
}

}  // namespace ncgrass
