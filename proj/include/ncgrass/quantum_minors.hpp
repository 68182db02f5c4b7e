#pragma once

#include <optional>
#include <utility>

#include "ncgrass/combinatorics.hpp"
#include "ncgrass/matrix.hpp"
#include "ncgrass/nc_algebra.hpp"
#include "ncgrass/outcome.hpp"

namespace ncgrass {

/** The generic matrix of one block's generators, as a matrix of NCPolys. */
inline DivMatrix<NCPoly> generator_matrix(const AlgebraContext& ctx, int block = 1) {
  DivMatrix<NCPoly> X(ctx.rows, ctx.cols);
  for (int i = 1; i <= ctx.rows; ++i)
    for (int j = 1; j <= ctx.cols; ++j) X.set(i, j, NCPoly::gen(ctx, i, j, block));
  return X;
}

/**
 * Quantum determinant of a square matrix over the algebra: the signed
 * permutation sum with weight (-q)^(-length), entries multiplied top row
 * first. The entries need not commute, so the row order matters and is
 * part of the definition.
 */
inline NCPoly quantum_det(const DivMatrix<NCPoly>& M) {
  if (M.rows() != M.cols())
    throw ShapeMismatch("quantum determinant needs a square matrix, got " + M.dims());
  const int n = M.rows();
  NCPoly sum;
  for (const Permutation& sigma : permutations(n)) {
    NCPoly prod(1);
    for (int i = 1; i <= n; ++i)
      prod = prod * M.at(i, sigma.image[static_cast<std::size_t>(i - 1)]);
    sum = sum + NCPoly::scalar(LaurentPoly::neg_q_pow(-sigma.length)) * prod;
  }
  return sum;
}

/**
 * Quantum determinant over a chosen row tuple and column tuple of the
 * generator grid. Tuples may repeat or arrive unsorted; the permutation
 * sum is taken literally over them.
 */
inline NCPoly qdet(const AlgebraContext& ctx, const IndexTuple& rows,
                   const IndexTuple& cols, int block = 1) {
  if (rows.size() != cols.size())
    throw ShapeMismatch("quantum determinant over " + std::to_string(rows.size()) +
                        " rows and " + std::to_string(cols.size()) + " columns");
  const int k = static_cast<int>(rows.size());
  NCPoly sum;
  for (const Permutation& sigma : permutations(k)) {
    NCWord word;
    for (int t = 0; t < k; ++t)
      word.push_back(Generator{
          block, rows[static_cast<std::size_t>(t)],
          cols[static_cast<std::size_t>(
              sigma.image[static_cast<std::size_t>(t)] - 1)]});
    sum = sum +
          NCPoly::from_word(ctx, word, LaurentPoly::neg_q_pow(-sigma.length));
  }
  return sum;
}

/**
 * The bracket minor of a row tuple: its quantum determinant against the
 * leading columns 1..|I|. The empty minor is 1.
 */
inline NCPoly quantum_minor(const AlgebraContext& ctx, const IndexTuple& I,
                            int block = 1) {
  if (static_cast<int>(I.size()) > ctx.cols)
    throw BadSize("minor over " + std::to_string(I.size()) +
                  " rows exceeds the " + std::to_string(ctx.cols) +
                  " available columns");
  IndexTuple cols;
  for (int j = 1; j <= static_cast<int>(I.size()); ++j) cols.push_back(j);
  return qdet(ctx, I, cols, block);
}

/**
 * Alternating canonicalization of a row tuple: zero coefficient on a
 * repeat, otherwise the sorted tuple weighted by (-q)^(-inversions).
 */
inline std::pair<LaurentPoly, IndexTuple> alternating_canonical(const IndexTuple& I) {
  IndexTuple s = sorted(I);
  for (std::size_t k = 0; k + 1 < s.size(); ++k)
    if (s[k] == s[k + 1]) return {LaurentPoly(), IndexTuple{}};
  return {LaurentPoly::neg_q_pow(-tuple_length(I)), std::move(s)};
}

/** The minor of an arbitrary row tuple, routed through canonicalization. */
inline NCPoly canonical_minor(const AlgebraContext& ctx, const IndexTuple& I,
                              int block = 1) {
  auto [coeff, rows] = alternating_canonical(I);
  if (coeff.is_zero()) return NCPoly();
  return NCPoly::scalar(coeff) * quantum_minor(ctx, rows, block);
}

/**
 * A scrambled or repeating row tuple must collapse to the canonical
 * minor: zero on repeats, a (-q) power times the sorted minor otherwise.
 */
inline Outcome verify_q_alternating(const AlgebraContext& ctx, const IndexTuple& rows,
                                    int block = 1) {
  const NCPoly lhs = quantum_minor(ctx, rows, block);
  const NCPoly rhs = canonical_minor(ctx, rows, block);
  return nc_eq(lhs, rhs) ? Outcome::Pass : Outcome::Fail;
}

/** The full quantum determinant commutes with every generator (square grid). */
inline Outcome verify_centrality(const AlgebraContext& ctx) {
  if (ctx.rows != ctx.cols)
    throw ShapeMismatch("centrality concerns a square generator grid, got " +
                        std::to_string(ctx.rows) + "x" + std::to_string(ctx.cols));
  IndexTuple all;
  for (int i = 1; i <= ctx.rows; ++i) all.push_back(i);
  const NCPoly D = quantum_minor(ctx, all);
  for (int i = 1; i <= ctx.rows; ++i)
    for (int j = 1; j <= ctx.cols; ++j) {
      const NCPoly x = NCPoly::gen(ctx, i, j);
      if (!nc_eq(D * x, x * D)) return Outcome::Fail;
    }
  return Outcome::Pass;
}

/**
 * Antipode of the square sub-grid on the given sorted rows and columns:
 * entry (u, v) is (-q)^(v-u) times the quantum determinant of the
 * sub-grid with its v-th row and u-th column removed.
 */
inline DivMatrix<NCPoly> antipode_on(const AlgebraContext& ctx, const IndexTuple& R,
                                     const IndexTuple& C, int block = 1) {
  if (R.size() != C.size() || R.empty())
    throw ShapeMismatch("antipode needs equally many rows and columns, got " +
                        std::to_string(R.size()) + " and " + std::to_string(C.size()));
  const int m = static_cast<int>(R.size());
  DivMatrix<NCPoly> S(m, m);
  for (int u = 1; u <= m; ++u)
    for (int v = 1; v <= m; ++v) {
      IndexTuple rows, cols;
      for (int t = 1; t <= m; ++t) {
        if (t != v) rows.push_back(R[static_cast<std::size_t>(t - 1)]);
        if (t != u) cols.push_back(C[static_cast<std::size_t>(t - 1)]);
      }
      S.set(u, v, NCPoly::scalar(LaurentPoly::neg_q_pow(v - u)) *
                      qdet(ctx, rows, cols, block));
    }
  return S;
}

/** Antipode matrix of the full square generator grid. */
inline DivMatrix<NCPoly> antipode(const AlgebraContext& ctx) {
  if (ctx.rows != ctx.cols)
    throw ShapeMismatch("antipode needs a square generator grid, got " +
                        std::to_string(ctx.rows) + "x" + std::to_string(ctx.cols));
  IndexTuple all;
  for (int i = 1; i <= ctx.rows; ++i) all.push_back(i);
  return antipode_on(ctx, all, all);
}

/** S(X)·X and X·S(X) are both det_q times the identity. */
inline Outcome verify_antipode(const AlgebraContext& ctx) {
  const DivMatrix<NCPoly> X = generator_matrix(ctx);
  const DivMatrix<NCPoly> S = antipode(ctx);
  IndexTuple all;
  for (int i = 1; i <= ctx.rows; ++i) all.push_back(i);
  const NCPoly D = quantum_minor(ctx, all);
  const DivMatrix<NCPoly> left = S * X;
  const DivMatrix<NCPoly> right = X * S;
  for (int i = 1; i <= ctx.rows; ++i)
    for (int j = 1; j <= ctx.rows; ++j) {
      const NCPoly want = (i == j) ? D : NCPoly();
      if (!nc_eq(left.at(i, j), want)) return Outcome::Fail;
      if (!nc_eq(right.at(i, j), want)) return Outcome::Fail;
    }
  return Outcome::Pass;
}

/**
 * Checks the four defining relations on a matrix of algebra elements,
 * with the deformation parameter q^direction (direction -1 gives the
 * inverse-parameter relations). Entry pairs range over all positions.
 */
inline bool matrix_is_q_generic(const DivMatrix<NCPoly>& M, int direction) {
  const NCPoly qv = NCPoly::scalar(LaurentPoly::q(direction));
  const NCPoly bracket =
      NCPoly::scalar(LaurentPoly::q(direction) - LaurentPoly::q(-direction));
  for (int k = 1; k <= M.rows(); ++k)
    for (int i = 1; i < M.cols(); ++i)
      for (int j = i + 1; j <= M.cols(); ++j)
        if (!nc_eq(M.at(k, j) * M.at(k, i), qv * M.at(k, i) * M.at(k, j)))
          return false;
  for (int k = 1; k <= M.cols(); ++k)
    for (int i = 1; i < M.rows(); ++i)
      for (int j = i + 1; j <= M.rows(); ++j)
        if (!nc_eq(M.at(j, k) * M.at(i, k), qv * M.at(i, k) * M.at(j, k)))
          return false;
  for (int i = 1; i < M.rows(); ++i)
    for (int j = i + 1; j <= M.rows(); ++j)
      for (int k = 1; k < M.cols(); ++k)
        for (int l = k + 1; l <= M.cols(); ++l) {
          if (!nc_eq(M.at(j, k) * M.at(i, l), M.at(i, l) * M.at(j, k)))
            return false;
          if (!nc_eq(M.at(j, l) * M.at(i, k),
                     M.at(i, k) * M.at(j, l) + bracket * M.at(i, l) * M.at(j, k)))
            return false;
        }
  return true;
}

/** The antipode entries obey the defining relations with q inverted. */
inline Outcome verify_inverse_genericity(const AlgebraContext& ctx) {
  return matrix_is_q_generic(antipode(ctx), -1) ? Outcome::Pass : Outcome::Fail;
}

/**
 * With two mutually commuting generic blocks X and Y, the product XY is
 * again generic for the same q and its quantum determinant factors.
 */
inline Outcome verify_multiplicativity(int n) {
  AlgebraContext ctx(n, n, 2, true);
  const DivMatrix<NCPoly> X = generator_matrix(ctx, 1);
  const DivMatrix<NCPoly> Y = generator_matrix(ctx, 2);
  const DivMatrix<NCPoly> Z = X * Y;
  if (!matrix_is_q_generic(Z, 1)) return Outcome::Fail;
  const NCPoly dz = quantum_det(Z);
  const NCPoly dx = quantum_det(X);
  const NCPoly dy = quantum_det(Y);
  return nc_eq(dz, dx * dy) ? Outcome::Pass : Outcome::Fail;
}

/** [j∪M][i∪M] = q·[i∪M][j∪M] for i < j, both outside M. */
inline Outcome verify_weak_qcommute(const AlgebraContext& ctx, int i, int j,
                                    const IndexTuple& M) {
  if (i >= j) throw BadSize("weak q-commutation wants i < j");
  if (contains(M, i) || contains(M, j))
    throw BadSize("rows i and j must lie outside M");
  const NCPoly a = quantum_minor(ctx, tuple_union({i}, M));
  const NCPoly b = quantum_minor(ctx, tuple_union({j}, M));
  return nc_eq(b * a, NCPoly::scalar(LaurentPoly::q()) * a * b) ? Outcome::Pass
                                                                : Outcome::Fail;
}

/**
 * Smallest-exponent search for a relation a*b = q^e * b*a, probing e in
 * the order 0, 1, -1, 2, -2, ... within the closed window. Absence of a
 * certificate in the window is an answer, not an error.
 */
inline std::optional<long> q_power_between(const NCPoly& a, const NCPoly& b,
                                           long window) {
  const NCPoly lhs = a * b;
  const NCPoly swapped = b * a;
  for (long step = 0; step <= 2 * window; ++step) {
    const long e = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
    if (e < -window || e > window) continue;
    if (nc_eq(lhs, NCPoly::scalar(LaurentPoly::q(static_cast<int>(e))) * swapped))
      return e;
  }
  return std::nullopt;
}

/**
 * Exponent b with [J][I] = q^b [I][J], searched over |b| <= 2*cols*rows.
 */
inline std::optional<long> q_commute_exponent(const AlgebraContext& ctx,
                                              const IndexTuple& I,
                                              const IndexTuple& J) {
  return q_power_between(quantum_minor(ctx, J), quantum_minor(ctx, I),
                         2L * ctx.cols * ctx.rows);
}

/**
 * Young symmetry: over all r-subsets L of I, the sum of
 * (-q)^(-inversions of I\L followed by L) * [I\L] * [L|J] vanishes,
 * where [L|J] is the canonicalized minor of L and J concatenated.
 */
inline Outcome verify_young_symmetry(const AlgebraContext& ctx, int d, int r,
                                     const IndexTuple& I, const IndexTuple& J) {
  if (d != ctx.cols) throw BadSize("d must match the context column count");
  if (r < 1 || static_cast<int>(I.size()) != d + r ||
      static_cast<int>(J.size()) != d - r)
    throw BadSize("need |I| = d+r and |J| = d-r with r >= 1");
  NCPoly sum;
  for (const IndexTuple& lam : subsets(I, r)) {
    const auto [_, len] = split_tuple(I, lam);
    sum = sum + NCPoly::scalar(LaurentPoly::neg_q_pow(-len)) *
                    quantum_minor(ctx, tuple_diff(I, lam)) *
                    canonical_minor(ctx, concat(lam, J));
  }
  return sum.is_zero() ? Outcome::Pass : Outcome::Fail;
}

/**
 * Scalar half of the staircase reduction: for a sorted set L of size r,
 * summing (-q)^(2(r-1) - 2*inv(L\{e} followed by e)) over e in L gives
 * 1 + q^2 + ... + q^(2(r-1)).
 */
inline Outcome verify_reduction_scalar(const IndexTuple& lam) {
  const int r = static_cast<int>(lam.size());
  LaurentPoly lhs;
  for (int s = 0; s < r; ++s) {
    IndexTuple rest;
    for (int t = 0; t < r; ++t)
      if (t != s) rest.push_back(lam[static_cast<std::size_t>(t)]);
    const long len = tuple_length(concat(rest, {lam[static_cast<std::size_t>(s)]}));
    lhs += LaurentPoly::neg_q_pow(2L * (r - 1) - 2L * len);
  }
  LaurentPoly rhs;
  for (int t = 0; t < r; ++t) rhs += LaurentPoly::neg_q_pow(2L * t);
  return lhs == rhs ? Outcome::Pass : Outcome::Fail;
}

/**
 * Staircase reduction of the Young sum: expanding along each deleted row
 * index i_s with (r-1)-subsets of the remainder reproduces the full
 * r-subset sum, scaled by 1 + q^2 + ... + q^(2(r-1)). Verified as an
 * identity of normal forms, plus the scalar half for every r-subset.
 */
inline Outcome verify_reduction(const AlgebraContext& ctx, int d, int r,
                                const IndexTuple& I, const IndexTuple& J) {
  if (d != ctx.cols) throw BadSize("d must match the context column count");
  if (r < 1 || static_cast<int>(I.size()) != d + r ||
      static_cast<int>(J.size()) != d - r)
    throw BadSize("need |I| = d+r and |J| = d-r with r >= 1");

  NCPoly lhs;
  for (std::size_t s = 0; s < I.size(); ++s) {
    const int is = I[s];
    IndexTuple rest;
    for (std::size_t t = 0; t < I.size(); ++t)
      if (t != s) rest.push_back(I[t]);
    const long outer = tuple_length(concat(rest, {is}));
    for (const IndexTuple& lam : subsets(rest, r - 1)) {
      const auto [_, len] = split_tuple(rest, lam);
      lhs = lhs +
            NCPoly::scalar(LaurentPoly::neg_q_pow(2L * (r - 1) - outer - len)) *
                quantum_minor(ctx, tuple_diff(rest, lam)) *
                canonical_minor(ctx, concat(concat(lam, {is}), J));
    }
  }

  NCPoly young;
  for (const IndexTuple& lam : subsets(I, r)) {
    const auto [_, len] = split_tuple(I, lam);
    young = young + NCPoly::scalar(LaurentPoly::neg_q_pow(-len)) *
                        quantum_minor(ctx, tuple_diff(I, lam)) *
                        canonical_minor(ctx, concat(lam, J));
  }
  LaurentPoly ladder;
  for (int t = 0; t < r; ++t) ladder += LaurentPoly::neg_q_pow(2L * t);
  if (!nc_eq(lhs, NCPoly::scalar(ladder) * young)) return Outcome::Fail;

  for (const IndexTuple& lam : subsets(I, r))
    if (verify_reduction_scalar(lam) != Outcome::Pass) return Outcome::Fail;
  return Outcome::Pass;
}

/**
 * The minor on the last d rows q-commutes with every other d-row minor,
 * with exponent counting how many of those last rows the other minor misses.
 */
inline Outcome verify_last_minor_commutation(const AlgebraContext& ctx, int d,
                                             int n, const IndexTuple& I) {
  if (d != ctx.cols || n != ctx.rows)
    throw BadSize("d and n must match the context");
  if (static_cast<int>(I.size()) != d) throw BadSize("need |I| = d");
  IndexTuple last;
  for (int i = n - d + 1; i <= n; ++i) last.push_back(i);
  const NCPoly fl = quantum_minor(ctx, last);
  const NCPoly fi = quantum_minor(ctx, I);
  const long e = static_cast<long>(tuple_diff(last, I).size());
  return nc_eq(fl * fi,
               NCPoly::scalar(LaurentPoly::q(static_cast<int>(e))) * fi * fl)
             ? Outcome::Pass
             : Outcome::Fail;
}

}  // namespace ncgrass
