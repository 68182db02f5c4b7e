#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncgrass/classical.hpp"
#include "ncgrass/combinatorics.hpp"
#include "ncgrass/quantum_minors.hpp"

namespace ncgrass {

/**
 * Formal bracket minor over an order-significant row tuple. Evaluates to
 * the literal quantum determinant of those rows against the leading
 * columns; sorting it costs the usual (-q) power, which callers track
 * explicitly rather than baking into the symbol.
 */
struct MinorSymbol {
  IndexTuple rows;
  auto operator<=>(const MinorSymbol&) const = default;

  std::string str() const {
    std::string s = "[";
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k) s += " ";
      s += std::to_string(rows[k]);
    }
    return s + "]";
  }
};

struct RatioFactor {
  MinorSymbol sym;
  int exp;  // +1 or -1
};

/**
 * A scalar monomial in q times an ordered product of minors and inverse
 * minors. This is the carrier for ratio manipulations: the only allowed
 * moves are appending factors, cancelling adjacent exact inverses,
 * swapping adjacent factors against a supplied q-power certificate, and
 * replacing one symbol by a scalar multiple of another. Each move checks
 * its structural precondition, so a derivation that compiles and runs is
 * a faithful transcript.
 */
class MinorRatioWord {
 public:
  MinorRatioWord(LaurentPoly pre, std::vector<RatioFactor> factors)
      : pre_(std::move(pre)), fs_(std::move(factors)) {
    if (!pre_.is_monomial()) throw NonUnit(pre_.str());
    for (const RatioFactor& f : fs_)
      if (f.exp != 1 && f.exp != -1)
        throw BadSize("ratio factor exponents must be +1 or -1");
  }

  const LaurentPoly& prefactor() const { return pre_; }
  const std::vector<RatioFactor>& factors() const { return fs_; }

  void right_mul(MinorSymbol s, int exp) { fs_.push_back({std::move(s), exp}); }
  void left_mul(MinorSymbol s, int exp) {
    fs_.insert(fs_.begin(), {std::move(s), exp});
  }

  void scale(const LaurentPoly& mono) {
    if (!mono.is_monomial()) throw NonUnit(mono.str());
    pre_ = pre_ * mono;
  }

  /** Remove the factors at positions pos, pos+1, which must be exact inverses. */
  void cancel_at(std::size_t pos) {
    if (pos + 1 >= fs_.size())
      throw IndexOutOfRange("cancel position " + std::to_string(pos));
    const RatioFactor& a = fs_[pos];
    const RatioFactor& b = fs_[pos + 1];
    if (!(a.sym == b.sym) || a.exp + b.exp != 0)
      throw Error("factors " + a.sym.str() + " and " + b.sym.str() +
                  " at position " + std::to_string(pos) + " are not inverse");
    fs_.erase(fs_.begin() + static_cast<long>(pos),
              fs_.begin() + static_cast<long>(pos) + 2);
  }

  /**
   * Swap the factors at pos, pos+1 and multiply by q^cert. The caller is
   * responsible for having certified the exponent; this only performs
   * the bookkeeping.
   */
  void swap_at(std::size_t pos, long cert) {
    if (pos + 1 >= fs_.size())
      throw IndexOutOfRange("swap position " + std::to_string(pos));
    std::swap(fs_[pos], fs_[pos + 1]);
    pre_ = pre_ * LaurentPoly::q(static_cast<int>(cert));
  }

  /**
   * Replace the symbol at pos by another and multiply the prefactor by
   * the supplied conversion scalar (used for alternating resorting).
   */
  void rewrite_symbol(std::size_t pos, MinorSymbol to, const LaurentPoly& conv) {
    if (pos >= fs_.size())
      throw IndexOutOfRange("rewrite position " + std::to_string(pos));
    if (!conv.is_monomial()) throw NonUnit(conv.str());
    fs_[pos].sym = std::move(to);
    pre_ = pre_ * conv;
  }

  /** Inverse-free words evaluate to an algebra element; others refuse. */
  NCPoly evaluate(const AlgebraContext& ctx) const {
    NCPoly prod = NCPoly::scalar(pre_);
    for (const RatioFactor& f : fs_) {
      if (f.exp != 1) throw NonUnit("inverse factor " + f.sym.str());
      prod = prod * quantum_minor(ctx, f.sym.rows);
    }
    return prod;
  }

  std::string str() const {
    std::string s = "(" + pre_.str() + ")";
    for (const RatioFactor& f : fs_) {
      s += "*" + f.sym.str();
      if (f.exp == -1) s += "^-1";
    }
    return s;
  }

 private:
  LaurentPoly pre_;
  std::vector<RatioFactor> fs_;
};

namespace detail {

inline void check_selection(const AlgebraContext& ctx, const IndexTuple& R,
                            const IndexTuple& C, int i, int j) {
  if (R.size() != C.size() || R.empty())
    throw BadSize("need equally many rows and columns, nonempty");
  for (std::size_t k = 0; k + 1 < R.size(); ++k) {
    if (R[k] >= R[k + 1]) throw BadSize("row selection must be strictly increasing");
    if (C[k] >= C[k + 1]) throw BadSize("column selection must be strictly increasing");
  }
  if (R.front() < 1 || R.back() > ctx.rows || C.front() < 1 || C.back() > ctx.cols)
    throw IndexOutOfRange("selection exceeds the generator grid");
  if (!contains(R, i)) throw NotASubset("row " + std::to_string(i));
  if (!contains(C, j)) throw NotASubset("column " + std::to_string(j));
}

}  // namespace detail

/**
 * Grounding fact for every ratio manipulation: on the sub-grid B with
 * sorted rows R and columns C, the quasideterminant at (i, j) satisfies
 *
 *   |B|_ij * det_q(B without row i, col j) = (-q)^(posC(j) - posR(i)) * det_q(B).
 *
 * No division is available in the algebra, so the border expansion of
 * the left side is cleared against the antipode law of the whole
 * selection: the off-diagonal rows of B * S(B) = det_q(B) * Id are
 * exactly the identities that eliminate the inner inverse, and the
 * cleared equation is the diagonal row. Each of those lines is asserted
 * as an exact polynomial identity. When the pivot column sits at the
 * edge of the selection, the border entries additionally admit pure
 * q-power certificates past the inner determinant, and that older
 * certificate-based clearing is replayed as well; a missing certificate
 * there is reported, never papered over.
 */
inline Outcome box_ratio_check(const AlgebraContext& ctx, const IndexTuple& R,
                               const IndexTuple& C, int i, int j) {
  detail::check_selection(ctx, R, C, i, j);
  const int m = static_cast<int>(R.size());
  const int a = pos_in(R, i);
  const int b = pos_in(C, j);
  const long e = b - a;
  const NCPoly full = qdet(ctx, R, C);
  const NCPoly lhs = NCPoly::scalar(LaurentPoly::neg_q_pow(e)) * full;

  if (m == 1) return nc_eq(lhs, NCPoly::gen(ctx, i, j)) ? Outcome::Pass : Outcome::Fail;

  const IndexTuple Ri = tuple_diff(R, {i});
  const IndexTuple Cj = tuple_diff(C, {j});
  const NCPoly inner = qdet(ctx, Ri, Cj);

  DivMatrix<NCPoly> B(m, m);
  for (int u = 1; u <= m; ++u)
    for (int v = 1; v <= m; ++v)
      B.set(u, v, NCPoly::gen(ctx, R[static_cast<std::size_t>(u - 1)],
                              C[static_cast<std::size_t>(v - 1)]));
  const DivMatrix<NCPoly> S = antipode_on(ctx, R, C);
  const DivMatrix<NCPoly> SB = S * B;
  const DivMatrix<NCPoly> BS = B * S;
  for (int u = 1; u <= m; ++u)
    for (int v = 1; v <= m; ++v) {
      const NCPoly want = (u == v) ? full : NCPoly();
      if (!nc_eq(SB.at(u, v), want) || !nc_eq(BS.at(u, v), want))
        return Outcome::Fail;
    }

  // The antipode entry opposite the pivot is the inner determinant.
  if (!nc_eq(S.at(b, a), NCPoly::scalar(LaurentPoly::neg_q_pow(-e)) * inner))
    return Outcome::Fail;

  // Off-diagonal rows of B * S at the pivot's column clear the inner
  // inverse from the border expansion: for every border row c != a,
  //   zeta_c * inner = -(-q)^e * sum over p != b of B(c,p) S(p,a).
  for (int c = 1; c <= m; ++c) {
    if (c == a) continue;
    NCPoly acc;
    for (int p = 1; p <= m; ++p) {
      if (p == b) continue;
      acc = acc + B.at(c, p) * S.at(p, a);
    }
    const NCPoly zl = B.at(c, b) * inner;
    const NCPoly zr = -(NCPoly::scalar(LaurentPoly::neg_q_pow(e)) * acc);
    if (!nc_eq(zl, zr)) return Outcome::Fail;
  }

  // The cleared border identity itself is the diagonal row a.
  NCPoly tail;
  for (int u = 1; u <= m; ++u) {
    if (u == b) continue;
    tail = tail + B.at(a, u) * S.at(u, a);
  }
  const NCPoly rhs_laplace =
      NCPoly::gen(ctx, i, j) * inner + NCPoly::scalar(LaurentPoly::neg_q_pow(e)) * tail;
  if (!nc_eq(lhs, rhs_laplace)) return Outcome::Fail;

  if (j < Cj.front() || j > Cj.back()) {
    // Edge pivot column: replay the certificate-based clearing. The
    // inner antipode inverts the interior grid, and each border entry
    // below the pivot walks past the inner determinant by a discovered
    // pure q-power.
    DivMatrix<NCPoly> Bi(m - 1, m - 1);
    for (int u = 1; u <= m - 1; ++u)
      for (int v = 1; v <= m - 1; ++v)
        Bi.set(u, v, NCPoly::gen(ctx, Ri[static_cast<std::size_t>(u - 1)],
                                 Cj[static_cast<std::size_t>(v - 1)]));
    const DivMatrix<NCPoly> Si = antipode_on(ctx, Ri, Cj);
    const DivMatrix<NCPoly> SiBi = Si * Bi;
    const DivMatrix<NCPoly> BiSi = Bi * Si;
    for (int u = 1; u <= m - 1; ++u)
      for (int v = 1; v <= m - 1; ++v) {
        const NCPoly want = (u == v) ? inner : NCPoly();
        if (!nc_eq(SiBi.at(u, v), want) || !nc_eq(BiSi.at(u, v), want))
          return Outcome::Fail;
      }

    const long window = 2L * ctx.cols * ctx.rows;
    std::vector<long> cert(static_cast<std::size_t>(m - 1));
    for (int v = 1; v <= m - 1; ++v) {
      const NCPoly zeta = NCPoly::gen(ctx, Ri[static_cast<std::size_t>(v - 1)], j);
      const auto bv = q_power_between(zeta, inner, window);
      if (!bv)
        throw NoCommutationCertificate(
            "inner determinant past border entry in row " +
            std::to_string(Ri[static_cast<std::size_t>(v - 1)]));
      cert[static_cast<std::size_t>(v - 1)] = *bv;
    }

    NCPoly rhs = NCPoly::gen(ctx, i, j) * inner;
    for (int u = 1; u <= m - 1; ++u)
      for (int v = 1; v <= m - 1; ++v) {
        const NCPoly xi = NCPoly::gen(ctx, i, Cj[static_cast<std::size_t>(u - 1)]);
        const NCPoly zeta =
            NCPoly::gen(ctx, Ri[static_cast<std::size_t>(v - 1)], j);
        rhs = rhs - xi * Si.at(u, v) *
                        NCPoly::scalar(LaurentPoly::q(static_cast<int>(
                            cert[static_cast<std::size_t>(v - 1)]))) *
                        zeta;
      }
    if (!nc_eq(lhs, rhs)) return Outcome::Fail;
  }
  return Outcome::Pass;
}

/**
 * The ratio of two boxed quasideterminants sharing the tail M reduces to
 * the ratio of the corresponding bracket minors: the boxed factors are
 * expanded through box_ratio_check into minor ratios with a common inner
 * denominator, which cancels structurally, and the leftover scalar
 * matches the alternating conversion on both bracket symbols.
 */
inline Outcome box_two_ratio_check(const AlgebraContext& ctx, int i, int j,
                                   const IndexTuple& M) {
  if (i == j || contains(M, i) || contains(M, j))
    throw BadSize("boxed ratio rows must be distinct and outside M");
  const int d = static_cast<int>(M.size()) + 1;
  if (d > ctx.cols) throw BadSize("tail M too long for the grid");
  IndexTuple lead, tailcols;
  for (int c = 1; c <= d; ++c) lead.push_back(c);
  for (int c = 2; c <= d; ++c) tailcols.push_back(c);

  const IndexTuple iM = tuple_union({i}, M);
  const IndexTuple jM = tuple_union({j}, M);
  const IndexTuple Ms = sorted(M);
  if (box_ratio_check(ctx, iM, lead, i, 1) != Outcome::Pass) return Outcome::Fail;
  if (box_ratio_check(ctx, jM, lead, j, 1) != Outcome::Pass) return Outcome::Fail;

  // |box i M| |box j M|^-1
  //   = (-q)^(1-pos(i)) [iM-sorted] N^-1 * ( (-q)^(1-pos(j)) [jM-sorted] N^-1 )^-1
  //   = (-q)^(pos(j)-pos(i)) [iM-sorted] [jM-sorted]^-1, after N cancels.
  MinorRatioWord word(LaurentPoly::neg_q_pow((1 - pos_in(iM, i)) -
                                             (1 - pos_in(jM, j))),
                      {{MinorSymbol{iM}, 1},
                       {MinorSymbol{Ms}, -1},
                       {MinorSymbol{Ms}, 1},
                       {MinorSymbol{jM}, -1}});
  word.cancel_at(1);

  // Target: [i M] [j M]^-1 with order-significant tuples, whose sorted
  // form carries (-q)^(-inv(i|M)) + (+inv(j|M)).
  const auto [ci, si] = alternating_canonical(concat({i}, M));
  const auto [cj, sj] = alternating_canonical(concat({j}, M));
  MinorRatioWord target(ci * cj.invert(), {{MinorSymbol{si}, 1}, {MinorSymbol{sj}, -1}});

  const bool symbols_match = word.factors().size() == 2 &&
                             word.factors()[0].sym == target.factors()[0].sym &&
                             word.factors()[0].exp == 1 &&
                             word.factors()[1].sym == target.factors()[1].sym &&
                             word.factors()[1].exp == -1;
  return (symbols_match && word.prefactor() == target.prefactor()) ? Outcome::Pass
                                                                   : Outcome::Fail;
}

/**
 * Both bullet identities for boxed quasideterminants: the single boxed
 * minor against the canonical bracket (first row of I distinguished,
 * remaining rows ascending), and the two-ratio identity for i, j over M.
 */
inline Outcome verify_boxed_identities(const AlgebraContext& ctx, const IndexTuple& I,
                                       int i, int j, const IndexTuple& M) {
  if (I.empty()) throw BadSize("boxed identity needs a nonempty row tuple");
  for (std::size_t k = 1; k + 1 < I.size(); ++k)
    if (I[k] >= I[k + 1])
      throw BadSize("rows after the boxed one must be strictly increasing");
  const int d = static_cast<int>(I.size());
  if (d > ctx.cols) throw BadSize("row tuple too long for the grid");
  IndexTuple lead;
  for (int c = 1; c <= d; ++c) lead.push_back(c);

  const IndexTuple Is = sorted(I);
  if (box_ratio_check(ctx, Is, lead, I.front(), 1) != Outcome::Pass)
    return Outcome::Fail;

  // (-q)^(1 - pos(i1)) [sorted I] N^-1 * N  ==  [I as ordered tuple]
  MinorRatioWord word(LaurentPoly::neg_q_pow(1 - pos_in(Is, I.front())),
                      {{MinorSymbol{Is}, 1},
                       {MinorSymbol{tuple_diff(Is, {I.front()})}, -1}});
  word.right_mul(MinorSymbol{tuple_diff(Is, {I.front()})}, 1);
  word.cancel_at(1);
  const auto [conv, srt] = alternating_canonical(I);
  if (conv.is_zero()) return Outcome::Fail;
  const bool single = word.factors().size() == 1 &&
                      word.factors()[0].sym == MinorSymbol{srt} &&
                      word.factors()[0].exp == 1;
  if (!single || !(word.prefactor() == conv)) return Outcome::Fail;

  return box_two_ratio_check(ctx, i, j, M);
}

/**
 * Nested quasideterminant factorization of the quantum determinant: for
 * chosen row and column orders, each successive quasideterminant of the
 * shrinking grid is the certified ratio of two nested determinants, the
 * ratios telescope, the nested determinants commute pairwise, and the
 * accumulated (-q) exponents match the inversion counts of the two
 * orders. Everything is asserted; nothing is divided.
 */
inline Outcome verify_quant_via_quasi(const AlgebraContext& ctx,
                                      const IndexTuple& row_order,
                                      const IndexTuple& col_order) {
  if (ctx.rows != ctx.cols)
    throw ShapeMismatch("needs a square generator grid");
  const int n = ctx.rows;
  if (static_cast<int>(row_order.size()) != n ||
      static_cast<int>(col_order.size()) != n)
    throw BadSize("row and column orders must cover the grid");
  IndexTuple full;
  for (int k = 1; k <= n; ++k) full.push_back(k);
  if (sorted(row_order) != full || sorted(col_order) != full)
    throw BadSize("orders must each be a permutation of the grid indices");

  std::vector<NCPoly> nested;  // nested determinants D_1 ⊇ D_2 ⊇ ...
  long exponent_sum = 0;
  IndexTuple rows_left = full, cols_left = full;
  for (int k = 0; k < n; ++k) {
    const int r = row_order[static_cast<std::size_t>(k)];
    const int c = col_order[static_cast<std::size_t>(k)];
    if (box_ratio_check(ctx, rows_left, cols_left, r, c) != Outcome::Pass)
      return Outcome::Fail;
    nested.push_back(qdet(ctx, rows_left, cols_left));
    exponent_sum += pos_in(cols_left, c) - pos_in(rows_left, r);
    rows_left = tuple_diff(rows_left, {r});
    cols_left = tuple_diff(cols_left, {c});
  }

  // Telescoping (-q)^(e_k) D_k D_(k+1)^-1 leaves (-q)^(sum e_k) D_1, so the
  // claimed prefactor is right exactly when sum e_k = inv(cols) - inv(rows).
  if (exponent_sum != tuple_length(col_order) - tuple_length(row_order))
    return Outcome::Fail;

  for (std::size_t a = 0; a < nested.size(); ++a)
    for (std::size_t b = a + 1; b < nested.size(); ++b)
      if (!nc_eq(nested[a] * nested[b], nested[b] * nested[a]))
        return Outcome::Fail;
  return Outcome::Pass;
}

/**
 * Replay of the passage from the quasi-Pluecker coordinate relation to
 * the degree-one Young symmetry relation, for a chosen pivot row. Every
 * step of the derivation is performed on ratio words with certified
 * moves, the cleared line is asserted as a polynomial identity, the
 * per-term scalar bookkeeping is asserted, and the terminal sum is
 * checked to vanish. Terms whose pivot column sits inside J vanish (the
 * coordinate is pinned to zero, the bracket has a repeated row); the
 * replay asserts the vanishing and drops them. Inputs with I contained
 * in J short-circuit entirely: each terminal term dies by the
 * alternating law, the sum reads 0 = 0, and Degenerate is returned.
 */
inline Outcome verify_specialization(const AlgebraContext& ctx, int d, int n,
                                     const IndexTuple& I, const IndexTuple& J,
                                     int i_choice) {
  if (d != ctx.cols || n != ctx.rows)
    throw BadSize("d and n must match the context");
  for (std::size_t k = 0; k + 1 < I.size(); ++k)
    if (I[k] >= I[k + 1]) throw BadSize("I must be strictly increasing");
  for (std::size_t k = 0; k + 1 < J.size(); ++k)
    if (J[k] >= J[k + 1]) throw BadSize("J must be strictly increasing");

  if (tuple_diff(I, J).empty()) {
    for (const int iv : I)
      if (!alternating_canonical(concat({iv}, J)).first.is_zero())
        return Outcome::Fail;
    return Outcome::Degenerate;
  }

  if (static_cast<int>(I.size()) != d + 1 || static_cast<int>(J.size()) != d - 1)
    throw BadSize("need |I| = d+1 and |J| = d-1");
  if (!contains(I, i_choice) || contains(J, i_choice))
    throw BadSize("pivot must come from I minus J");

  const int i = i_choice;
  const IndexTuple L = tuple_diff(I, {i});
  const long window = 2L * ctx.cols * ctx.rows;
  const long ell_Li = tuple_length(concat(L, {i}));

  NCPoly rhs_cleared;
  for (const int j : L) {
    const IndexTuple Mp = tuple_diff(L, {j});

    // A pivot column landing inside J kills its own term twice over: the
    // coordinate is pinned to zero and the bracket has a repeated row.
    // Assert both vanishings and move on; nothing enters the cleared sum.
    if (contains(J, j)) {
      if (!alternating_canonical(concat({j}, J)).first.is_zero())
        return Outcome::Fail;
      if (!nc_eq(quantum_minor(ctx, concat({j}, J)), NCPoly()))
        return Outcome::Fail;
      continue;
    }

    // Both quasi-Pluecker factors of this term convert from boxed
    // quasideterminants to bracket ratios.
    if (box_two_ratio_check(ctx, i, j, Mp) != Outcome::Pass) return Outcome::Fail;
    if (box_two_ratio_check(ctx, j, i, J) != Outcome::Pass) return Outcome::Fail;

    MinorRatioWord term(LaurentPoly(1), {{MinorSymbol{concat({i}, Mp)}, 1},
                                         {MinorSymbol{concat({j}, Mp)}, -1},
                                         {MinorSymbol{concat({j}, J)}, 1},
                                         {MinorSymbol{concat({i}, J)}, -1}});

    // Clear the trailing inverse against the pivot bracket.
    term.right_mul(MinorSymbol{concat({i}, J)}, 1);
    term.cancel_at(3);

    // Swap the leading ratio with a discovered certificate; the weak
    // commutation law predicts its value, which is cross-checked.
    const NCPoly num = quantum_minor(ctx, concat({i}, Mp));
    const NCPoly den = quantum_minor(ctx, concat({j}, Mp));
    const auto s = q_power_between(num, den, window);
    if (!s)
      throw NoCommutationCertificate("bracket swap for rows " + std::to_string(i) +
                                     " and " + std::to_string(j));
    const long cert = -*s;
    if (cert != (i < j ? 1 : -1)) return Outcome::Fail;
    term.swap_at(0, cert);

    // Resort the inverted bracket; its rows are j then Mp ascending. The
    // symbol rewrite is grounded by the alternating law in the algebra.
    const auto [cj, lset] = alternating_canonical(concat({j}, Mp));
    if (lset != L) return Outcome::Fail;
    if (!nc_eq(quantum_minor(ctx, concat({j}, Mp)),
               NCPoly::scalar(cj) * quantum_minor(ctx, L)))
      return Outcome::Fail;
    term.rewrite_symbol(0, MinorSymbol{L}, cj.invert());

    // Clear the remaining inverse on the left.
    term.left_mul(MinorSymbol{L}, 1);
    term.cancel_at(0);

    // Per-term bookkeeping: this cleared term folds into the terminal
    // sum's lambda = j slot, a pure scalar identity.
    const auto [ci, iset] = alternating_canonical(concat({i}, Mp));
    const LaurentPoly folded = -LaurentPoly::neg_q_pow(-ell_Li) *
                               term.prefactor() * ci;
    const IndexTuple Ij = tuple_diff(I, {j});
    if (iset != Ij) return Outcome::Fail;
    if (!nc_eq(quantum_minor(ctx, concat({i}, Mp)),
               NCPoly::scalar(ci) * quantum_minor(ctx, Ij)))
      return Outcome::Fail;
    const long ell_j = tuple_length(concat(Ij, {j}));
    if (!(folded == LaurentPoly::neg_q_pow(-ell_j))) return Outcome::Fail;

    rhs_cleared = rhs_cleared + term.evaluate(ctx);
  }

  // The cleared line: [L][i J] equals the swapped-and-resorted sum.
  const NCPoly lhs_cleared =
      quantum_minor(ctx, L) * quantum_minor(ctx, concat({i}, J));
  if (!nc_eq(lhs_cleared, rhs_cleared)) return Outcome::Fail;

  // Terminal sum over every pivot slot, literal tuples throughout.
  NCPoly terminal;
  for (const int iv : I) {
    const IndexTuple Iv = tuple_diff(I, {iv});
    terminal = terminal +
               NCPoly::scalar(LaurentPoly::neg_q_pow(
                   -tuple_length(concat(Iv, {iv})))) *
                   quantum_minor(ctx, Iv) * quantum_minor(ctx, concat({iv}, J));
  }
  if (!terminal.is_zero()) return Outcome::Fail;
  return verify_young_symmetry(ctx, d, 1, I, J);
}

/**
 * Classical Laplace expansion in the commutative m x m shadow: the
 * determinant equals (-1)^inv(colperm) times the sum over increasing
 * p / (m-p) row splits of signed products of complementary minors, with
 * columns distributed according to the given column permutation.
 */
inline Outcome verify_classical_laplace(int m, const IndexTuple& colperm, int p) {
  if (m < 1 || m > 6) throw BadSize("grid size out of range");
  if (p < 1 || p > m) throw BadSize("split point out of range");
  IndexTuple full;
  for (int k = 1; k <= m; ++k) full.push_back(k);
  if (sorted(colperm) != full)
    throw BadSize("column order must be a permutation of the grid columns");

  DivMatrix<CommPoly> A(m, m);
  for (int r = 1; r <= m; ++r)
    for (int c = 1; c <= m; ++c) A.set(r, c, CommPoly::var(r, c));

  const IndexTuple cfront(colperm.begin(), colperm.begin() + p);
  const IndexTuple cback(colperm.begin() + p, colperm.end());

  CommPoly sum;
  for (const IndexTuple& rows : subsets(full, static_cast<std::size_t>(p))) {
    const IndexTuple rest = tuple_diff(full, rows);
    const long sign_len = tuple_length(concat(rows, rest));
    const CommPoly sgn((sign_len % 2 == 0) ? 1 : -1);
    const CommPoly front = det_cofactor(submatrix_keep(A, rows, cfront));
    const CommPoly back =
        rest.empty() ? CommPoly(1) : det_cofactor(submatrix_keep(A, rest, cback));
    sum = sum + sgn * front * back;
  }
  const CommPoly lead((tuple_length(colperm) % 2 == 0) ? 1 : -1);
  return (det_cofactor(A) == lead * sum) ? Outcome::Pass : Outcome::Fail;
}

}  // namespace ncgrass
