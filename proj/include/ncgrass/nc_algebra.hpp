#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncgrass/errors.hpp"
#include "ncgrass/laurent.hpp"
#include "ncgrass/rng.hpp"

namespace ncgrass {

/**
 * One generator x_ij of the quantized coordinate ring, tagged with a
 * block id so that two independent copies of the algebra can coexist
 * (the block-commuting setting used for multiplicativity). The total
 * order block, then row, then column is the normal-form order.
 */
struct Generator {
  int block = 1;
  int row = 1;
  int col = 1;
  auto operator<=>(const Generator&) const = default;
};

using NCWord = std::vector<Generator>;

/**
 * Shape of the generator alphabet: a rows x cols grid per block. Two
 * blocks always commute with each other; that is the only supported
 * cross-block relation, so constructing a two-block context without the
 * commutation flag is rejected.
 */
struct AlgebraContext {
  int rows = 1;
  int cols = 1;
  int blocks = 1;
  bool cross_commute = false;

  AlgebraContext(int r, int c, int b = 1, bool cross = false)
      : rows(r), cols(c), blocks(b), cross_commute(cross) {
    if (r < 1 || c < 1) throw ConfigError("context needs positive dimensions");
    if (b != 1 && b != 2) throw ConfigError("context supports 1 or 2 blocks");
    if (b == 2 && !cross)
      throw ConfigError("two-block contexts require cross-block commutation");
  }

  bool operator==(const AlgebraContext&) const = default;

  void validate(const Generator& g) const {
    if (g.block < 1 || g.block > blocks || g.row < 1 || g.row > rows ||
        g.col < 1 || g.col > cols)
      throw ContextMismatch("generator (block " + std::to_string(g.block) +
                            ", row " + std::to_string(g.row) + ", col " +
                            std::to_string(g.col) + ") outside " +
                            std::to_string(rows) + "x" + std::to_string(cols) +
                            " context");
  }
};

/** Which adjacent descent to rewrite first. Both must agree; see confluence_smoke. */
enum class RewriteStrategy { leftmost, rightmost };

namespace detail {

inline int find_descent(const NCWord& w, RewriteStrategy strat) {
  if (strat == RewriteStrategy::leftmost) {
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
      if (w[k + 1] < w[k]) return static_cast<int>(k);
  } else {
    for (std::size_t k = w.size(); k >= 2; --k)
      if (w[k - 1] < w[k - 2]) return static_cast<int>(k) - 2;
  }
  return -1;
}

/**
 * Directed rewriting toward the sorted normal form. For an adjacent
 * out-of-order pair a b (meaning b < a in generator order, same block):
 *
 *   same row or same column        ->  q * (b a)
 *   a strictly south-west of b     ->  b a                 (plain commute)
 *   a strictly south-east of b     ->  b a + (q - q^-1) * (northeast southwest)
 *
 * Different blocks simply commute. Each step either shrinks the inversion
 * count or replaces a word by strictly smaller ones, so this terminates.
 */
inline void reduce_into(NCWord word, LaurentPoly coeff,
                        std::map<NCWord, LaurentPoly>& out,
                        RewriteStrategy strat) {
  std::vector<std::pair<NCWord, LaurentPoly>> stack;
  stack.emplace_back(std::move(word), std::move(coeff));
  while (!stack.empty()) {
    auto [w, c] = std::move(stack.back());
    stack.pop_back();
    const int pos = find_descent(w, strat);
    if (pos < 0) {
      auto it = out.find(w);
      if (it == out.end()) {
        out.emplace(std::move(w), std::move(c));
      } else {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
      }
      continue;
    }
    const auto k = static_cast<std::size_t>(pos);
    const Generator a = w[k], b = w[k + 1];  // b < a
    if (a.block != b.block) {
      std::swap(w[k], w[k + 1]);
      stack.emplace_back(std::move(w), std::move(c));
    } else if (a.row == b.row || a.col == b.col) {
      std::swap(w[k], w[k + 1]);
      stack.emplace_back(std::move(w), c * LaurentPoly::q());
    } else if (a.col < b.col) {
      std::swap(w[k], w[k + 1]);
      stack.emplace_back(std::move(w), std::move(c));
    } else {
      NCWord other = w;
      other[k] = Generator{a.block, b.row, a.col};
      other[k + 1] = Generator{a.block, a.row, b.col};
      stack.emplace_back(std::move(other),
                         c * (LaurentPoly::q() - LaurentPoly::q(-1)));
      std::swap(w[k], w[k + 1]);
      stack.emplace_back(std::move(w), std::move(c));
    }
  }
}

}  // namespace detail

/**
 * Element of the q-generic algebra, kept permanently in normal form:
 * every stored word is sorted in generator order and no coefficient is
 * zero. Scalars (polynomials in q alone) carry no context and combine
 * freely with anything; any element that mentions a generator knows its
 * context, and mixing contexts raises ContextMismatch.
 */
class NCPoly {
 public:
  NCPoly() = default;
  NCPoly(long k) {  // NOLINT: implicit scalar embedding
    if (k != 0) t_[NCWord{}] = LaurentPoly(k);
  }

  static NCPoly scalar(LaurentPoly c) {
    NCPoly p;
    if (!c.is_zero()) p.t_[NCWord{}] = std::move(c);
    return p;
  }

  static NCPoly gen(const AlgebraContext& ctx, int row, int col, int block = 1) {
    Generator g{block, row, col};
    ctx.validate(g);
    NCPoly p;
    p.ctx_ = ctx;
    p.t_[NCWord{g}] = LaurentPoly(1);
    return p;
  }

  /** Normal form of coeff * (the given word), rewriting with the chosen strategy. */
  static NCPoly from_word(const AlgebraContext& ctx, const NCWord& w,
                          LaurentPoly coeff = LaurentPoly(1),
                          RewriteStrategy strat = RewriteStrategy::leftmost) {
    for (const Generator& g : w) ctx.validate(g);
    NCPoly p;
    p.ctx_ = ctx;
    if (!coeff.is_zero()) detail::reduce_into(w, std::move(coeff), p.t_, strat);
    return p;
  }

  const std::optional<AlgebraContext>& context() const { return ctx_; }
  const std::map<NCWord, LaurentPoly>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_one() const {
    return t_.size() == 1 && t_.begin()->first.empty() && t_.begin()->second.is_one();
  }

  NCPoly operator-() const {
    NCPoly r = *this;
    for (auto& [w, c] : r.t_) c = -c;
    return r;
  }

  NCPoly operator+(const NCPoly& o) const {
    NCPoly r = *this;
    r.ctx_ = merged_context(o);
    for (const auto& [w, c] : o.t_) {
      auto it = r.t_.find(w);
      if (it == r.t_.end()) {
        r.t_[w] = c;
      } else {
        it->second += c;
        if (it->second.is_zero()) r.t_.erase(it);
      }
    }
    return r;
  }

  NCPoly operator-(const NCPoly& o) const { return *this + (-o); }

  NCPoly operator*(const NCPoly& o) const {
    NCPoly r;
    r.ctx_ = merged_context(o);
    for (const auto& [w1, c1] : t_)
      for (const auto& [w2, c2] : o.t_) {
        NCWord w = w1;
        w.insert(w.end(), w2.begin(), w2.end());
        detail::reduce_into(std::move(w), c1 * c2, r.t_,
                            RewriteStrategy::leftmost);
      }
    return r;
  }

  /** Structural equality of normal forms (contexts are not compared). */
  bool operator==(const NCPoly& o) const { return t_ == o.t_; }
  bool operator!=(const NCPoly& o) const { return t_ != o.t_; }

  /** Units here are scalar monomials in q only; anything else is NonUnit. */
  NCPoly invert() const {
    if (t_.empty()) throw ZeroInverse();
    if (t_.size() != 1 || !t_.begin()->first.empty()) throw NonUnit(str());
    return scalar(t_.begin()->second.invert());
  }

  /**
   * Deterministic dump: terms ascending in word order, each as
   * "(coefficient)*x[i,j]..." with y[,] for the second block; "0" when zero.
   */
  std::string str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : t_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")";
      for (const Generator& g : w) {
        s += (g.block == 1 ? "*x[" : "*y[") + std::to_string(g.row) + "," +
             std::to_string(g.col) + "]";
      }
    }
    return s;
  }

 private:
  std::optional<AlgebraContext> merged_context(const NCPoly& o) const {
    if (ctx_ && o.ctx_) {
      if (!(*ctx_ == *o.ctx_))
        throw ContextMismatch("cannot combine elements of different contexts");
      return ctx_;
    }
    return ctx_ ? ctx_ : o.ctx_;
  }

  std::optional<AlgebraContext> ctx_;
  std::map<NCWord, LaurentPoly> t_;
};

inline NCPoly nc_add(const NCPoly& a, const NCPoly& b) { return a + b; }
inline NCPoly nc_sub(const NCPoly& a, const NCPoly& b) { return a - b; }
inline NCPoly nc_mul(const NCPoly& a, const NCPoly& b) { return a * b; }
inline bool nc_eq(const NCPoly& a, const NCPoly& b) {
  if (a.context() && b.context() && !(*a.context() == *b.context()))
    throw ContextMismatch("cannot compare elements of different contexts");
  return a == b;
}

/**
 * Commutative polynomial with rational coefficients in the same indexed
 * variables, used as the q = 1 shadow of the algebra. Words are stored
 * sorted; arithmetic is plain polynomial arithmetic.
 */
class CommPoly {
 public:
  CommPoly() = default;
  CommPoly(long k) {  // NOLINT: implicit scalar embedding
    if (k != 0) t_[NCWord{}] = Rational(k);
  }

  static CommPoly var(int row, int col, int block = 1) {
    CommPoly p;
    p.t_[NCWord{Generator{block, row, col}}] = Rational(1);
    return p;
  }

  static CommPoly monomial(Rational coeff, NCWord w) {
    std::sort(w.begin(), w.end());
    CommPoly p;
    if (!coeff.is_zero()) p.t_[std::move(w)] = std::move(coeff);
    return p;
  }

  const std::map<NCWord, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  CommPoly operator-() const {
    CommPoly r = *this;
    for (auto& [w, c] : r.t_) c = -c;
    return r;
  }

  CommPoly operator+(const CommPoly& o) const {
    CommPoly r = *this;
    for (const auto& [w, c] : o.t_) {
      auto it = r.t_.find(w);
      if (it == r.t_.end()) {
        r.t_[w] = c;
      } else {
        it->second += c;
        if (it->second.is_zero()) r.t_.erase(it);
      }
    }
    return r;
  }

  CommPoly operator-(const CommPoly& o) const { return *this + (-o); }

  CommPoly operator*(const CommPoly& o) const {
    CommPoly r;
    for (const auto& [w1, c1] : t_)
      for (const auto& [w2, c2] : o.t_) {
        NCWord w = w1;
        w.insert(w.end(), w2.begin(), w2.end());
        std::sort(w.begin(), w.end());
        auto it = r.t_.find(w);
        if (it == r.t_.end()) {
          r.t_[std::move(w)] = c1 * c2;
        } else {
          it->second += c1 * c2;
          if (it->second.is_zero()) r.t_.erase(it);
        }
      }
    return r;
  }

  bool operator==(const CommPoly& o) const { return t_ == o.t_; }
  bool operator!=(const CommPoly& o) const { return t_ != o.t_; }

  std::string str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : t_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")";
      for (const Generator& g : w)
        s += (g.block == 1 ? "*x[" : "*y[") + std::to_string(g.row) + "," +
             std::to_string(g.col) + "]";
    }
    return s;
  }

 private:
  std::map<NCWord, Rational> t_;
};

/**
 * q = 1 image: every coefficient evaluated at 1, every word read as a
 * commutative monomial. Rewriting commutes with this map, which is what
 * lets classical identities anchor the quantum ones.
 */
inline CommPoly specialize_q1(const NCPoly& p) {
  CommPoly out;
  for (const auto& [w, c] : p.terms())
    out = out + CommPoly::monomial(c.eval_q(Rational(1)), w);
  return out;
}

struct ConfluenceResult {
  bool ok = true;
  std::string detail;  // dump of the first disagreeing input, empty when ok
};

/**
 * Confluence spot check: random words reduced leftmost-first and
 * rightmost-first must land on the same normal form, and multiplication
 * must associate. This guards the fixed rule set against editing
 * mistakes; it is a smoke test, not a proof.
 */
inline ConfluenceResult confluence_smoke(const AlgebraContext& ctx,
                                         std::uint64_t seed, int trials) {
  Rng rng(seed);
  auto random_word = [&](int len) {
    NCWord w;
    for (int t = 0; t < len; ++t)
      w.push_back(Generator{
          ctx.blocks == 1 ? 1 : static_cast<int>(rng.int_in(1, ctx.blocks)),
          static_cast<int>(rng.int_in(1, ctx.rows)),
          static_cast<int>(rng.int_in(1, ctx.cols))});
    return w;
  };

  for (int t = 0; t < trials; ++t) {
    const NCWord w = random_word(static_cast<int>(rng.int_in(1, 6)));
    const NCPoly left =
        NCPoly::from_word(ctx, w, LaurentPoly(1), RewriteStrategy::leftmost);
    const NCPoly right =
        NCPoly::from_word(ctx, w, LaurentPoly(1), RewriteStrategy::rightmost);
    if (!(left == right)) {
      std::string dump;
      for (const Generator& g : w)
        dump += "x[" + std::to_string(g.row) + "," + std::to_string(g.col) + "]";
      return {false, "strategies disagree on " + dump};
    }
  }

  for (int t = 0; t < trials / 4 + 1; ++t) {
    const NCPoly a = NCPoly::from_word(ctx, random_word(2));
    const NCPoly b = NCPoly::from_word(ctx, random_word(2));
    const NCPoly c = NCPoly::from_word(ctx, random_word(2));
    if (!((a * b) * c == a * (b * c)))
      return {false, "associativity failure on trial " + std::to_string(t)};
  }
  return {};
}

}  // namespace ncgrass
