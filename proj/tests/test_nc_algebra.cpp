#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "ncgrass/nc_algebra.hpp"
#include "ncgrass/rng.hpp"

using namespace ncgrass;

// Frozen normal forms below were derived by hand, applying the
// straightening rules step by step before this engine existed.

namespace {

NCWord w(std::initializer_list<std::pair<int, int>> gens) {
  NCWord out;
  for (auto [r, c] : gens) out.push_back(Generator{1, r, c});
  return out;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

}  // namespace

TEST_CASE("generator order is block, then row, then column") {
  CHECK(Generator{1, 1, 2} < Generator{1, 2, 1});
  CHECK(Generator{1, 1, 1} < Generator{1, 1, 2});
  CHECK(Generator{1, 2, 2} < Generator{2, 1, 1});
  CHECK(Generator{1, 3, 3} == Generator{1, 3, 3});
}

TEST_CASE("same-row and same-column descents pick up one q") {
  AlgebraContext ctx(2, 2);
  const NCPoly x11 = NCPoly::gen(ctx, 1, 1);
  const NCPoly x12 = NCPoly::gen(ctx, 1, 2);
  const NCPoly x21 = NCPoly::gen(ctx, 2, 1);

  CHECK(x12 * x11 == NCPoly::scalar(LaurentPoly::q()) * (x11 * x12));
  CHECK(x21 * x11 == NCPoly::scalar(LaurentPoly::q()) * (x11 * x21));
  CHECK(x12 * x11 == NCPoly::from_word(ctx, w({{1, 1}, {1, 2}}), LaurentPoly::q()));
}

TEST_CASE("antidiagonal pair commutes, diagonal pair picks up the bracket") {
  AlgebraContext ctx(2, 2);
  const NCPoly x11 = NCPoly::gen(ctx, 1, 1);
  const NCPoly x12 = NCPoly::gen(ctx, 1, 2);
  const NCPoly x21 = NCPoly::gen(ctx, 2, 1);
  const NCPoly x22 = NCPoly::gen(ctx, 2, 2);

  CHECK(x21 * x12 == x12 * x21);

  const LaurentPoly bracket = LaurentPoly::q() - LaurentPoly::q(-1);
  const NCPoly expected = x11 * x22 + NCPoly::scalar(bracket) * x12 * x21;
  CHECK(x22 * x11 == expected);
  CHECK(x22 * x11 - NCPoly::scalar(bracket) * x12 * x21 == x11 * x22);
}

TEST_CASE("four-letter word straightens to the frozen two-term form") {
  AlgebraContext ctx(2, 2);
  const NCWord word = w({{2, 2}, {2, 1}, {1, 2}, {1, 1}});

  const NCPoly got = NCPoly::from_word(ctx, word);
  NCPoly expected =
      NCPoly::from_word(ctx, w({{1, 1}, {1, 2}, {2, 1}, {2, 2}}), LaurentPoly::q(4));
  expected = expected + NCPoly::from_word(ctx, w({{1, 2}, {1, 2}, {2, 1}, {2, 1}}),
                                          LaurentPoly::q(3) - LaurentPoly::q(1));
  CHECK(got == expected);
  CHECK(got.terms().size() == 2);

  const NCPoly rightmost =
      NCPoly::from_word(ctx, word, LaurentPoly(1), RewriteStrategy::rightmost);
  CHECK(got == rightmost);
}

TEST_CASE("normal form is idempotent") {
  AlgebraContext ctx(3, 3);
  Rng rng(411);
  for (int t = 0; t < 60; ++t) {
    NCWord word;
    const long len = rng.int_in(1, 5);
    for (long k = 0; k < len; ++k)
      word.push_back(Generator{1, static_cast<int>(rng.int_in(1, 3)),
                               static_cast<int>(rng.int_in(1, 3))});
    const NCPoly p = NCPoly::from_word(ctx, word);
    for (const auto& [nw, coeff] : p.terms()) {
      CHECK(std::is_sorted(nw.begin(), nw.end()));
      const NCPoly again = NCPoly::from_word(ctx, nw, coeff);
      REQUIRE(again.terms().size() == 1);
      CHECK(again.terms().begin()->first == nw);
      CHECK(again.terms().begin()->second == coeff);
    }
  }
}

TEST_CASE("degree-k normal words biject with commutative monomials") {
  AlgebraContext ctx(2, 2);
  const std::vector<Generator> alphabet = {Generator{1, 1, 1}, Generator{1, 1, 2},
                                           Generator{1, 2, 1}, Generator{1, 2, 2}};
  for (int k = 0; k <= 5; ++k) {
    std::set<NCWord> seen;
    std::vector<int> digits(static_cast<std::size_t>(k), 0);
    while (true) {
      NCWord word;
      for (int d : digits) word.push_back(alphabet[static_cast<std::size_t>(d)]);
      const NCPoly p = NCPoly::from_word(ctx, word);
      REQUIRE(!p.is_zero());
      for (const auto& [nw, coeff] : p.terms()) {
        REQUIRE(nw.size() == static_cast<std::size_t>(k));
        REQUIRE(std::is_sorted(nw.begin(), nw.end()));
        CHECK(!coeff.is_zero());
        seen.insert(nw);
      }
      int pos = k - 1;
      while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == 3) {
        digits[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++digits[static_cast<std::size_t>(pos)];
    }
    CHECK(static_cast<long>(seen.size()) == binomial(k + 3, 3));
  }
}

TEST_CASE("strategies agree on seeded random words in a 3x3 context") {
  AlgebraContext ctx(3, 3);
  const ConfluenceResult res = confluence_smoke(ctx, 90210, 100);
  INFO(res.detail);
  CHECK(res.ok);
}

TEST_CASE("multiplication is associative and distributes") {
  AlgebraContext ctx(3, 3);
  Rng rng(1702);
  for (int t = 0; t < 25; ++t) {
    auto rand_poly = [&] {
      NCPoly p;
      const long nterms = rng.int_in(1, 2);
      for (long u = 0; u < nterms; ++u) {
        NCWord word;
        const long len = rng.int_in(1, 3);
        for (long k = 0; k < len; ++k)
          word.push_back(Generator{1, static_cast<int>(rng.int_in(1, 3)),
                                   static_cast<int>(rng.int_in(1, 3))});
        p = p + NCPoly::from_word(ctx, word, random_laurent(rng));
      }
      return p;
    };
    const NCPoly a = rand_poly(), b = rand_poly(), c = rand_poly();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
  }
}

TEST_CASE("sub-grid of a context keeps the induced relations") {
  AlgebraContext parent(3, 3);
  AlgebraContext sub(2, 2);
  const std::vector<int> rows = {1, 3}, cols = {2, 3};
  auto lift = [&](const NCWord& word) {
    NCWord out;
    for (const Generator& g : word)
      out.push_back(Generator{1, rows[static_cast<std::size_t>(g.row - 1)],
                              cols[static_cast<std::size_t>(g.col - 1)]});
    return out;
  };

  Rng rng(5909);
  for (int t = 0; t < 50; ++t) {
    NCWord word;
    const long len = rng.int_in(1, 5);
    for (long k = 0; k < len; ++k)
      word.push_back(Generator{1, static_cast<int>(rng.int_in(1, 2)),
                               static_cast<int>(rng.int_in(1, 2))});
    const NCPoly in_sub = NCPoly::from_word(sub, word);
    NCPoly lifted;
    for (const auto& [nw, coeff] : in_sub.terms())
      lifted = lifted + NCPoly::from_word(parent, lift(nw), coeff);
    CHECK(lifted == NCPoly::from_word(parent, lift(word)));
  }
}

TEST_CASE("q = 1 image kills the bracket and matches raw words") {
  AlgebraContext ctx(2, 2);
  const NCPoly x12 = NCPoly::gen(ctx, 1, 2);
  const NCPoly x21 = NCPoly::gen(ctx, 2, 1);
  const LaurentPoly bracket = LaurentPoly::q() - LaurentPoly::q(-1);

  CHECK(specialize_q1(NCPoly::scalar(bracket) * x12 * x21).is_zero());

  const NCPoly x22 = NCPoly::gen(ctx, 2, 2);
  const NCPoly x11 = NCPoly::gen(ctx, 1, 1);
  CHECK(specialize_q1(x22 * x11) ==
        CommPoly::var(1, 1) * CommPoly::var(2, 2) +
            CommPoly::var(1, 2) * CommPoly::var(2, 1) -
            CommPoly::var(1, 2) * CommPoly::var(2, 1));
  CHECK(specialize_q1(x22 * x11) == CommPoly::var(2, 2) * CommPoly::var(1, 1));

  Rng rng(8114);
  AlgebraContext big(3, 3);
  for (int t = 0; t < 40; ++t) {
    NCWord word;
    const long len = rng.int_in(1, 5);
    for (long k = 0; k < len; ++k)
      word.push_back(Generator{1, static_cast<int>(rng.int_in(1, 3)),
                               static_cast<int>(rng.int_in(1, 3))});
    // The commutative image of a word must not care about rewriting.
    CHECK(specialize_q1(NCPoly::from_word(big, word)) ==
          CommPoly::monomial(Rational(1), word));
  }
}

TEST_CASE("commutative polynomial arithmetic") {
  const CommPoly a = CommPoly::var(1, 1) + CommPoly(2);
  const CommPoly b = CommPoly::var(2, 2) - CommPoly(1);
  CHECK(a * b == b * a);
  CHECK((a - a).is_zero());
  CHECK(CommPoly::monomial(Rational(3), w({{2, 1}, {1, 2}})) ==
        CommPoly(3) * CommPoly::var(1, 2) * CommPoly::var(2, 1));
  CHECK(CommPoly(0).is_zero());
}

TEST_CASE("two-block contexts commute across blocks") {
  AlgebraContext ctx(2, 2, 2, true);
  const NCPoly x22 = NCPoly::gen(ctx, 2, 2, 1);
  const NCPoly y11 = NCPoly::gen(ctx, 1, 1, 2);
  CHECK(y11 * x22 == x22 * y11);
  const NCPoly p = y11 * x22;
  REQUIRE(p.terms().size() == 1);
  CHECK(p.terms().begin()->first ==
        NCWord{Generator{1, 2, 2}, Generator{2, 1, 1}});

  // Within each block the usual relations still apply.
  const NCPoly y12 = NCPoly::gen(ctx, 1, 2, 2);
  CHECK(y12 * y11 == NCPoly::scalar(LaurentPoly::q()) * y11 * y12);

  CHECK_THROWS_AS(AlgebraContext(2, 2, 2, false), ConfigError);
  CHECK_THROWS_AS(AlgebraContext(2, 2, 3, true), ConfigError);
  CHECK_THROWS_AS(AlgebraContext(0, 2), ConfigError);
}

TEST_CASE("context checks reject foreign generators and mixed arithmetic") {
  AlgebraContext small(2, 2), big(3, 3);
  CHECK_THROWS_AS(NCPoly::gen(small, 3, 1), ContextMismatch);
  CHECK_THROWS_AS(NCPoly::gen(small, 1, 0), ContextMismatch);
  CHECK_THROWS_AS(NCPoly::from_word(small, w({{1, 1}, {2, 3}})), ContextMismatch);

  const NCPoly a = NCPoly::gen(small, 1, 1);
  const NCPoly b = NCPoly::gen(big, 1, 1);
  CHECK_THROWS_AS(a + b, ContextMismatch);
  CHECK_THROWS_AS(a * b, ContextMismatch);
  CHECK_THROWS_AS(nc_eq(a, b), ContextMismatch);

  // Scalars carry no context and mix with anything.
  CHECK(nc_eq(NCPoly(1) * a, a));
  CHECK(nc_eq(a - a, NCPoly(0)));
  CHECK(nc_add(a, NCPoly(0)) == a);
  CHECK(nc_mul(NCPoly(2), NCPoly(3)) == NCPoly(6));
  CHECK(nc_sub(NCPoly(2), NCPoly(2)).is_zero());
}

TEST_CASE("scalar units invert, everything else refuses") {
  AlgebraContext ctx(2, 2);
  CHECK(NCPoly::scalar(LaurentPoly::q()).invert() ==
        NCPoly::scalar(LaurentPoly::q(-1)));
  CHECK(NCPoly(1).invert() == NCPoly(1));
  CHECK_THROWS_AS(NCPoly::gen(ctx, 1, 1).invert(), NonUnit);
  CHECK_THROWS_AS(NCPoly(0).invert(), ZeroInverse);
  CHECK_THROWS_AS((NCPoly(1) + NCPoly::gen(ctx, 1, 1)).invert(), NonUnit);
}

TEST_CASE("deterministic ascii dump") {
  AlgebraContext ctx(2, 2);
  const NCPoly x11 = NCPoly::gen(ctx, 1, 1);
  const NCPoly x22 = NCPoly::gen(ctx, 2, 2);
  CHECK((x22 * x11).str() ==
        "(1)*x[1,1]*x[2,2] + (-q^-1+q)*x[1,2]*x[2,1]");
  CHECK(NCPoly(0).str() == "0");
  CHECK(NCPoly(5).str() == "(5)");
  CHECK(NCPoly::gen(AlgebraContext(2, 2, 2, true), 1, 2, 2).str() == "(1)*y[1,2]");
  CHECK((CommPoly::var(1, 1) - CommPoly(2)).str() == "(-2) + (1)*x[1,1]");
}
