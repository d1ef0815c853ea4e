#include "isotypic/examples.hpp"

#include "doctest.h"

using namespace isotypic;
using Q = Rational;

namespace {

const std::vector<std::string> kGens{"a", "b"};
Word w(std::string_view t) { return RewriteSystem<Q>::parse_word(kGens, t); }

// Q[a]/(a^3) with the given basis words.
RewriteSystem<Q> truncated(std::vector<Word> basis, std::vector<std::string> labels) {
  return RewriteSystem<Q>({"a"}, {{Word(3, '\0'), {}}}, std::move(basis), std::move(labels));
}

}  // namespace

TEST_CASE("parsing and spelling words") {
  CHECK(w("a b a") == Word{0, 1, 0});
  CHECK(w("a*b") == Word{0, 1});
  CHECK(w("1").empty());
  CHECK(w("").empty());
  CHECK_THROWS_AS(w("c"), std::invalid_argument);
  const auto rs = truncated({Word{}, Word{0}, Word{0, 0}}, {"1", "a", "a^2"});
  CHECK(rs.spell(Word{0, 0}) == "a a");
  CHECK(rs.spell(Word{}) == "1");
  CHECK(rs.generator("a") == 0);
}

TEST_CASE("closing a truncated polynomial ring") {
  const auto pa = close_presentation(truncated({Word{}, Word{0}, Word{0, 0}}, {"1", "a", "a^2"}));
  CHECK(pa.closure_certificate);
  CHECK(pa.result.dim() == 3);
  CHECK(equal<Q>(multiply(pa.result, pa.result.basis(1), pa.result.basis(1)), pa.result.basis(2)));
  CHECK(all_zero(multiply(pa.result, pa.result.basis(1), pa.result.basis(2))));
  CHECK(pa.rewrite.is_irreducible(Word{0, 0}));
  CHECK_FALSE(pa.rewrite.is_irreducible(Word{0, 0, 0}));
}

TEST_CASE("rules with several terms on the right") {
  // a^2 = a + 1, so a^3 = 2a + 1.
  RewriteSystem<Q> rs({"a"}, {{Word{0, 0}, {{Word{0}, Q(1)}, {Word{}, Q(1)}}}}, {Word{}, Word{0}}, {"1", "a"});
  const Vec<Q> c = rs.normal_form({{Word{0, 0, 0}, Q(1)}});
  CHECK(c(0) == Q(1));
  CHECK(c(1) == Q(2));
  CHECK(close_presentation(rs).closure_certificate);
}

TEST_CASE("failure modes") {
  SUBCASE("divergence") {
    const RewriteRule<Q> grow{Word{0}, {{Word{0, 0}, Q(1)}}};
    CHECK_THROWS_AS(RewriteSystem<Q>({"a"}, {grow}, {Word{0}}, {"a"}), DivergenceError);
  }
  SUBCASE("closure") {
    const auto rs = truncated({Word{}, Word{0}}, {"1", "a"});
    CHECK_THROWS_AS(close_presentation(rs), ClosureError);
  }
  SUBCASE("dependent basis") {
    CHECK_THROWS_AS(truncated({Word{}, Word{0}, Word{0, 0, 0}}, {"1", "a", "0"}), ClosureError);
  }
  SUBCASE("non-associative rules") {
    const std::vector<RewriteRule<Q>> rules{{w("a a"), {}}, {w("b b"), {}}, {w("a b"), {}}, {w("b a"), {{w("a"), Q(1)}}}};
    RewriteSystem<Q> rs(kGens, rules, {w("1"), w("a"), w("b")}, {"1", "a", "b"});
    CHECK_THROWS_AS(close_presentation(rs), ConfluenceError);
  }
  SUBCASE("bad unit") {
    CHECK_THROWS_AS(close_presentation(truncated({Word{}, Word{0}, Word{0, 0}}, {"1", "a", "a^2"}), {{Word{0}, Q(1)}}),
                    ConfluenceError);
  }
  SUBCASE("invalid rules") {
    CHECK_THROWS_AS(RewriteSystem<Q>({"a"}, {{Word{}, {}}}, {Word{}}, {"1"}), std::invalid_argument);
    CHECK_THROWS_AS(RewriteSystem<Q>({"a"}, {{Word{1}, {}}}, {Word{}}, {"1"}), std::invalid_argument);
    CHECK_THROWS_AS(RewriteSystem<Q>({"a"}, {}, {Word{}}, {"1", "2"}), std::invalid_argument);
  }
}

TEST_CASE("Sweedler presentation") {
  const auto pa = sweedler4_presentation();
  const auto& a = pa.result;
  const Vec<Q> g = a.basis(1), x = a.basis(2), gx = a.basis(3);
  CHECK(equal<Q>(multiply(a, g, g), a.unit()));
  CHECK(all_zero(multiply(a, x, x)));
  CHECK(equal<Q>(multiply(a, x, g), Vec<Q>(-gx)));
  CHECK(equal<Q>(multiply(a, g, x), gx));

  // The multiplicative extension of a character agrees with evaluating on products.
  const Vec<Q> chi = extend_multiplicative_functional(pa, {Q(-1), Q(0)});
  CHECK(chi(0) == Q(1));
  CHECK(chi(1) == Q(-1));
  CHECK(chi(3) == Q(0));
}

TEST_CASE("the sign-flipped sweedler rules still close but break the coproduct") {
  const auto pa = sweedler4_presentation(true);
  CHECK(pa.closure_certificate);
  const int n = 4;
  const Vec<Q> one = basis_vec<Q>(n, 0), g = basis_vec<Q>(n, 1), x = basis_vec<Q>(n, 2);
  const auto images = extend_to_tensor_square(pa, {outer(g, g), add_sparse(outer(x, one), outer(g, x))});
  // Delta(x)^2 = 2 gx (x) x, yet x^2 = 0.
  TensorSquareMultiplier<Q> mul(pa.result);
  CHECK_FALSE(mul(images[2], images[2]).empty());
}

TEST_CASE("FK3 closes and its sign-flipped variant is rejected") {
  const auto f = build_fk3<Q>(Q(0), Q(23), Q(11));
  CHECK(f.presented.closure_certificate);
  CHECK(f.presented.result.dim() == 72);
  CHECK_THROWS_AS(build_fk3<Q>(Q(0), Q(23), Q(11), true), ConfluenceError);
}
