#include "isotypic/scalar.hpp"

#include "doctest.h"

#include <numeric>
#include <random>

using namespace isotypic;

namespace {

// Independent oracle: fractions over long long, reduced by std::gcd.
struct Frac {
  long long n, d;
  Frac(long long a, long long b = 1) : n(a), d(b) { norm(); }
  void norm() {
    if (d < 0) n = -n, d = -d;
    const long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) n /= g, d /= g;
  }
  Frac operator+(Frac o) const { return {n * o.d + o.n * d, d * o.d}; }
  Frac operator*(Frac o) const { return {n * o.n, d * o.d}; }
  Rational as_rational() const { return Rational(static_cast<long>(n), static_cast<long>(d)); }
};

// Oracle for Q(i): pairs (re, im).
struct Gauss {
  Frac re, im;
  Gauss operator*(const Gauss& o) const { return {re * o.re + Frac(-1) * im * o.im, re * o.im + im * o.re}; }
};

ExtModulusPtr qi() { return std::make_shared<const ExtModulus>(UPoly{Rational(1), Rational(0), Rational(1)}, "i"); }

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("+2/3") == Rational(2, 3));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("2/-3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(inverse(Rational(0)), DivisionByZero);
}

TEST_CASE("rational arithmetic agrees with a machine-integer oracle") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 30);
  for (int trial = 0; trial < 500; ++trial) {
    const Frac a(num(rng), den(rng)), b(num(rng), den(rng));
    const Rational ra = a.as_rational(), rb = b.as_rational();
    CHECK(ra + rb == (a + b).as_rational());
    CHECK(ra * rb == (a * b).as_rational());
    CHECK(ra - rb + rb == ra);
    if (!rb.is_zero()) CHECK(ra / rb * rb == ra);
  }
}

TEST_CASE("Q(i) multiplication agrees with complex-rational oracle") {
  const auto m = qi();
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (int trial = 0; trial < 300; ++trial) {
    const Gauss a{Frac(num(rng), den(rng)), Frac(num(rng), den(rng))};
    const Gauss b{Frac(num(rng), den(rng)), Frac(num(rng), den(rng))};
    const ExtElement ea(m, {a.re.as_rational(), a.im.as_rational()});
    const ExtElement eb(m, {b.re.as_rational(), b.im.as_rational()});
    const Gauss c = a * b;
    CHECK(ea * eb == ExtElement(m, {c.re.as_rational(), c.im.as_rational()}));
    if (!ea.is_zero()) CHECK(ea * inverse(ea) == ExtElement(1));
  }
}

TEST_CASE("extension elements") {
  const auto m = qi();
  const ExtElement i = ExtElement::generator(m);
  CHECK(i * i == ExtElement(-1));
  CHECK(inverse(ExtElement(1) + i) == ExtElement(m, {Rational(1, 2), Rational(-1, 2)}));
  CHECK((ExtElement(1) + i).str() == "1 + i");
  CHECK((-i).str() == "-i");
  CHECK(ExtElement(Rational(1, 2)) - ExtElement(m, {Rational(1, 2)}) == ExtElement(0));
  CHECK_FALSE(i.is_rational());
  CHECK((i * i).is_rational());
  CHECK_THROWS_AS(inverse(ExtElement(0)), DivisionByZero);

  // A cubic field: t^3 = 2.
  const auto c = std::make_shared<const ExtModulus>(UPoly{Rational(-2), Rational(0), Rational(0), Rational(1)});
  const ExtElement t = ExtElement::generator(c);
  CHECK(t * t * t == ExtElement(2));
  const ExtElement x = ExtElement(1) + t + t * t;
  CHECK(x * inverse(x) == ExtElement(1));
  auto non_monic = [] { return ExtModulus(UPoly{Rational(1), Rational(2)}); };
  CHECK_THROWS_AS(non_monic(), std::invalid_argument);
}

TEST_CASE("multivariate polynomials") {
  const auto v = std::make_shared<const PolyVars>(std::vector<std::string>{"x", "y", "z"});
  const MultiPoly x = MultiPoly::variable(v, 0), y = MultiPoly::variable(v, 1), z = MultiPoly::variable(v, 2);

  SUBCASE("expansion") {
    CHECK((x + y) * (x - y) == x * x - y * y);
    const MultiPoly s = (x + y + z) * (x + y + z);
    CHECK(s == x * x + y * y + z * z + MultiPoly(2) * (x * y + y * z + x * z));
    CHECK(s.total_degree() == 2);
    CHECK((x * y - y * x).is_zero());
    CHECK(((x - y) * (x - z) - (x * x - x * y - x * z + y * z)).is_zero());
  }
  SUBCASE("grlex printing") {
    CHECK((y + x * x + MultiPoly(3)).str() == "x^2 + y + 3");
    CHECK((MultiPoly(Rational(1, 6)) * x * y - z).str() == "1/6*x*y - z");
  }
  SUBCASE("units and division") {
    CHECK(is_unit(MultiPoly(5)));
    CHECK_FALSE(is_unit(x));
    CHECK(inverse(MultiPoly(Rational(2, 3))) == MultiPoly(Rational(3, 2)));
    CHECK_THROWS_AS(inverse(x), UnsupportedDomain);
    CHECK((x * MultiPoly(4)) / MultiPoly(2) == x * MultiPoly(2));
  }
  SUBCASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(-5, 5);
    const std::vector<MultiPoly> atoms{x, y, z, MultiPoly(1), MultiPoly(Rational(1, 2))};
    for (int trial = 0; trial < 100; ++trial) {
      MultiPoly p(0), q(0);
      for (const auto& a : atoms)
        for (const auto& b : atoms) {
          p += MultiPoly(c(rng)) * a * b;
          q += MultiPoly(c(rng)) * a;
        }
      const std::vector<Rational> pt{Rational(c(rng), 3), Rational(c(rng)), Rational(c(rng), 7)};
      CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
      CHECK((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt));
    }
  }
}

TEST_CASE("domain traits") {
  CHECK(is_field_v<Rational>);
  CHECK(is_field_v<ExtElement>);
  CHECK_FALSE(is_field_v<MultiPoly>);
  CHECK(from_rational<ExtElement>(Rational(1, 3)) == ExtElement(Rational(1, 3)));
}
