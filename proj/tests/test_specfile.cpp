#include "isotypic/examples.hpp"
#include "isotypic/specfile.hpp"

#include "doctest.h"

#include <sstream>

using namespace isotypic;
using nlohmann::json;
using Q = Rational;

namespace {

template <class S> void check_same(const HopfAlgebraData<S>& a, const HopfAlgebraData<S>& b) {
  CHECK(a.labels() == b.labels());
  CHECK(a.algebra.mult() == b.algebra.mult());
  CHECK(equal<S>(a.algebra.unit(), b.algebra.unit()));
  CHECK(a.comult == b.comult);
  CHECK(equal<S>(a.counit, b.counit));
  CHECK(equal<S>(a.antipode, b.antipode));
  REQUIRE(a.characters.size() == b.characters.size());
  for (std::size_t i = 0; i < a.characters.size(); ++i) {
    CHECK(a.characters[i].name == b.characters[i].name);
    CHECK(a.characters[i].module_dim == b.characters[i].module_dim);
    CHECK(equal<S>(a.characters[i].values, b.characters[i].values));
  }
}

template <class S> void round_trip(const HopfAlgebraData<S>& h, const Domain& d) {
  const json j = emit_spec(h, d);
  const LoadedSpec loaded = parse_spec(j);
  const auto* back = std::get_if<HopfAlgebraData<S>>(&loaded.hopf);
  REQUIRE(back != nullptr);
  check_same(h, *back);
  CHECK(emit_spec(loaded) == j);
  std::stringstream ss(j.dump());
  CHECK(emit_spec(read_spec(ss)) == j);
}

json sweedler_json() { return emit_spec(build_sweedler4(), Domain::rational()); }

}  // namespace

TEST_CASE("emit then load is the identity") {
  round_trip(build_sweedler4(), Domain::rational());
  round_trip(build_double_cover<Q>(Q(2)), Domain::rational());
  round_trip(build_double_cover<ExtElement>(ExtElement(0)), Domain::extension(gaussian_modulus()));
  round_trip(build_double_cover_dual(), Domain::rational());
  round_trip(build_group_s3(), Domain::rational());
  round_trip(map_hopf<MultiPoly>(build_sweedler4(), embed_rational()), Domain::polynomial(fk3_vars()));
}

TEST_CASE("coefficient encodings") {
  CHECK(scalar_to_json(Q(-3, 4), Domain::rational()) == "-3/4");
  const ExtElement i = ExtElement::generator(gaussian_modulus());
  const Domain qi = Domain::extension(gaussian_modulus());
  CHECK(scalar_to_json(ExtElement(Q(1, 2)) - i, qi) == json::array({"1/2", "-1"}));
  CHECK(scalar_to_json(ExtElement(3), qi) == json::array({"3"}));
  CHECK(extension_from_json(json::array({"0", "1"}), gaussian_modulus()) == i);
  const auto v = fk3_vars();
  const MultiPoly la = MultiPoly::variable(v, 0), lc = MultiPoly::variable(v, 2);
  const MultiPoly p = la * la * lc - MultiPoly(Q(2, 3));
  const json pj = scalar_to_json(p, Domain::polynomial(v));
  CHECK(pj == json{{"2,0,1", "1"}, {"0,0,0", "-2/3"}});
  CHECK(polynomial_from_json(pj, v) == p);
  CHECK(scalar_to_json(MultiPoly(5), Domain::polynomial(v)) == json{{"0,0,0", "5"}});
}

TEST_CASE("antipode can be solved on load") {
  json j = sweedler_json();
  j["antipode"] = "solve";
  const LoadedSpec s = parse_spec(j);
  CHECK(s.antipode_solved);
  CHECK(equal<Q>(std::get<HopfAlgebraData<Q>>(s.hopf).antipode, build_sweedler4().antipode));
}

TEST_CASE("malformed specs are rejected") {
  auto rejects = [](const json& j) { CHECK_THROWS_AS(parse_spec(j), SpecError); };
  json j = sweedler_json();
  j["mult"][0][2] = 9;
  rejects(j);
  j = sweedler_json();
  j["mult"][0][3] = 0.5;
  rejects(j);
  j = sweedler_json();
  j["unit"][0] = "1/0";
  rejects(j);
  j = sweedler_json();
  j.erase("comult");
  rejects(j);
  j = sweedler_json();
  j["counit"].erase(0);
  rejects(j);
  j = sweedler_json();
  j["antipode"] = "guess";
  rejects(j);
  j = sweedler_json();
  j["field"] = {{"kind", "reals"}};
  rejects(j);
  j = sweedler_json();
  j["field"] = {{"kind", "extension"}, {"modulus", {"1", "0", "2"}}};
  rejects(j);
  j = sweedler_json();
  j["dim"] = -1;
  rejects(j);
  rejects(json::array());
  std::stringstream bad("{ not json");
  CHECK_THROWS_AS(read_spec(bad), SpecError);
  CHECK_THROWS_AS(load_spec("/nonexistent/spec.json"), SpecError);
}

TEST_CASE("a corrupted coproduct loads but fails the counit axiom at the right element") {
  json j = sweedler_json();
  for (auto& q : j["comult"])
    if (q[0] == 2 && q[1] == 2) q[3] = "2";  // Delta(x) = 2 x (x) 1 + g (x) x
  const auto h = std::get<HopfAlgebraData<Q>>(parse_spec(j).hopf);
  const CheckResult c = check_counit(h);
  CHECK_FALSE(c.passed);
  CHECK(c.witness == "x");
}
