#pragma once

// JSON algebra-spec files. Coefficients are serialized exactly: rationals as "p/q"
// strings, extension elements as coefficient arrays, polynomials as maps from
// comma-separated exponent tuples to "p/q" strings.

#include "isotypic/hopf.hpp"

#include "json.hpp"

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <variant>

namespace isotypic {

/// Malformed input: bad JSON, wrong shapes, indices out of range, unparsable coefficients.
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class DomainKind { rational, extension, polynomial };

/// Which coefficient domain a spec lives in.
struct Domain {
  DomainKind kind = DomainKind::rational;
  ExtModulusPtr modulus;  ///< extension only
  PolyVarsPtr vars;       ///< polynomial only

  static Domain rational() { return {}; }
  static Domain extension(ExtModulusPtr m) { return {DomainKind::extension, std::move(m), nullptr}; }
  static Domain polynomial(PolyVarsPtr v) { return {DomainKind::polynomial, nullptr, std::move(v)}; }
};

using AnyHopf = std::variant<HopfAlgebraData<Rational>, HopfAlgebraData<ExtElement>, HopfAlgebraData<MultiPoly>>;

struct LoadedSpec {
  Domain domain;
  AnyHopf hopf;
  bool antipode_solved = false;
};

nlohmann::json domain_to_json(const Domain& d);
Domain domain_from_json(const nlohmann::json& j);

nlohmann::json scalar_to_json(const Rational& x, const Domain& d);
/// Trailing zero coefficients are dropped, so constants print the same with or without a modulus.
nlohmann::json scalar_to_json(const ExtElement& x, const Domain& d);
nlohmann::json scalar_to_json(const MultiPoly& x, const Domain& d);

Rational rational_from_json(const nlohmann::json& j);
ExtElement extension_from_json(const nlohmann::json& j, const ExtModulusPtr& m);
MultiPoly polynomial_from_json(const nlohmann::json& j, const PolyVarsPtr& v);

template <class S> nlohmann::json emit_spec(const HopfAlgebraData<S>& h, const Domain& domain) {
  using nlohmann::json;
  const int n = h.dim();
  json out;
  out["field"] = domain_to_json(domain);
  out["dim"] = n;
  out["basis"] = h.labels();
  json mult = json::array();
  for (const auto& [i, j, k, c] : h.algebra.mult().quadruples()) mult.push_back(json::array({i, j, k, scalar_to_json(c, domain)}));
  out["mult"] = std::move(mult);
  json unit = json::array();
  for (int i = 0; i < n; ++i) unit.push_back(scalar_to_json(h.algebra.unit()(i), domain));
  out["unit"] = std::move(unit);
  json comult = json::array();
  for (const auto& [i, j, k, c] : h.comult.quadruples()) comult.push_back(json::array({i, j, k, scalar_to_json(c, domain)}));
  out["comult"] = std::move(comult);
  json counit = json::array();
  for (int i = 0; i < n; ++i) counit.push_back(scalar_to_json(h.counit(i), domain));
  out["counit"] = std::move(counit);
  json antipode = json::array();
  for (int r = 0; r < n; ++r) {
    json row = json::array();
    for (int c = 0; c < n; ++c) row.push_back(scalar_to_json(h.antipode(r, c), domain));
    antipode.push_back(std::move(row));
  }
  out["antipode"] = std::move(antipode);
  json chars = json::array();
  for (const auto& ch : h.characters) {
    json values = json::array();
    for (int i = 0; i < n; ++i) values.push_back(scalar_to_json(ch.values(i), domain));
    chars.push_back({{"name", ch.name}, {"dim", ch.module_dim}, {"values", std::move(values)}});
  }
  out["characters"] = std::move(chars);
  return out;
}

nlohmann::json emit_spec(const LoadedSpec& spec);

/// Builds the Hopf data described by `j`. The antipode is solved when the file says
/// "solve". Axioms are not checked here.
LoadedSpec parse_spec(const nlohmann::json& j);
LoadedSpec load_spec(const std::filesystem::path& path);
LoadedSpec read_spec(std::istream& in);

}  // namespace isotypic
