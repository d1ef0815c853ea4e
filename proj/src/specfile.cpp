#include "isotypic/specfile.hpp"

#include <fstream>
#include <sstream>

namespace isotypic {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw SpecError(what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_index(const json& j, int n, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + ": index is not an integer");
  const long v = j.get<long>();
  if (v < 0 || v >= n) fail(std::string(what) + ": index " + std::to_string(v) + " out of range");
  return static_cast<int>(v);
}

std::string monomial_key(Monomial m, int nvars) {
  std::string s;
  for (int v = 0; v < nvars; ++v) {
    if (v) s += ',';
    s += std::to_string(m.exponent(v));
  }
  return s;
}

template <class S> struct Reader;

template <> struct Reader<Rational> {
  Rational operator()(const json& j) const { return rational_from_json(j); }
};
template <> struct Reader<ExtElement> {
  ExtModulusPtr m;
  ExtElement operator()(const json& j) const { return extension_from_json(j, m); }
};
template <> struct Reader<MultiPoly> {
  PolyVarsPtr v;
  MultiPoly operator()(const json& j) const { return polynomial_from_json(j, v); }
};

template <class S> Vec<S> read_vec(const json& j, int n, const Reader<S>& rd, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) fail(std::string(what) + ": expected " + std::to_string(n) + " entries");
  Vec<S> v = zero_vec<S>(n);
  for (int i = 0; i < n; ++i) v(i) = rd(j[static_cast<std::size_t>(i)]);
  return v;
}

template <class S> std::vector<std::tuple<int, int, int, S>> read_quadruples(const json& j, int n, const Reader<S>& rd, const char* what) {
  if (!j.is_array()) fail(std::string(what) + ": expected an array of quadruples");
  std::vector<std::tuple<int, int, int, S>> out;
  for (const auto& q : j) {
    if (!q.is_array() || q.size() != 4) fail(std::string(what) + ": entries must be [i, j, k, coeff]");
    out.emplace_back(as_index(q[0], n, what), as_index(q[1], n, what), as_index(q[2], n, what), rd(q[3]));
  }
  return out;
}

template <class S> LoadedSpec build(const json& j, const Domain& domain, const Reader<S>& rd) {
  const json& dj = field(j, "dim");
  if (!dj.is_number_integer() || dj.get<long>() <= 0 || dj.get<long>() > 4096) fail("dim must be a positive integer");
  const int n = dj.get<int>();

  std::vector<std::string> labels;
  if (j.contains("basis")) {
    const json& b = j.at("basis");
    if (!b.is_array() || static_cast<int>(b.size()) != n) fail("basis: expected one label per dimension");
    for (const auto& l : b) {
      if (!l.is_string()) fail("basis: labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (int i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
  }

  StructureTensor<S> mult(n);
  for (const auto& [a, b, c, x] : read_quadruples(field(j, "mult"), n, rd, "mult")) mult.add(a, b, c, x);
  Vec<S> unit = read_vec(field(j, "unit"), n, rd, "unit");

  HopfAlgebraData<S> h;
  h.algebra = FinDimAlgebra<S>(std::move(labels), std::move(mult), std::move(unit));
  h.comult = Coproduct<S>(n);
  for (const auto& [a, b, c, x] : read_quadruples(field(j, "comult"), n, rd, "comult")) h.comult.add(a, b, c, x);
  h.counit = read_vec(field(j, "counit"), n, rd, "counit");

  bool solved = false;
  const json& aj = field(j, "antipode");
  if (aj.is_string()) {
    if (aj.get<std::string>() != "solve") fail("antipode: expected a matrix or \"solve\"");
    h.antipode = solve_antipode(h.algebra, h.comult, h.counit);
    solved = true;
  } else {
    if (!aj.is_array() || static_cast<int>(aj.size()) != n) fail("antipode: expected an n x n matrix");
    h.antipode = zero_mat<S>(n, n);
    for (int r = 0; r < n; ++r) {
      const Vec<S> row = read_vec(aj[static_cast<std::size_t>(r)], n, rd, "antipode row");
      for (int c = 0; c < n; ++c) h.antipode(r, c) = row(c);
    }
  }

  if (j.contains("characters")) {
    const json& cj = j.at("characters");
    if (!cj.is_array()) fail("characters: expected an array");
    for (const auto& c : cj) {
      Character<S> ch;
      const json& name = field(c, "name");
      if (!name.is_string()) fail("character name must be a string");
      ch.name = name.get<std::string>();
      const json& d = field(c, "dim");
      if (!d.is_number_integer() || d.get<long>() <= 0) fail("character dim must be a positive integer");
      ch.module_dim = d.get<int>();
      ch.values = read_vec(field(c, "values"), n, rd, "character values");
      h.characters.push_back(std::move(ch));
    }
  }
  return LoadedSpec{domain, AnyHopf(std::move(h)), solved};
}

}  // namespace

json domain_to_json(const Domain& d) {
  switch (d.kind) {
    case DomainKind::rational:
      return {{"kind", "rational"}};
    case DomainKind::extension: {
      json coeffs = json::array();
      for (const auto& c : d.modulus->coefficients()) coeffs.push_back(c.str());
      return {{"kind", "extension"}, {"var", d.modulus->var()}, {"modulus", coeffs}};
    }
    case DomainKind::polynomial:
      return {{"kind", "polynomial"}, {"vars", d.vars->names()}};
  }
  return {};
}

Domain domain_from_json(const json& j) {
  const json& k = field(j, "kind");
  if (!k.is_string()) fail("field kind must be a string");
  const std::string kind = k.get<std::string>();
  if (kind == "rational") return Domain::rational();
  if (kind == "extension") {
    const json& m = field(j, "modulus");
    if (!m.is_array()) fail("extension modulus must be a coefficient array");
    UPoly coeffs;
    for (const auto& c : m) coeffs.push_back(rational_from_json(c));
    std::string var = "t";
    if (j.contains("var")) {
      if (!j.at("var").is_string()) fail("extension var must be a string");
      var = j.at("var").get<std::string>();
    }
    try {
      return Domain::extension(std::make_shared<const ExtModulus>(std::move(coeffs), var));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  if (kind == "polynomial") {
    const json& v = field(j, "vars");
    if (!v.is_array() || v.empty() || static_cast<int>(v.size()) > PolyVars::kMaxVars) fail("polynomial vars: expected 1 to 7 names");
    std::vector<std::string> names;
    for (const auto& s : v) {
      if (!s.is_string()) fail("polynomial vars must be strings");
      names.push_back(s.get<std::string>());
    }
    return Domain::polynomial(std::make_shared<const PolyVars>(std::move(names)));
  }
  fail("unknown field kind '" + kind + "'");
}

json scalar_to_json(const Rational& x, const Domain&) { return x.str(); }

json scalar_to_json(const ExtElement& x, const Domain&) {
  const UPoly& c = x.coefficients();
  std::size_t len = c.size();
  while (len > 1 && c[len - 1].is_zero()) --len;
  json out = json::array();
  for (std::size_t i = 0; i < len; ++i) out.push_back(c[i].str());
  return out;
}

json scalar_to_json(const MultiPoly& x, const Domain& d) {
  json out = json::object();
  const int nv = d.vars ? d.vars->size() : (x.vars() ? x.vars()->size() : 0);
  for (const auto& [m, c] : x.terms()) out[monomial_key(m, nv)] = c.str();
  return out;
}

Rational rational_from_json(const json& j) {
  if (!j.is_string()) fail("coefficients must be \"p/q\" strings");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(e.what());
  }
}

ExtElement extension_from_json(const json& j, const ExtModulusPtr& m) {
  if (!j.is_array()) fail("extension coefficients must be arrays of \"p/q\" strings");
  if (static_cast<int>(j.size()) > m->degree()) fail("extension coefficient array longer than the modulus degree");
  UPoly raw;
  for (const auto& c : j) raw.push_back(rational_from_json(c));
  return ExtElement(m, raw);
}

MultiPoly polynomial_from_json(const json& j, const PolyVarsPtr& v) {
  if (!j.is_object()) fail("polynomial coefficients must be maps from exponent tuples to \"p/q\" strings");
  std::vector<MultiPoly::Term> terms;
  for (const auto& [key, c] : j.items()) {
    std::vector<int> exps;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        std::size_t used = 0;
        exps.push_back(std::stoi(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::exception&) {
        fail("malformed exponent tuple '" + key + "'");
      }
    }
    if (static_cast<int>(exps.size()) != v->size()) fail("exponent tuple '" + key + "' has the wrong length");
    try {
      terms.emplace_back(Monomial::from_exponents(exps), rational_from_json(c));
    } catch (const std::out_of_range&) {
      fail("exponent out of range in '" + key + "'");
    }
  }
  return MultiPoly(v, std::move(terms));
}

json emit_spec(const LoadedSpec& spec) {
  return std::visit([&](const auto& h) { return emit_spec(h, spec.domain); }, spec.hopf);
}

LoadedSpec parse_spec(const json& j) {
  if (!j.is_object()) fail("spec must be a JSON object");
  const Domain d = j.contains("field") ? domain_from_json(j.at("field")) : Domain::rational();
  switch (d.kind) {
    case DomainKind::rational:
      return build(j, d, Reader<Rational>{});
    case DomainKind::extension:
      return build(j, d, Reader<ExtElement>{d.modulus});
    case DomainKind::polynomial:
      return build(j, d, Reader<MultiPoly>{d.vars});
  }
  fail("unreachable");
}

LoadedSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path.string() + "'");
  return read_spec(in);
}

LoadedSpec read_spec(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(std::string("JSON parse error: ") + e.what());
  }
  return parse_spec(j);
}

}  // namespace isotypic
