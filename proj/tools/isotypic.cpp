// Command-line front end: load an algebra spec, verify it, and run one analysis.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 input or usage error.

#include "isotypic/examples.hpp"
#include "isotypic/specfile.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace isotypic;
using nlohmann::json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<CheckResult> checks;
  std::optional<std::string> error;
  double seconds = 0;

  bool ok() const { return !error && all_passed(checks); }
  void fact(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
  void check(std::string name, bool passed, std::string witness = {}) {
    checks.push_back({std::move(name), passed, passed ? std::string{} : std::move(witness)});
  }
};

void print(const Report& r, bool as_json) {
  if (as_json) {
    json j;
    j["command"] = r.command;
    j["facts"] = json::object();
    for (const auto& [k, v] : r.facts) j["facts"][k] = v;
    j["checks"] = json::array();
    for (const auto& c : r.checks)
      j["checks"].push_back({{"name", c.name}, {"verdict", c.passed ? "pass" : "fail"}, {"witness", c.witness}});
    if (r.error) j["error"] = *r.error;
    j["seconds"] = r.seconds;
    j["status"] = r.ok() ? "pass" : "fail";
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << r.command << "\n";
  for (const auto& [k, v] : r.facts) std::cout << "  " << k << ": " << v << "\n";
  for (const auto& c : r.checks) {
    std::cout << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name;
    if (!c.passed && !c.witness.empty()) std::cout << "  witness: " << c.witness;
    std::cout << "\n";
  }
  if (r.error) std::cout << "  error: " << *r.error << "\n";
  std::cout << "  status: " << (r.ok() ? "pass" : "fail") << " (" << r.seconds << " s)\n";
}

LoadedSpec read_input(const std::string& path) {
  if (path == "-") return read_spec(std::cin);
  return load_spec(path);
}

template <class S> std::string basis_list(const FinDimAlgebra<S>& a, const Subspace<S>& sub) {
  std::string out;
  for (int i = 0; i < sub.dim(); ++i) {
    if (i) out += "; ";
    out += a.format(sub.basis_vector(i));
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

template <class S> void run_radical(const HopfAlgebraData<S>& h, Report& r) {
  const Subspace<S> j = radical(h.algebra);
  r.fact("dim J", std::to_string(j.dim()));
  r.fact("basis", basis_list(h.algebra, j));
  r.fact("semisimple", j.dim() == 0 ? "yes" : "no");
}

template <class S> void run_chevalley(const HopfAlgebraData<S>& h, Report& r) {
  const Subspace<S> j = radical(h.algebra);
  r.fact("dim J", std::to_string(j.dim()));
  for (auto& c : chevalley_conditions(h)) r.checks.push_back(std::move(c));
}

template <class S> void run_idempotents(const HopfAlgebraData<S>& h, Report& r, bool certify) {
  for (const auto& chi : h.characters) r.checks.push_back(validate_character(h, chi));
  if (!all_passed(r.checks)) return;
  Vec<S> p = dual_regular_character(h);
  const S inv = inverse(S(h.dim()));
  for (Eigen::Index i = 0; i < p.size(); ++i) p(i) *= inv;
  const IdempotentProperties props = p_properties(h, p);
  r.fact("p", h.algebra.format(p));
  r.check("p^2 = p", props.idempotent, h.algebra.format(multiply(h.algebra, p, p) - p));
  r.check("eps(p) = 1", props.counit_one, to_string(dot(h.counit, p)));
  r.check("Delta(p) cocommutative", props.cocommutative);
  std::vector<NamedIdempotent<S>> entries;
  for (const auto& chi : h.characters) {
    entries.push_back({chi.name, projector_from(h, chi, p), chi});
    r.fact("p[" + chi.name + "]", h.algebra.format(entries.back().value));
  }
  if (!certify) return;
  const DecompositionReport<S> rep = certify_isotypic(h, entries);
  for (std::size_t i = 0; i < entries.size(); ++i)
    r.check("p[" + rep.names[i] + "]^2 = p[" + rep.names[i] + "]", rep.idempotence_flags[i],
            "p^2 - p = " + h.algebra.format(rep.idempotence_residuals[i]));
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t k = 0; k < entries.size(); ++k)
      if (i != k)
        r.check("p[" + rep.names[i] + "] p[" + rep.names[k] + "] = 0", rep.pairwise_orthogonality[i][k],
                h.algebra.format(rep.products[i][k]));
  r.check("sum of projectors = 1", rep.sum_is_unit, "sum - 1 = " + h.algebra.format(rep.sum_residual));
  std::string mismatched;
  for (std::size_t i = 0; i < rep.projection_flags.size(); ++i)
    if (!rep.projection_flags[i]) mismatched += (mismatched.empty() ? "" : ", ") + rep.names[i];
  r.check("projections match central idempotents of H/J", rep.projections_match_quotient,
          chevalley_check(h) ? mismatched : "J is not a Hopf ideal");
  r.check("isotypic decomposition certified", rep.certified, "see failed checks");
}

template <class S> void run_hecke(const HopfAlgebraData<S>& h, Report& r) {
  const HeckeAlgebra<S> hk = hecke_algebra_of_predual(h);
  r.fact("Lambda0", dual(h).algebra.format(hk.lambda0));
  r.fact("Hecke dim", std::to_string(hk.algebra.dim()));
  r.fact("carrier", hk.carrier.dim() == 0 ? "0" : [&] {
    std::string s;
    for (const auto& l : hk.algebra.labels()) s += (s.empty() ? "" : "; ") + l;
    return s;
  }());
  r.fact("unique simple module (split-sensitive)", has_unique_simple(hk.algebra) ? "yes" : "no");
}

template <class S> void run_theorem(const HopfAlgebraData<S>& h, Report& r) {
  const TheoremPair t = hecke_theorem_check(h);
  r.fact("sum of projectors = 1", t.lhs ? "true" : "false");
  r.fact("Hecke algebra has one simple module", t.rhs ? "true" : "false");
  r.fact("Hecke dim", std::to_string(t.hecke_dim));
  r.check("both sides agree", t.lhs == t.rhs, t.lhs ? "sum is 1 but the Hecke algebra has several simples" : "sum is not 1 but the Hecke algebra has one simple");
}

// ---------------------------------------------------------------------------

std::vector<Rational> parse_lambda(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(Rational::parse(part));
  if (out.size() != 3) throw InputError("--lambda expects three comma-separated rationals");
  return out;
}

json emit_example(const std::string& name, const std::optional<std::string>& mu, const std::optional<std::string>& lambda,
                  bool symbolic) {
  if (name == "sweedler4") return emit_spec(build_sweedler4(), Domain::rational());
  if (name == "double-cover") {
    const Rational m = mu ? Rational::parse(*mu) : Rational(2);
    if (m.is_zero()) return emit_spec(build_double_cover<ExtElement>(ExtElement(0)), Domain::extension(gaussian_modulus()));
    return emit_spec(build_double_cover<Rational>(m), Domain::rational());
  }
  if (name == "double-cover-dual") return emit_spec(build_double_cover_dual(), Domain::rational());
  if (name == "c2") return emit_spec(build_group_c2(), Domain::rational());
  if (name == "s3") return emit_spec(build_group_s3(), Domain::rational());
  if (name == "fk3") {
    if (symbolic) return emit_spec(fk3_dual(build_fk3_symbolic().hstar), Domain::polynomial(fk3_vars()));
    const std::vector<Rational> l = lambda ? parse_lambda(*lambda) : std::vector<Rational>{Rational(0), Rational(23), Rational(11)};
    return emit_spec(fk3_dual(build_fk3<Rational>(l[0], l[1], l[2]).hstar), Domain::rational());
  }
  throw InputError("unknown example '" + name + "' (sweedler4, double-cover, double-cover-dual, c2, s3, fk3)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character-projector idempotents and isotypic decompositions of finite-dimensional Hopf algebras"};
  app.require_subcommand(1);

  std::string spec_path;
  bool as_json = false, certify = false, symbolic = false;
  std::string example_name;
  std::optional<std::string> mu, lambda;

  auto add_analysis = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("spec", spec_path, "algebra spec file, or - for standard input")->required();
    sub->add_flag("--json", as_json, "machine-readable report");
    return sub;
  };
  add_analysis("verify", "check the Hopf algebra axioms");
  add_analysis("radical", "dimension and basis of the Jacobson radical");
  add_analysis("chevalley", "whether the radical is a Hopf ideal");
  add_analysis("idempotents", "p and the character projectors")->add_flag("--certify", certify, "certify the isotypic decomposition");
  add_analysis("hecke", "Hecke algebra of the trivial representation of the dual");
  add_analysis("theorem310", "sum of projectors = 1 versus uniqueness of the Hecke simple module");
  CLI::App* ex = app.add_subcommand("example", "emit a built-in spec");
  ex->add_option("name", example_name, "sweedler4, double-cover, double-cover-dual, c2, s3, fk3")->required();
  ex->add_option("--mu", mu, "double-cover parameter (default 2; 0 works over Q(i))");
  ex->add_option("--lambda", lambda, "fk3 parameters a,b,c (default 0,23,11)");
  ex->add_flag("--symbolic", symbolic, "fk3 over Q[la, lb, lc]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();

  if (command == "example") {
    try {
      std::cout << emit_example(example_name, mu, lambda, symbolic).dump() << "\n";
      return 0;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }

  Report r;
  r.command = command + " " + spec_path + (certify ? " --certify" : "");
  const auto t0 = std::chrono::steady_clock::now();
  int code = 0;
  try {
    const LoadedSpec spec = read_input(spec_path);
    if (spec.antipode_solved) r.fact("antipode", "solved");
    std::visit(
        [&](const auto& h) {
          r.fact("dim", std::to_string(h.dim()));
          for (auto& c : verify_axioms(h)) r.checks.push_back(std::move(c));
          if (!all_passed(r.checks) || command == "verify") return;
          if (command == "radical") run_radical(h, r);
          else if (command == "chevalley") run_chevalley(h, r);
          else if (command == "idempotents") run_idempotents(h, r, certify);
          else if (command == "hecke") run_hecke(h, r);
          else if (command == "theorem310") run_theorem(h, r);
        },
        spec.hopf);
    code = r.ok() ? 0 : 1;
  } catch (const SpecError& e) {
    r.error = e.what();
    code = 2;
  } catch (const UnsupportedDomain& e) {
    r.error = e.what();
    code = 2;
  } catch (const std::invalid_argument& e) {
    r.error = e.what();
    code = 2;
  } catch (const std::exception& e) {
    r.error = e.what();
    code = 1;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  print(r, as_json);
  return code;
}
