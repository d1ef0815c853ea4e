#include "isotypic/examples.hpp"

namespace isotypic {

ExtModulusPtr gaussian_modulus() {
  static const ExtModulusPtr m = std::make_shared<const ExtModulus>(UPoly{Rational(1), Rational(0), Rational(1)}, "i");
  return m;
}

namespace {

template <class S> Character<S> character(std::string name, std::vector<S> values, int dim) {
  Vec<S> v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
  return Character<S>{std::move(name), std::move(v), dim};
}

}  // namespace

// ---------------------------------------------------------------------------

PresentedAlgebra<Rational> sweedler4_presentation(bool corrupt_sign) {
  using S = Rational;
  const std::vector<std::string> gens{"g", "x"};
  auto w = [&](std::string_view t) { return RewriteSystem<S>::parse_word(gens, t); };
  std::vector<RewriteRule<S>> rules{
      {w("g g"), {{w("1"), S(1)}}},
      {w("x x"), {}},
      {w("x g"), {{w("g x"), corrupt_sign ? S(1) : S(-1)}}},
  };
  RewriteSystem<S> rs(gens, rules, {w("1"), w("g"), w("x"), w("g x")}, {"1", "g", "x", "gx"});
  return close_presentation(std::move(rs));
}

HopfAlgebraData<Rational> build_sweedler4() {
  using S = Rational;
  const auto pa = sweedler4_presentation();
  const int n = 4;
  const Vec<S> one = basis_vec<S>(n, 0), g = basis_vec<S>(n, 1), x = basis_vec<S>(n, 2);
  std::vector<SparseVec<S>> images{outer(g, g), add_sparse(outer(x, one), outer(g, x))};
  HopfAlgebraData<S> h = hopf_from_presentation(pa, images);
  h.characters.push_back(character<S>("trivial", {1, 1, 0, 0}, 1));
  h.characters.push_back(character<S>("sign", {1, -1, 0, 0}, 1));
  return h;
}

template <class S> HopfAlgebraData<S> build_double_cover(const S& mu) {
  const std::vector<std::string> gens{"g", "x"};
  auto w = [&](std::string_view t) { return RewriteSystem<S>::parse_word(gens, t); };
  const S half_mu = mu * inverse(S(2));
  std::vector<RewriteRule<S>> rules{
      {w("g g g g"), {{w("1"), S(1)}}},
      {w("x g"), {{w("g x"), S(-1)}}},
      {w("x x"), {{w("1"), half_mu}, {w("g g"), -half_mu}}},
  };
  std::erase_if(rules.back().rhs, [](const auto& t) { return is_zero(t.second); });
  RewriteSystem<S> rs(gens, rules,
                      {w("1"), w("g"), w("g g"), w("g g g"), w("x"), w("g x"), w("g g x"), w("g g g x")},
                      {"1", "g", "g^2", "g^3", "x", "gx", "g^2x", "g^3x"});
  const auto pa = close_presentation(std::move(rs));
  const int n = 8;
  const Vec<S> one = basis_vec<S>(n, 0), g = basis_vec<S>(n, 1), x = basis_vec<S>(n, 4);
  std::vector<SparseVec<S>> images{outer(g, g), add_sparse(outer(x, one), outer(g, x))};
  HopfAlgebraData<S> h = hopf_from_presentation(pa, images);

  auto one_dim = [&](std::string name, const S& z) {
    const S z2 = z * z, z3 = z2 * z;
    return character<S>(std::move(name), {S(1), z, z2, z3, S(0), S(0), S(0), S(0)}, 1);
  };
  h.characters.push_back(one_dim("trivial", S(1)));
  h.characters.push_back(one_dim("g->-1", S(-1)));
  bool have_i = false;
  if constexpr (std::is_same_v<S, ExtElement>) have_i = mu.is_zero();
  if (have_i) {
    if constexpr (std::is_same_v<S, ExtElement>) {
      const ExtElement i = ExtElement::generator(gaussian_modulus());
      h.characters.push_back(one_dim("g->i", i));
      h.characters.push_back(one_dim("g->-i", -i));
    }
  } else if (!is_zero(mu)) {
    h.characters.push_back(character<S>("V", {S(2), S(0), S(-2), S(0), S(0), S(0), S(0), S(0)}, 2));
  }
  return h;
}

template HopfAlgebraData<Rational> build_double_cover<Rational>(const Rational&);
template HopfAlgebraData<ExtElement> build_double_cover<ExtElement>(const ExtElement&);

HopfAlgebraData<Rational> build_double_cover_dual() {
  using S = Rational;
  const HopfAlgebraData<S> hstar = build_double_cover<S>(S(2));
  HopfAlgebraData<S> h = dual(hstar);
  const char* names[] = {"1", "g", "g^2", "g^3"};
  for (int k = 0; k < 4; ++k) h.characters.push_back({names[k], basis_vec<S>(8, k), 1});
  return h;
}

namespace {

/// Group algebra from a multiplication table on indices, with Delta(g) = g (x) g.
HopfAlgebraData<Rational> group_algebra(const std::vector<std::string>& names, const std::vector<std::vector<int>>& table,
                                        const std::vector<int>& inverses) {
  using S = Rational;
  const int n = static_cast<int>(names.size());
  StructureTensor<S> mult(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mult.add(i, j, table[i][j], S(1));
  HopfAlgebraData<S> h;
  h.algebra = FinDimAlgebra<S>(names, std::move(mult), basis_vec<S>(n, 0));
  h.comult = Coproduct<S>(n);
  for (int i = 0; i < n; ++i) h.comult.add(i, i, i, S(1));
  h.counit = Vec<S>::Constant(n, S(1));
  h.antipode = zero_mat<S>(n, n);
  for (int i = 0; i < n; ++i) h.antipode(inverses[static_cast<std::size_t>(i)], i) = S(1);
  return h;
}

}  // namespace

HopfAlgebraData<Rational> build_group_c2() {
  auto h = group_algebra({"1", "g"}, {{0, 1}, {1, 0}}, {0, 1});
  h.characters.push_back(character<Rational>("trivial", {1, 1}, 1));
  h.characters.push_back(character<Rational>("sign", {1, -1}, 1));
  return h;
}

// ---------------------------------------------------------------------------
// S3

const std::array<Perm, 6>& s3_elements() {
  static const std::array<Perm, 6> e{{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}}};
  return e;
}

const std::array<std::string, 6>& s3_names() {
  static const std::array<std::string, 6> n{"1", "12", "23", "13", "123", "132"};
  return n;
}

int s3_index(const Perm& p) {
  const auto& e = s3_elements();
  for (int i = 0; i < 6; ++i)
    if (e[static_cast<std::size_t>(i)] == p) return i;
  throw std::invalid_argument("not a permutation of three points");
}

Perm s3_compose(const Perm& s, const Perm& t) {
  return {s[static_cast<std::size_t>(t[0])], s[static_cast<std::size_t>(t[1])], s[static_cast<std::size_t>(t[2])]};
}

Perm s3_inverse(const Perm& p) {
  Perm q{};
  for (int i = 0; i < 3; ++i) q[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = i;
  return q;
}

HopfAlgebraData<Rational> build_group_s3() {
  const auto& e = s3_elements();
  std::vector<std::string> names;
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  std::vector<int> inv(6);
  for (int i = 0; i < 6; ++i) {
    names.push_back("(" + s3_names()[static_cast<std::size_t>(i)] + ")");
    inv[static_cast<std::size_t>(i)] = s3_index(s3_inverse(e[static_cast<std::size_t>(i)]));
    for (int j = 0; j < 6; ++j) table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = s3_index(s3_compose(e[i], e[j]));
  }
  names[0] = "1";
  auto h = group_algebra(names, table, inv);
  h.characters.push_back(character<Rational>("trivial", {1, 1, 1, 1, 1, 1}, 1));
  h.characters.push_back(character<Rational>("sign", {1, -1, -1, -1, 1, 1}, 1));
  h.characters.push_back(character<Rational>("V", {2, 0, 0, 0, -1, -1}, 2));
  return h;
}

// ---------------------------------------------------------------------------
// FK3

const std::array<std::string, 12>& fk3_words() {
  static const std::array<std::string, 12> w{"1", "a", "b", "c", "a b", "b c", "a c", "c b", "a b a", "a b c", "b a c", "a b a c"};
  return w;
}

PolyVarsPtr fk3_vars() {
  static const PolyVarsPtr v = std::make_shared<const PolyVars>(std::vector<std::string>{"la", "lb", "lc"});
  return v;
}

template <class S> FK3Algebra<S> build_fk3(const S& la, const S& lb, const S& lc, bool flip_sign) {
  std::vector<std::string> gens{"a", "b", "c"};
  for (const auto& n : s3_names()) gens.push_back("e" + n);
  auto w = [&](std::string_view t) { return RewriteSystem<S>::parse_word(gens, t); };
  auto e = [](int g) { return std::string(1, static_cast<char>(3 + g)); };
  const auto& perms = s3_elements();
  const S lab = la - lb, lac = la - lc, lbc = lb - lc, lba = lb - la, lca = lc - la, lcb = lc - lb;
  auto idx = [](const char* name) {
    const auto& n = s3_names();
    for (int i = 0; i < 6; ++i)
      if (n[static_cast<std::size_t>(i)] == name) return i;
    throw std::logic_error("bad S3 name");
  };
  // Values of a^2, b^2, c^2 as combinations of single idempotents.
  auto square = [&](const S& l1, const char* g1, const char* g2, const S& l2, const char* g3, const char* g4) {
    WordCombination<S> out{{e(idx(g1)), l1}, {e(idx(g2)), l1}, {e(idx(g3)), l2}, {e(idx(g4)), l2}};
    std::erase_if(out, [](const auto& t) { return is_zero(t.second); });
    return out;
  };
  const WordCombination<S> aa = square(lab, "13", "132", lac, "23", "123");
  const WordCombination<S> bb = square(lbc, "12", "132", lba, "13", "123");
  const WordCombination<S> cc = square(lca, "23", "132", lcb, "12", "123");

  std::vector<RewriteRule<S>> rules;
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 6; ++h) {
      RewriteRule<S> r{e(g) + e(h), {}};
      if (g == h) r.rhs.emplace_back(e(g), S(1));
      rules.push_back(std::move(r));
    }
  // e_h x -> x e_{s_x h}, from x e_g = e_{s_x g} x.
  const Perm sx[3] = {perms[1], perms[2], perms[3]};
  for (int x = 0; x < 3; ++x)
    for (int h = 0; h < 6; ++h) {
      const Word gen(1, static_cast<char>(x));
      rules.push_back({e(h) + gen, {{gen + e(s3_index(s3_compose(sx[x], perms[static_cast<std::size_t>(h)]))), S(1)}}});
    }
  rules.push_back({w("a a"), aa});
  rules.push_back({w("b b"), bb});
  rules.push_back({w("c c"), cc});
  rules.push_back({w("c a"), {{w("a b"), S(-1)}, {w("b c"), S(-1)}}});
  const S s = flip_sign ? S(1) : S(-1);
  rules.push_back({w("b a"), {{w("a c"), s}, {w("c b"), s}}});
  // Completion of the overlap c(ca) = (cc)a: cbc = bcb + a(b^2) - (c^2)a.
  RewriteRule<S> cubic{w("c b c"), {{w("b c b"), S(1)}}};
  for (const auto& [u, c] : bb) cubic.rhs.emplace_back(w("a") + u, c);
  for (const auto& [u, c] : cc) cubic.rhs.emplace_back(u + w("a"), -c);
  rules.push_back(std::move(cubic));

  std::vector<Word> basis;
  std::vector<std::string> labels;
  for (const auto& word : fk3_words())
    for (int g = 0; g < 6; ++g) {
      basis.push_back(w(word) + e(g));
      labels.push_back((word == "1" ? std::string() : [&] {
        std::string t;
        for (char ch : word)
          if (ch != ' ') t += ch;
        return t + "*";
      }()) + "e" + s3_names()[static_cast<std::size_t>(g)]);
    }
  WordCombination<S> unit;
  for (int g = 0; g < 6; ++g) unit.emplace_back(e(g), S(1));

  RewriteSystem<S> rs(gens, std::move(rules), std::move(basis), std::move(labels));
  FK3Algebra<S> out{close_presentation(std::move(rs), unit), {}};
  const auto& pa = out.presented;
  const int n = pa.result.dim();

  auto elem = [&](std::string_view word) {
    WordCombination<S> c;
    for (int g = 0; g < 6; ++g) c.emplace_back(w(word) + e(g), S(1));
    return pa.rewrite.normal_form(c);
  };
  auto idem = [&](int g) { return basis_vec<S>(n, fk3_index(0, g)); };
  const Vec<S> one = pa.result.unit();
  const Vec<S> A = elem("a"), B = elem("b"), C = elem("c");
  auto delta_gen = [&](const Vec<S>& x, const char* p1, const char* m1, const Vec<S>& y1, const char* p2, const char* m2,
                       const Vec<S>& y2, const char* p3, const char* m3, const Vec<S>& y3) {
    SparseVec<S> d = outer(x, one);
    d = add_sparse(d, outer(Vec<S>(idem(idx(p1)) - idem(idx(m1))), y1));
    d = add_sparse(d, outer(Vec<S>(idem(idx(p2)) - idem(idx(m2))), y2));
    d = add_sparse(d, outer(Vec<S>(idem(idx(p3)) - idem(idx(m3))), y3));
    return d;
  };
  std::vector<SparseVec<S>> images;
  images.push_back(delta_gen(A, "1", "12", A, "132", "13", B, "123", "23", C));
  images.push_back(delta_gen(B, "1", "23", B, "132", "12", C, "123", "13", A));
  images.push_back(delta_gen(C, "1", "13", C, "132", "23", A, "123", "12", B));
  for (int g = 0; g < 6; ++g) {
    SparseVec<S> d;
    for (int h = 0; h < 6; ++h) {
      const int gh = s3_index(s3_compose(perms[static_cast<std::size_t>(g)], s3_inverse(perms[static_cast<std::size_t>(h)])));
      d = add_sparse(d, outer(idem(gh), idem(h)));
    }
    images.push_back(std::move(d));
  }
  out.hstar = hopf_from_presentation(pa, images);
  return out;
}

template FK3Algebra<Rational> build_fk3<Rational>(const Rational&, const Rational&, const Rational&, bool);
template FK3Algebra<MultiPoly> build_fk3<MultiPoly>(const MultiPoly&, const MultiPoly&, const MultiPoly&, bool);

FK3Algebra<MultiPoly> build_fk3_symbolic() {
  const auto v = fk3_vars();
  return build_fk3<MultiPoly>(MultiPoly::variable(v, 0), MultiPoly::variable(v, 1), MultiPoly::variable(v, 2));
}

template <class S> HopfAlgebraData<S> fk3_dual(const HopfAlgebraData<S>& hstar) {
  HopfAlgebraData<S> h = dual(hstar);
  const int n = h.dim();
  auto chi = [&](std::string name, std::array<int, 6> coeff, int dim) {
    Vec<S> v = zero_vec<S>(n);
    for (int g = 0; g < 6; ++g) v(fk3_index(0, g)) = S(coeff[static_cast<std::size_t>(g)]);
    return Character<S>{std::move(name), std::move(v), dim};
  };
  h.characters.push_back(chi("trivial", {1, 1, 1, 1, 1, 1}, 1));
  h.characters.push_back(chi("sign", {1, -1, -1, -1, 1, 1}, 1));
  h.characters.push_back(chi("V", {2, 0, 0, 0, -1, -1}, 2));
  return h;
}

template HopfAlgebraData<Rational> fk3_dual<Rational>(const HopfAlgebraData<Rational>&);
template HopfAlgebraData<MultiPoly> fk3_dual<MultiPoly>(const HopfAlgebraData<MultiPoly>&);

}  // namespace isotypic
