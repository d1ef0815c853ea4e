#pragma once

// Hopf algebras by structure constants and the character-projector machinery.

#include "isotypic/findim.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace isotypic {

/// Delta(b_i) = sum d_i^{jk} b_j (x) b_k, each image sparse over pair indices j*n+k.
template <class S> class Coproduct {
 public:
  Coproduct() = default;
  explicit Coproduct(int n) : n_(n), images_(static_cast<std::size_t>(n)) {}
  Coproduct(int n, std::vector<SparseVec<S>> images) : n_(n), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != n) throw DimensionMismatch("coproduct: one image per basis element");
    for (auto& v : images_) normalize(v);
  }

  int dim() const { return n_; }
  const SparseVec<S>& at(int i) const { return images_[static_cast<std::size_t>(i)]; }
  void set(int i, SparseVec<S> v) {
    normalize(v);
    images_[static_cast<std::size_t>(i)] = std::move(v);
  }
  void add(int i, int j, int k, const S& c) {
    auto& v = images_[static_cast<std::size_t>(i)];
    v.emplace_back(pair_index(n_, j, k), c);
    normalize(v);
  }
  std::vector<std::tuple<int, int, int, S>> quadruples() const {
    std::vector<std::tuple<int, int, int, S>> out;
    for (int i = 0; i < n_; ++i)
      for (const auto& [p, c] : at(i)) out.emplace_back(i, p / n_, p % n_, c);
    return out;
  }
  friend bool operator==(const Coproduct& a, const Coproduct& b) { return a.n_ == b.n_ && a.images_ == b.images_; }

 private:
  void normalize(SparseVec<S>& v) const {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec<S> out;
    for (auto& e : v) {
      if (e.first < 0 || e.first >= n_ * n_) throw DimensionMismatch("coproduct index out of range");
      if (!out.empty() && out.back().first == e.first)
        out.back().second += e.second;
      else
        out.push_back(std::move(e));
      if (is_zero(out.back().second)) out.pop_back();
    }
    v = std::move(out);
  }

  int n_ = 0;
  std::vector<SparseVec<S>> images_;
};

/// A linear functional on H, tagged with the dimension of the module it is the trace of.
template <class S> struct Character {
  std::string name;
  Vec<S> values;
  int module_dim = 1;
};

template <class S> struct HopfAlgebraData {
  FinDimAlgebra<S> algebra;
  Coproduct<S> comult;
  Vec<S> counit;
  Mat<S> antipode;  ///< column j holds S(b_j)
  std::vector<Character<S>> characters;

  int dim() const { return algebra.dim(); }
  const std::vector<std::string>& labels() const { return algebra.labels(); }
};

struct NotHopfAlgebra : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Basic maps

template <class S> SparseVec<S> comultiply_sparse(const Coproduct<S>& d, const SparseVec<S>& u) {
  SparseAccumulator<S> acc(static_cast<std::size_t>(d.dim()) * d.dim());
  for (const auto& [i, c] : u)
    for (const auto& [p, e] : d.at(i)) acc.add(p, c * e);
  return acc.take();
}

/// Delta(u) in dim^2 coordinates.
template <class S> Vec<S> comultiply(const HopfAlgebraData<S>& h, const Vec<S>& u) {
  if (u.size() != h.dim()) throw DimensionMismatch("comultiply: vector length");
  return to_dense(comultiply_sparse(h.comult, to_sparse(u)), h.dim() * h.dim());
}

template <class S> S evaluate(const Vec<S>& functional, const Vec<S>& u) { return dot(functional, u); }

template <class S> Vec<S> apply_antipode(const HopfAlgebraData<S>& h, const Vec<S>& u) { return apply(h.antipode, u); }

template <class S> std::vector<SparseVec<S>> sparse_columns(const Mat<S>& m) {
  std::vector<SparseVec<S>> out;
  for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(to_sparse<S>(m.col(j)));
  return out;
}

/// The flip b_j (x) b_k -> b_k (x) b_j on a sparse tensor.
template <class S> SparseVec<S> flip(const SparseVec<S>& t, int n) {
  SparseVec<S> out;
  for (const auto& [p, c] : t) out.emplace_back(pair_index(n, p % n, p / n), c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// ---------------------------------------------------------------------------
// Axioms

template <class S> CheckResult check_coassociativity(const HopfAlgebraData<S>& h) {
  CheckResult r{"coassociativity", true, {}};
  const int n = h.dim();
  SparseAccumulator<S> acc(static_cast<std::size_t>(n) * n * n);
  for (int i = 0; i < n; ++i) {
    for (const auto& [p, d] : h.comult.at(i)) {
      const int j = p / n, k = p % n;
      for (const auto& [q, e] : h.comult.at(j)) acc.add(q * n + k, d * e);
      for (const auto& [q, e] : h.comult.at(k)) acc.add((j * n) * n + q, -(d * e));
    }
    if (!acc.take().empty()) {
      r.passed = false;
      r.witness = h.labels()[static_cast<std::size_t>(i)];
      return r;
    }
  }
  return r;
}

template <class S> CheckResult check_counit(const HopfAlgebraData<S>& h) {
  CheckResult r{"counit", true, {}};
  const int n = h.dim();
  for (int i = 0; i < n; ++i) {
    Vec<S> left = zero_vec<S>(n), right = zero_vec<S>(n);
    for (const auto& [p, d] : h.comult.at(i)) {
      const int j = p / n, k = p % n;
      if (!is_zero(h.counit(j))) left(k) += d * h.counit(j);
      if (!is_zero(h.counit(k))) right(j) += d * h.counit(k);
    }
    const Vec<S> b = h.algebra.basis(i);
    if (!equal<S>(left, b) || !equal<S>(right, b)) {
      r.passed = false;
      r.witness = h.labels()[static_cast<std::size_t>(i)];
      return r;
    }
  }
  return r;
}

template <class S> CheckResult check_comult_multiplicative(const HopfAlgebraData<S>& h) {
  CheckResult r{"comultiplication is an algebra map", true, {}};
  const int n = h.dim();
  const SparseVec<S> unit2 = comultiply_sparse(h.comult, to_sparse(h.algebra.unit()));
  SparseVec<S> expected_unit;
  for (const auto& [i, c] : to_sparse(h.algebra.unit()))
    for (const auto& [j, d] : to_sparse(h.algebra.unit())) expected_unit.emplace_back(pair_index(n, i, j), c * d);
  std::sort(expected_unit.begin(), expected_unit.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  if (unit2 != expected_unit) {
    r.passed = false;
    r.witness = "Delta(1)";
    return r;
  }
  TensorSquareMultiplier<S> mul(h.algebra);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const SparseVec<S> lhs = comultiply_sparse(h.comult, h.algebra.mult().at(i, j));
      const SparseVec<S> rhs = mul(h.comult.at(i), h.comult.at(j));
      if (lhs != rhs) {
        r.passed = false;
        r.witness = "(" + h.labels()[i] + ", " + h.labels()[j] + ")";
        return r;
      }
    }
  return r;
}

template <class S> CheckResult check_counit_multiplicative(const HopfAlgebraData<S>& h) {
  CheckResult r{"counit is an algebra map", true, {}};
  const int n = h.dim();
  if (!(dot(h.counit, h.algebra.unit()) == S(1))) {
    r.passed = false;
    r.witness = "epsilon(1)";
    return r;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      S lhs(0);
      for (const auto& [k, c] : h.algebra.mult().at(i, j)) lhs += c * h.counit(k);
      if (!(lhs == h.counit(i) * h.counit(j))) {
        r.passed = false;
        r.witness = "(" + h.labels()[i] + ", " + h.labels()[j] + ")";
        return r;
      }
    }
  return r;
}

/// Both convolution identities m(S(x)id)Delta = u eps = m(id(x)S)Delta.
template <class S> CheckResult check_antipode_convolution(const HopfAlgebraData<S>& h) {
  CheckResult r{"antipode convolution identities", true, {}};
  const int n = h.dim();
  const auto cols = sparse_columns(h.antipode);
  const SparseVec<S> unit = to_sparse(h.algebra.unit());
  for (int i = 0; i < n; ++i) {
    SparseAccumulator<S> left(static_cast<std::size_t>(n)), right(static_cast<std::size_t>(n));
    for (const auto& [p, d] : h.comult.at(i)) {
      const int j = p / n, k = p % n;
      for (const auto& [m, s] : cols[static_cast<std::size_t>(j)])
        for (const auto& [o, c] : h.algebra.mult().at(m, k)) left.add(o, d * s * c);
      for (const auto& [m, s] : cols[static_cast<std::size_t>(k)])
        for (const auto& [o, c] : h.algebra.mult().at(j, m)) right.add(o, d * s * c);
    }
    for (const auto& [o, c] : unit) {
      left.add(o, -(h.counit(i) * c));
      right.add(o, -(h.counit(i) * c));
    }
    const bool l = left.take().empty(), rr = right.take().empty();
    if (!l || !rr) {
      r.passed = false;
      r.witness = std::string(l ? "m(id(x)S)Delta" : "m(S(x)id)Delta") + " at " + h.labels()[static_cast<std::size_t>(i)];
      return r;
    }
  }
  return r;
}

template <class S> CheckResult check_antipode_antimultiplicative(const HopfAlgebraData<S>& h) {
  CheckResult r{"antipode is an anti-homomorphism", true, {}};
  const int n = h.dim();
  const auto cols = sparse_columns(h.antipode);
  if (!equal<S>(apply(h.antipode, h.algebra.unit()), h.algebra.unit())) {
    r.passed = false;
    r.witness = "S(1)";
    return r;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SparseAccumulator<S> acc(static_cast<std::size_t>(n));
      for (const auto& [k, c] : h.algebra.mult().at(i, j))
        for (const auto& [m, s] : cols[static_cast<std::size_t>(k)]) acc.add(m, c * s);
      const SparseVec<S> lhs = acc.take();
      const SparseVec<S> rhs = multiply_sparse(h.algebra, cols[static_cast<std::size_t>(j)], cols[static_cast<std::size_t>(i)]);
      if (lhs != rhs) {
        r.passed = false;
        r.witness = "(" + h.labels()[i] + ", " + h.labels()[j] + ")";
        return r;
      }
    }
  return r;
}

/// Every Hopf axiom, each checked exhaustively on the basis. Failures are reported.
template <class S> std::vector<CheckResult> verify_axioms(const HopfAlgebraData<S>& h) {
  std::vector<CheckResult> out;
  out.push_back(check_associativity(h.algebra));
  out.push_back(check_unit(h.algebra));
  out.push_back(check_coassociativity(h));
  out.push_back(check_counit(h));
  out.push_back(check_comult_multiplicative(h));
  out.push_back(check_counit_multiplicative(h));
  out.push_back(check_antipode_convolution(h));
  out.push_back(check_antipode_antimultiplicative(h));
  return out;
}

// ---------------------------------------------------------------------------
// Solving for epsilon and S

/// The unique eps with (eps(x)id)Delta = id = (id(x)eps)Delta.
template <class S> Vec<S> solve_counit(const FinDimAlgebra<S>& a, const Coproduct<S>& comult) {
  const int n = a.dim();
  SparseSystem<S> sys;
  sys.unknowns = n;
  for (int i = 0; i < n; ++i) {
    std::vector<SparseVec<S>> left(static_cast<std::size_t>(n)), right(static_cast<std::size_t>(n));
    for (const auto& [p, d] : comult.at(i)) {
      left[static_cast<std::size_t>(p % n)].emplace_back(p / n, d);
      right[static_cast<std::size_t>(p / n)].emplace_back(p % n, d);
    }
    for (int k = 0; k < n; ++k) {
      const S rhs = (k == i) ? S(1) : S(0);
      for (auto* rows : {&left, &right}) {
        auto row = std::move((*rows)[static_cast<std::size_t>(k)]);
        std::map<int, S> merged;
        for (auto& [j, c] : row) merged[j] += c;
        SparseVec<S> clean;
        for (auto& [j, c] : merged)
          if (!is_zero(c)) clean.emplace_back(j, c);
        if (clean.empty() && is_zero(rhs)) continue;
        sys.add_row(std::move(clean), rhs);
      }
    }
  }
  auto x = solve_sparse(std::move(sys));
  if (!x) throw NotHopfAlgebra("no counit satisfies the counit axiom");
  return *x;
}

/// S as the convolution inverse of id: sum b_(1) S(b_(2))... solved column by column
/// from m(S(x)id)Delta = u eps as one sparse system in dim^2 unknowns S_{mj}.
template <class S> Mat<S> solve_antipode(const FinDimAlgebra<S>& a, const Coproduct<S>& comult, const Vec<S>& counit) {
  const int n = a.dim();
  SparseSystem<S> sys;
  sys.unknowns = n * n;
  const SparseVec<S> unit = to_sparse(a.unit());
  std::vector<std::map<int, S>> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (auto& r : rows) r.clear();
    for (const auto& [p, d] : comult.at(i)) {
      const int j = p / n, k = p % n;
      for (int m = 0; m < n; ++m)
        for (const auto& [o, c] : a.mult().at(m, k)) rows[static_cast<std::size_t>(o)][m * n + j] += d * c;
    }
    std::vector<S> rhs(static_cast<std::size_t>(n), S(0));
    for (const auto& [o, c] : unit) rhs[static_cast<std::size_t>(o)] = counit(i) * c;
    for (int o = 0; o < n; ++o) {
      SparseVec<S> row;
      for (auto& [u, c] : rows[static_cast<std::size_t>(o)])
        if (!is_zero(c)) row.emplace_back(u, c);
      if (row.empty() && is_zero(rhs[static_cast<std::size_t>(o)])) continue;
      sys.add_row(std::move(row), rhs[static_cast<std::size_t>(o)]);
    }
  }
  auto x = solve_sparse(std::move(sys));
  if (!x) throw NotHopfAlgebra("identity has no convolution inverse: not a Hopf algebra");
  Mat<S> s = zero_mat<S>(n, n);
  for (int m = 0; m < n; ++m)
    for (int j = 0; j < n; ++j) s(m, j) = (*x)(m * n + j);
  return s;
}

// ---------------------------------------------------------------------------
// Duality

inline std::string dual_label(const std::string& l) {
  if (l.size() > 3 && l.rfind("d[", 0) == 0 && l.back() == ']') return l.substr(2, l.size() - 3);
  return "d[" + l + "]";
}

/// H* in the dual basis: multiplication is the transpose of Delta, Delta the transpose
/// of multiplication, unit = eps, counit = unit, antipode = S^T. Characters are dropped.
template <class S> HopfAlgebraData<S> dual(const HopfAlgebraData<S>& h, std::function<std::string(const std::string&)> relabel = {}) {
  const int n = h.dim();
  StructureTensor<S> mult(n);
  for (int k = 0; k < n; ++k)
    for (const auto& [p, d] : h.comult.at(k)) mult.add(p / n, p % n, k, d);
  Coproduct<S> comult(n);
  std::vector<SparseVec<S>> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : h.algebra.mult().at(i, j)) images[static_cast<std::size_t>(k)].emplace_back(pair_index(n, i, j), c);
  comult = Coproduct<S>(n, std::move(images));
  std::vector<std::string> labels;
  for (const auto& l : h.labels()) labels.push_back(relabel ? relabel(l) : dual_label(l));
  HopfAlgebraData<S> d;
  d.algebra = FinDimAlgebra<S>(std::move(labels), std::move(mult), h.counit);
  d.comult = std::move(comult);
  d.counit = h.algebra.unit();
  d.antipode = h.antipode.transpose();
  return d;
}

// ---------------------------------------------------------------------------
// Characters and the idempotent p

template <class S> Character<S> regular_character(const FinDimAlgebra<S>& a) {
  return Character<S>{"regular", regular_traces(a), a.dim()};
}

/// chi_{H*} as an element of H: the coordinate on b_i is tr(L_{f_i}) in H*, which is
/// sum_j d_j^{ij}.
template <class S> Vec<S> dual_regular_character(const HopfAlgebraData<S>& h) {
  const int n = h.dim();
  Vec<S> chi = zero_vec<S>(n);
  for (int j = 0; j < n; ++j)
    for (const auto& [p, d] : h.comult.at(j))
      if (p % n == j) chi(p / n) += d;
  return chi;
}

struct IdempotentProperties {
  bool idempotent = false;
  bool counit_one = false;
  bool cocommutative = false;
  bool all() const { return idempotent && counit_one && cocommutative; }
};

template <class S> IdempotentProperties p_properties(const HopfAlgebraData<S>& h, const Vec<S>& p) {
  IdempotentProperties out;
  out.idempotent = equal<S>(multiply(h.algebra, p, p), p);
  out.counit_one = dot(h.counit, p) == S(1);
  const SparseVec<S> dp = comultiply_sparse(h.comult, to_sparse(p));
  out.cocommutative = flip(dp, h.dim()) == dp;
  return out;
}

/// p = chi_{H*} / dim H, re-verified to be a cocommutative idempotent with eps(p) = 1.
template <class S> Vec<S> dual_regular_idempotent(const HopfAlgebraData<S>& h) {
  Vec<S> p = dual_regular_character(h);
  const S inv = inverse(S(h.dim()));
  for (Eigen::Index i = 0; i < p.size(); ++i) p(i) *= inv;
  if (!p_properties(h, p).all()) throw std::logic_error("dual regular idempotent fails its defining properties");
  return p;
}

/// chi o S as a functional.
template <class S> Vec<S> compose_with_antipode(const HopfAlgebraData<S>& h, const Vec<S>& chi) {
  return apply<S>(h.antipode.transpose(), chi);
}

/// (chi (x) id)(Delta(x)) for x given sparse.
template <class S> Vec<S> slice_left(const HopfAlgebraData<S>& h, const Vec<S>& functional, const Vec<S>& x) {
  const int n = h.dim();
  Vec<S> out = zero_vec<S>(n);
  for (const auto& [p, c] : comultiply_sparse(h.comult, to_sparse(x))) {
    const S& f = functional(p / n);
    if (!is_zero(f)) out(p % n) += c * f;
  }
  return out;
}

/// dim(V) * chi(S(x_(1))) x_(2) for a given element x (p, or a Haar integral).
template <class S> Vec<S> projector_from(const HopfAlgebraData<S>& h, const Character<S>& chi, const Vec<S>& x) {
  if (chi.values.size() != h.dim()) throw DimensionMismatch("character length differs from the algebra dimension");
  Vec<S> out = slice_left(h, compose_with_antipode(h, chi.values), x);
  const S d(chi.module_dim);
  for (Eigen::Index i = 0; i < out.size(); ++i) out(i) *= d;
  return out;
}

/// p_hat = dim(V) chi(S(p_(1))) p_(2).
template <class S> Vec<S> character_projector(const HopfAlgebraData<S>& h, const Character<S>& chi) {
  return projector_from(h, chi, dual_regular_idempotent(h));
}

/// Character sanity: chi(1) = dim, and chi is multiplicative when dim = 1.
template <class S> CheckResult validate_character(const HopfAlgebraData<S>& h, const Character<S>& chi) {
  CheckResult r{"character " + chi.name, true, {}};
  if (chi.values.size() != h.dim()) {
    r.passed = false;
    r.witness = "length";
    return r;
  }
  if (!(dot(chi.values, h.algebra.unit()) == S(chi.module_dim))) {
    r.passed = false;
    r.witness = "chi(1) != dim";
    return r;
  }
  if (chi.module_dim == 1)
    for (int i = 0; i < h.dim(); ++i)
      for (int j = 0; j < h.dim(); ++j) {
        S lhs(0);
        for (const auto& [k, c] : h.algebra.mult().at(i, j)) lhs += c * chi.values(k);
        if (!(lhs == chi.values(i) * chi.values(j))) {
          r.passed = false;
          r.witness = "(" + h.labels()[i] + ", " + h.labels()[j] + ")";
          return r;
        }
      }
  return r;
}

// ---------------------------------------------------------------------------
// Radical, Chevalley property, quotient

/// The Jacobson radical. Over a field this is the trace-form kernel. Over a polynomial
/// ring (symbolic parameters) the radical is computed at a specialization point, lifted,
/// and then verified division-free to be a nilpotent two-sided ideal with a semisimple
/// quotient; if any verification fails an UnsupportedDomain error is raised.
template <class S> Subspace<S> radical(const FinDimAlgebra<S>& a);

template <class S> std::vector<CheckResult> chevalley_conditions(const HopfAlgebraData<S>& h, const Subspace<S>& j,
                                                                 const AlgebraQuotient<S>& q) {
  std::vector<CheckResult> out;
  const int n = h.dim();
  CheckResult eps{"eps(J) = 0", true, {}};
  CheckResult s{"S(J) in J", true, {}};
  CheckResult d{"(pi(x)pi)Delta(J) = 0", true, {}};
  const int m = q.quotient.dim();
  for (int r = 0; r < j.dim(); ++r) {
    const Vec<S> v = j.basis_vector(r);
    if (eps.passed && !is_zero(dot(h.counit, v))) {
      eps.passed = false;
      eps.witness = h.algebra.format(v);
    }
    if (s.passed && !j.contains(apply(h.antipode, v))) {
      s.passed = false;
      s.witness = h.algebra.format(v);
    }
    if (d.passed) {
      SparseAccumulator<S> acc(static_cast<std::size_t>(m) * m);
      for (const auto& [p, c] : comultiply_sparse(h.comult, to_sparse(v))) {
        const int a = p / n, b = p % n;
        for (int x = 0; x < m; ++x) {
          if (is_zero(q.projection(x, a))) continue;
          for (int y = 0; y < m; ++y)
            if (!is_zero(q.projection(y, b))) acc.add(x * m + y, c * q.projection(x, a) * q.projection(y, b));
        }
      }
      if (!acc.take().empty()) {
        d.passed = false;
        d.witness = h.algebra.format(v);
      }
    }
  }
  out.push_back(eps);
  out.push_back(s);
  out.push_back(d);
  return out;
}

template <class S> std::vector<CheckResult> chevalley_conditions(const HopfAlgebraData<S>& h) {
  const Subspace<S> j = radical(h.algebra);
  if (j.dim() == 0) return {{"eps(J) = 0", true, {}}, {"S(J) in J", true, {}}, {"(pi(x)pi)Delta(J) = 0", true, {}}};
  return chevalley_conditions(h, j, quotient_algebra(h.algebra, j));
}

/// Whether J(H) is a Hopf ideal.
template <class S> bool chevalley_check(const HopfAlgebraData<S>& h) { return all_passed(chevalley_conditions(h)); }

template <class S> struct HopfQuotient {
  HopfAlgebraData<S> quotient;
  AlgebraQuotient<S> map;
};

template <class S> AlgebraQuotient<S> trivial_quotient(const FinDimAlgebra<S>& a) {
  AlgebraQuotient<S> q;
  q.quotient = a;
  q.ideal = Subspace<S>(a.dim());
  q.projection = identity_mat<S>(a.dim());
  q.section_basis = identity_mat<S>(a.dim());
  for (int i = 0; i < a.dim(); ++i) q.representatives.push_back(i);
  return q;
}

/// H/J with the induced Hopf structure; pi is re-verified to be a Hopf map.
template <class S> HopfQuotient<S> quotient_hopf(const HopfAlgebraData<S>& h) {
  const Subspace<S> j = radical(h.algebra);
  AlgebraQuotient<S> q = j.dim() == 0 ? trivial_quotient(h.algebra) : quotient_algebra(h.algebra, j);
  if (j.dim() > 0 && !all_passed(chevalley_conditions(h, j, q)))
    throw PreconditionError("the Jacobson radical is not a Hopf ideal (no Chevalley property)");
  const int n = h.dim(), m = q.quotient.dim();
  auto pi2 = [&](const SparseVec<S>& t) {
    SparseAccumulator<S> acc(static_cast<std::size_t>(m) * m);
    for (const auto& [p, c] : t) {
      const int a = p / n, b = p % n;
      for (int x = 0; x < m; ++x) {
        if (is_zero(q.projection(x, a))) continue;
        for (int y = 0; y < m; ++y)
          if (!is_zero(q.projection(y, b))) acc.add(x * m + y, c * q.projection(x, a) * q.projection(y, b));
      }
    }
    return acc.take();
  };
  HopfQuotient<S> out;
  std::vector<SparseVec<S>> images;
  for (int k = 0; k < m; ++k) images.push_back(pi2(h.comult.at(q.representatives[static_cast<std::size_t>(k)])));
  out.quotient.algebra = q.quotient;
  out.quotient.comult = Coproduct<S>(m, std::move(images));
  out.quotient.counit = zero_vec<S>(m);
  for (int k = 0; k < m; ++k) out.quotient.counit(k) = h.counit(q.representatives[static_cast<std::size_t>(k)]);
  out.quotient.antipode = matmul<S>(matmul<S>(q.projection, h.antipode), q.section_basis);
  for (const auto& chi : h.characters) {
    Vec<S> v = zero_vec<S>(m);
    for (int k = 0; k < m; ++k) v(k) = chi.values(q.representatives[static_cast<std::size_t>(k)]);
    out.quotient.characters.push_back({chi.name, v, chi.module_dim});
  }
  for (int i = 0; i < n; ++i) {
    const Vec<S> b = h.algebra.basis(i);
    const Vec<S> pb = q.project(b);
    if (pi2(h.comult.at(i)) != comultiply_sparse(out.quotient.comult, to_sparse(pb)))
      throw std::logic_error("projection does not intertwine the comultiplications");
    if (!(dot(out.quotient.counit, pb) == h.counit(i))) throw std::logic_error("projection does not preserve the counit");
    if (!equal<S>(apply(out.quotient.antipode, pb), q.project(apply(h.antipode, b))))
      throw std::logic_error("projection does not commute with the antipode");
  }
  out.map = std::move(q);
  return out;
}

// ---------------------------------------------------------------------------
// Integrals

enum class Side { Left, Right };

/// {l : h l = eps(h) l for all h} (left) or {l : l h = eps(h) l} (right).
template <class S> Subspace<S> integral_space(const HopfAlgebraData<S>& h, Side side) {
  detail::require_field<S>("integral_space");
  const int n = h.dim();
  Mat<S> stacked = zero_mat<S>(n * n, n);
  for (int i = 0; i < n; ++i) {
    Mat<S> block = side == Side::Left ? left_regular_matrix(h.algebra, h.algebra.basis(i))
                                      : right_regular_matrix(h.algebra, h.algebra.basis(i));
    for (int k = 0; k < n; ++k) block(k, k) -= h.counit(i);
    stacked.middleRows(static_cast<Eigen::Index>(i) * n, n) = block;
  }
  return kernel_basis(stacked);
}

/// The two-sided integral with eps = 1; requires semisimplicity, which is verified.
template <class S> Vec<S> haar_integral(const HopfAlgebraData<S>& h) {
  if (!is_semisimple(h.algebra)) throw PreconditionError("haar_integral: algebra is not semisimple (eps vanishes on integrals)");
  const Subspace<S> left = integral_space(h, Side::Left);
  if (left.dim() != 1) throw std::logic_error("left integrals are not one-dimensional");
  Vec<S> l = left.basis_vector(0);
  const S e = dot(h.counit, l);
  if (is_zero(e)) throw PreconditionError("haar_integral: eps vanishes on integrals");
  const S inv = inverse(e);
  for (Eigen::Index i = 0; i < l.size(); ++i) l(i) *= inv;
  if (!integral_space(h, Side::Right).contains(l)) throw std::logic_error("left integral is not a right integral");
  if (!equal<S>(l, dual_regular_idempotent(h))) throw std::logic_error("Haar integral differs from chi_{H*}/dim H");
  return l;
}

// ---------------------------------------------------------------------------
// Hecke algebra

template <class S> struct HeckeAlgebra {
  Vec<S> lambda0;      ///< in H* coordinates
  Subspace<S> carrier{0};
  FinDimAlgebra<S> algebra;  ///< in carrier coordinates, unit = Lambda0
};

/// Lambda0 H* Lambda0 with unit Lambda0, for a given idempotent Lambda0 of H*.
template <class S> HeckeAlgebra<S> hecke_algebra(const HopfAlgebraData<S>& hstar, const Vec<S>& lambda0) {
  const int n = hstar.dim();
  if (!equal<S>(multiply(hstar.algebra, lambda0, lambda0), lambda0)) throw PreconditionError("Lambda0 is not idempotent");
  std::vector<Vec<S>> spanning;
  const SparseVec<S> l = to_sparse(lambda0);
  for (int i = 0; i < n; ++i) {
    const SparseVec<S> v = multiply_sparse(hstar.algebra, multiply_sparse(hstar.algebra, l, SparseVec<S>{{i, S(1)}}), l);
    if (!v.empty()) spanning.push_back(to_dense(v, n));
  }
  HeckeAlgebra<S> out;
  out.lambda0 = lambda0;
  out.carrier = Subspace<S>::span_of(spanning, n);
  const int m = out.carrier.dim();
  StructureTensor<S> mult(m);
  std::vector<std::string> labels;
  for (int r = 0; r < m; ++r) labels.push_back(hstar.algebra.format(out.carrier.basis_vector(r)));
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s) {
      const Vec<S> prod = multiply(hstar.algebra, out.carrier.basis_vector(r), out.carrier.basis_vector(s));
      if (!out.carrier.contains(prod)) throw std::logic_error("Hecke carrier is not closed under multiplication");
      mult.set(r, s, to_sparse<S>(out.carrier.coordinates(prod)));
    }
  out.algebra = FinDimAlgebra<S>(std::move(labels), std::move(mult), out.carrier.coordinates(lambda0));
  return out;
}

/// The Hecke algebra of dual(h): Lambda0 is the Haar integral of (H/J)*, embedded in H*
/// through the transpose of pi.
template <class S> HeckeAlgebra<S> hecke_algebra_of_predual(const HopfAlgebraData<S>& h) {
  const HopfQuotient<S> q = quotient_hopf(h);
  const HopfAlgebraData<S> hstar = dual(h);
  const HopfAlgebraData<S> qstar = dual(q.quotient);
  const Vec<S> l0 = haar_integral(qstar);
  const Vec<S> lambda0 = apply<S>(q.map.projection.transpose(), l0);
  return hecke_algebra(hstar, lambda0);
}

// ---------------------------------------------------------------------------
// Certification

/// Haar integral of a semisimple quotient. Over a field it is haar_integral; in symbolic
/// mode the quotient is checked semisimple by radical() and p = chi_{H*}/dim is used,
/// which equals the Haar integral for semisimple H.
template <class S> Vec<S> radical_free_haar(const HopfAlgebraData<S>& hq) {
  if constexpr (is_field_v<S>) {
    return haar_integral(hq);
  } else {
    if (radical(hq.algebra).dim() != 0) throw PreconditionError("quotient is not semisimple");
    return dual_regular_idempotent(hq);
  }
}

template <class S> struct NamedIdempotent {
  std::string name;
  Vec<S> value;
  Character<S> character;
};

template <class S> struct DecompositionReport {
  std::vector<std::string> names;
  std::vector<Vec<S>> idempotents;
  std::vector<bool> idempotence_flags;
  std::vector<Vec<S>> idempotence_residuals;  ///< p^2 - p
  std::vector<std::vector<bool>> pairwise_orthogonality;
  std::vector<std::vector<Vec<S>>> products;  ///< p_i p_j
  bool sum_is_unit = false;
  Vec<S> sum_residual;  ///< sum p_i - 1
  std::vector<bool> projection_flags;
  bool projections_match_quotient = false;
  bool certified = false;
};

/// Checks idempotence, all pairwise products, the sum, and that pi(p_i) is the central
/// idempotent of H/J obtained from its Haar integral by the same character formula.
template <class S> DecompositionReport<S> certify_isotypic(const HopfAlgebraData<S>& h, const std::vector<NamedIdempotent<S>>& entries) {
  DecompositionReport<S> rep;
  const std::size_t k = entries.size();
  Vec<S> sum = zero_vec<S>(h.dim());
  rep.pairwise_orthogonality.assign(k, std::vector<bool>(k, true));
  rep.products.assign(k, std::vector<Vec<S>>(k));
  for (std::size_t i = 0; i < k; ++i) {
    rep.names.push_back(entries[i].name);
    rep.idempotents.push_back(entries[i].value);
    sum += entries[i].value;
    for (std::size_t j = 0; j < k; ++j) {
      rep.products[i][j] = multiply(h.algebra, entries[i].value, entries[j].value);
      if (i != j) rep.pairwise_orthogonality[i][j] = all_zero(rep.products[i][j]);
    }
    Vec<S> res = rep.products[i][i] - entries[i].value;
    rep.idempotence_flags.push_back(all_zero(res));
    rep.idempotence_residuals.push_back(std::move(res));
  }
  rep.sum_residual = sum - h.algebra.unit();
  rep.sum_is_unit = all_zero(rep.sum_residual);

  rep.projections_match_quotient = true;
  std::optional<HopfQuotient<S>> q;
  try {
    q = quotient_hopf(h);
  } catch (const PreconditionError&) {
    q.reset();
  }
  if (!q) {
    rep.projection_flags.assign(k, false);
    rep.projections_match_quotient = false;
  } else {
    const Vec<S> ell = radical_free_haar(q->quotient);
    for (std::size_t i = 0; i < k; ++i) {
      Character<S> chi_q{entries[i].character.name, apply<S>(q->map.section_basis.transpose(), entries[i].character.values),
                         entries[i].character.module_dim};
      const Vec<S> e = projector_from(q->quotient, chi_q, ell);
      const bool ok = equal<S>(q->map.project(entries[i].value), e);
      rep.projection_flags.push_back(ok);
      rep.projections_match_quotient = rep.projections_match_quotient && ok;
    }
  }
  bool all = rep.sum_is_unit && rep.projections_match_quotient;
  for (std::size_t i = 0; i < k; ++i) {
    all = all && rep.idempotence_flags[i];
    for (std::size_t j = 0; j < k; ++j) all = all && rep.pairwise_orthogonality[i][j];
  }
  rep.certified = all;
  return rep;
}

/// The projectors for every attached character, in attachment order.
template <class S> std::vector<NamedIdempotent<S>> all_projectors(const HopfAlgebraData<S>& h) {
  const Vec<S> p = dual_regular_idempotent(h);
  std::vector<NamedIdempotent<S>> out;
  for (const auto& chi : h.characters) out.push_back({chi.name, projector_from(h, chi, p), chi});
  return out;
}

struct FactorCheck {
  bool holds = false;
  Rational factor;
};

/// chi_H == (dim H / dim H/J) chi_{H/J} o pi on every basis element.
template <class S> FactorCheck regular_character_factor_check(const HopfAlgebraData<S>& h) {
  const HopfQuotient<S> q = quotient_hopf(h);
  const Vec<S> chi_h = regular_traces(h.algebra);
  const Vec<S> chi_q = regular_traces(q.quotient.algebra);
  FactorCheck out;
  out.factor = Rational(h.dim(), q.quotient.dim());
  const S f = from_rational<S>(out.factor);
  out.holds = true;
  for (int i = 0; i < h.dim(); ++i) {
    const S rhs = f * dot(chi_q, q.map.project(h.algebra.basis(i)));
    if (!(chi_h(i) == rhs)) {
      out.holds = false;
      break;
    }
  }
  return out;
}

struct TheoremPair {
  bool lhs = false;  ///< sum of the projectors is 1
  bool rhs = false;  ///< the Hecke algebra has a unique simple module (split-sensitive)
  int hecke_dim = 0;
};

template <class S> TheoremPair hecke_theorem_check(const HopfAlgebraData<S>& h) {
  TheoremPair out;
  Vec<S> sum = zero_vec<S>(h.dim());
  for (const auto& e : all_projectors(h)) sum += e.value;
  out.lhs = equal<S>(sum, h.algebra.unit());
  const HeckeAlgebra<S> hk = hecke_algebra_of_predual(h);
  out.hecke_dim = hk.algebra.dim();
  out.rhs = has_unique_simple(hk.algebra);
  return out;
}

// ---------------------------------------------------------------------------
// Scalar maps and specialization

template <class T, class S, class F> Vec<T> map_vec(const Vec<S>& v, F&& f) {
  Vec<T> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = f(v(i));
  return out;
}

template <class T, class S, class F> Mat<T> map_mat(const Mat<S>& m, F&& f) {
  Mat<T> out(m.rows(), m.cols());
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r) out(r, c) = f(m(r, c));
  return out;
}

template <class T, class S, class F> SparseVec<T> map_sparse(const SparseVec<S>& v, F&& f) {
  SparseVec<T> out;
  for (const auto& [i, c] : v) {
    T x = f(c);
    if (!is_zero(x)) out.emplace_back(i, std::move(x));
  }
  return out;
}

template <class T, class S, class F> FinDimAlgebra<T> map_algebra(const FinDimAlgebra<S>& a, F&& f) {
  StructureTensor<T> mult(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) mult.set(i, j, map_sparse<T>(a.mult().at(i, j), f));
  return FinDimAlgebra<T>(a.labels(), std::move(mult), map_vec<T>(a.unit(), f));
}

template <class T, class S, class F> HopfAlgebraData<T> map_hopf(const HopfAlgebraData<S>& h, F&& f) {
  HopfAlgebraData<T> out;
  out.algebra = map_algebra<T>(h.algebra, f);
  std::vector<SparseVec<T>> images;
  for (int i = 0; i < h.dim(); ++i) images.push_back(map_sparse<T>(h.comult.at(i), f));
  out.comult = Coproduct<T>(h.dim(), std::move(images));
  out.counit = map_vec<T>(h.counit, f);
  out.antipode = map_mat<T>(h.antipode, f);
  for (const auto& chi : h.characters) out.characters.push_back({chi.name, map_vec<T>(chi.values, f), chi.module_dim});
  return out;
}

inline auto specializer(std::vector<Rational> point) {
  return [pt = std::move(point)](const MultiPoly& p) { return p.evaluate(pt); };
}

inline auto embed_rational() {
  return [](const Rational& q) { return MultiPoly(q); };
}

/// Point used to lift radicals from the symbolic algebra; a generic-looking value with
/// all pairwise differences nonzero.
inline std::vector<Rational> default_lift_point() { return {Rational(3, 7), Rational(-5, 2), Rational(11, 3)}; }

template <class S> Subspace<S> radical(const FinDimAlgebra<S>& a) {
  if constexpr (is_field_v<S>) {
    return jacobson_radical(a);
  } else {
    static_assert(std::is_same_v<S, MultiPoly>, "radical: unsupported ring");
    const std::vector<Rational> pt = default_lift_point();
    const FinDimAlgebra<Rational> num = map_algebra<Rational>(a, specializer(pt));
    const Subspace<Rational> jn = jacobson_radical(num);
    std::vector<Vec<MultiPoly>> lifted;
    for (int r = 0; r < jn.dim(); ++r) lifted.push_back(map_vec<MultiPoly>(Vec<Rational>(jn.basis_vector(r)), embed_rational()));
    Subspace<MultiPoly> j = Subspace<MultiPoly>::span_of(lifted, a.dim());
    if (!is_two_sided_ideal(a, j)) throw UnsupportedDomain("lifted radical is not an ideal for generic parameters");
    if (!is_nilpotent_ideal(a, j)) throw UnsupportedDomain("lifted radical is not nilpotent for generic parameters");
    const FinDimAlgebra<MultiPoly> qa = j.dim() == 0 ? a : quotient_algebra(a, j).quotient;
    // The quotient must have constant structure constants to be checked semisimple.
    const auto to_q = [](const MultiPoly& p) {
      if (!p.is_constant()) throw UnsupportedDomain("semisimple quotient depends on the parameters");
      return p.constant_value();
    };
    if (!is_semisimple(map_algebra<Rational>(qa, to_q))) throw UnsupportedDomain("lifted quotient is not semisimple");
    return j;
  }
}

}  // namespace isotypic
