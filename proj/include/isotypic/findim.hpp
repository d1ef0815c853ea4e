#pragma once

// Finite-dimensional associative algebras given by structure constants.

#include "isotypic/lincore.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace isotypic {

/// Outcome of one exhaustive check; `witness` names the first offending input.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::string witness;
};

inline bool all_passed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

template <class S> std::string vec_to_string(const Vec<S>& v, const std::vector<std::string>& labels) {
  std::ostringstream os;
  bool first = true;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (is_zero(v(i))) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << to_string(v(i)) << ")*" << labels[static_cast<std::size_t>(i)];
  }
  if (first) os << '0';
  return os.str();
}

template <class S> class FinDimAlgebra {
 public:
  FinDimAlgebra() = default;
  FinDimAlgebra(std::vector<std::string> labels, StructureTensor<S> mult, Vec<S> unit)
      : labels_(std::move(labels)), mult_(std::move(mult)), unit_(std::move(unit)) {
    const int n = static_cast<int>(labels_.size());
    if (n <= 0) throw std::invalid_argument("algebra dimension must be positive");
    if (mult_.left_dim() != n || mult_.right_dim() != n || mult_.out_dim() != n || unit_.size() != n)
      throw DimensionMismatch("algebra data does not match the number of basis labels");
  }

  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const StructureTensor<S>& mult() const { return mult_; }
  const Vec<S>& unit() const { return unit_; }
  Vec<S> basis(int i) const { return basis_vec<S>(dim(), i); }
  std::string format(const Vec<S>& v) const { return vec_to_string(v, labels_); }

 private:
  std::vector<std::string> labels_;
  StructureTensor<S> mult_;
  Vec<S> unit_;
};

template <class S> Vec<S> multiply(const FinDimAlgebra<S>& a, const Vec<S>& u, const Vec<S>& v) {
  return tensor_contract(a.mult(), u, v);
}

/// Product of two sparse elements.
template <class S> SparseVec<S> multiply_sparse(const FinDimAlgebra<S>& a, const SparseVec<S>& u, const SparseVec<S>& v) {
  SparseAccumulator<S> acc(static_cast<std::size_t>(a.dim()));
  for (const auto& [i, x] : u)
    for (const auto& [j, y] : v) {
      const auto& e = a.mult().at(i, j);
      if (e.empty()) continue;
      const S w = x * y;
      for (const auto& [k, c] : e) acc.add(k, w * c);
    }
  return acc.take();
}

template <class S> Mat<S> left_regular_matrix(const FinDimAlgebra<S>& a, const Vec<S>& u) {
  const int n = a.dim();
  Mat<S> m = zero_mat<S>(n, n);
  for (int i = 0; i < n; ++i) {
    if (is_zero(u(i))) continue;
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : a.mult().at(i, j)) m(k, j) += u(i) * c;
  }
  return m;
}

template <class S> Mat<S> right_regular_matrix(const FinDimAlgebra<S>& a, const Vec<S>& u) {
  const int n = a.dim();
  Mat<S> m = zero_mat<S>(n, n);
  for (int i = 0; i < n; ++i) {
    if (is_zero(u(i))) continue;
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : a.mult().at(j, i)) m(k, j) += u(i) * c;
  }
  return m;
}

/// tr(L_{b_k}) for every basis element, read directly off the structure constants.
template <class S> Vec<S> regular_traces(const FinDimAlgebra<S>& a) {
  const int n = a.dim();
  Vec<S> t = zero_vec<S>(n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (const auto& [m, c] : a.mult().at(k, j))
        if (m == j) t(k) += c;
  return t;
}

/// T[i][j] = tr(L_{b_i b_j}).
template <class S> Mat<S> trace_form(const FinDimAlgebra<S>& a) {
  const int n = a.dim();
  const Vec<S> t = regular_traces(a);
  Mat<S> m = zero_mat<S>(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : a.mult().at(i, j))
        if (!is_zero(t(k))) m(i, j) += c * t(k);
  return m;
}

// ---------------------------------------------------------------------------
// Exhaustive structural checks

template <class S> CheckResult check_associativity(const FinDimAlgebra<S>& a) {
  CheckResult r{"associativity", true, {}};
  const int n = a.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& ij = a.mult().at(i, j);
      for (int k = 0; k < n; ++k) {
        SparseAccumulator<S> acc(static_cast<std::size_t>(n));
        for (const auto& [m, c] : ij)
          for (const auto& [o, d] : a.mult().at(m, k)) acc.add(o, c * d);
        for (const auto& [m, c] : a.mult().at(j, k))
          for (const auto& [o, d] : a.mult().at(i, m)) acc.add(o, -(c * d));
        if (!acc.take().empty()) {
          r.passed = false;
          r.witness = "(" + a.labels()[i] + ")(" + a.labels()[j] + ")(" + a.labels()[k] + ")";
          return r;
        }
      }
    }
  return r;
}

template <class S> CheckResult check_unit(const FinDimAlgebra<S>& a) {
  CheckResult r{"unit", true, {}};
  for (int i = 0; i < a.dim(); ++i) {
    const Vec<S> b = a.basis(i);
    if (!equal<S>(multiply(a, a.unit(), b), b) || !equal<S>(multiply(a, b, a.unit()), b)) {
      r.passed = false;
      r.witness = a.labels()[static_cast<std::size_t>(i)];
      return r;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Ideals, radical, quotients

/// Whether s is closed under left and right multiplication by every basis element.
template <class S> bool is_two_sided_ideal(const FinDimAlgebra<S>& a, const Subspace<S>& s) {
  for (int r = 0; r < s.dim(); ++r) {
    const Vec<S> v = s.basis_vector(r);
    for (int i = 0; i < a.dim(); ++i) {
      const Vec<S> b = a.basis(i);
      if (!s.contains(multiply(a, b, v)) || !s.contains(multiply(a, v, b))) return false;
    }
  }
  return true;
}

/// Verifies N^k = 0 for some k <= dim(a) by iterating N^{k+1} = N * N^k on bases.
template <class S> bool is_nilpotent_ideal(const FinDimAlgebra<S>& a, const Subspace<S>& s) {
  if (s.dim() == 0) return true;
  Subspace<S> power = s;
  for (int k = 1; k <= a.dim(); ++k) {
    if (power.dim() == 0) return true;
    std::vector<Vec<S>> products;
    for (int i = 0; i < s.dim(); ++i)
      for (int j = 0; j < power.dim(); ++j) {
        Vec<S> p = multiply(a, s.basis_vector(i), power.basis_vector(j));
        if (!all_zero(p)) products.push_back(std::move(p));
      }
    power = Subspace<S>::span_of(products, a.dim());
  }
  return power.dim() == 0;
}

/// J(a) as the kernel of the trace form, which is exact in characteristic zero.
/// The result is re-verified to be a nilpotent two-sided ideal.
template <class S> Subspace<S> jacobson_radical(const FinDimAlgebra<S>& a) {
  detail::require_field<S>("jacobson_radical");
  Subspace<S> j = kernel_basis(trace_form(a));
  if (!is_two_sided_ideal(a, j)) throw std::logic_error("trace-form kernel is not a two-sided ideal");
  if (!is_nilpotent_ideal(a, j)) throw std::logic_error("trace-form kernel is not nilpotent");
  return j;
}

/// a / ideal. The quotient basis is the images of the standard basis vectors in the
/// non-pivot columns of the ideal's echelon basis.
template <class S> struct AlgebraQuotient {
  FinDimAlgebra<S> quotient;
  Subspace<S> ideal{0};
  Mat<S> projection;     ///< dim(quotient) x dim(source)
  Mat<S> section_basis;  ///< dim(source) x dim(quotient), a linear splitting
  std::vector<int> representatives;

  Vec<S> project(const Vec<S>& v) const { return apply(projection, v); }
  Vec<S> lift(const Vec<S>& q) const { return apply(section_basis, q); }
};

template <class S> AlgebraQuotient<S> quotient_algebra(const FinDimAlgebra<S>& a, const Subspace<S>& ideal) {
  if (ideal.ambient_dim() != a.dim()) throw DimensionMismatch("quotient_algebra: ideal lives in another space");
  if (!is_two_sided_ideal(a, ideal)) throw std::invalid_argument("quotient_algebra: subspace is not a two-sided ideal");
  const int n = a.dim();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int p : ideal.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<int> reps;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i)
    if (!is_pivot[static_cast<std::size_t>(i)]) {
      slot[static_cast<std::size_t>(i)] = static_cast<int>(reps.size());
      reps.push_back(i);
    }
  const int q = static_cast<int>(reps.size());
  if (q == 0) throw std::invalid_argument("quotient_algebra: the ideal is the whole algebra");

  AlgebraQuotient<S> out;
  out.ideal = ideal;
  out.representatives = reps;
  out.projection = zero_mat<S>(q, n);
  for (int j = 0; j < n; ++j) {
    const Vec<S> r = ideal.residual(a.basis(j));
    for (int i = 0; i < n; ++i)
      if (!is_zero(r(i))) out.projection(slot[static_cast<std::size_t>(i)], j) = r(i);
  }
  out.section_basis = zero_mat<S>(n, q);
  for (int k = 0; k < q; ++k) out.section_basis(reps[static_cast<std::size_t>(k)], k) = S(1);

  StructureTensor<S> mult(q);
  std::vector<std::string> labels;
  for (int k = 0; k < q; ++k) labels.push_back(a.labels()[static_cast<std::size_t>(reps[static_cast<std::size_t>(k)])]);
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) {
      const SparseVec<S> prod = multiply_sparse(a, SparseVec<S>{{reps[x], S(1)}}, SparseVec<S>{{reps[y], S(1)}});
      const Vec<S> img = out.project(to_dense(prod, n));
      mult.set(x, y, to_sparse(img));
    }
  out.quotient = FinDimAlgebra<S>(std::move(labels), std::move(mult), out.project(a.unit()));

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec<S> lhs = out.project(multiply(a, a.basis(i), a.basis(j)));
      const Vec<S> rhs = multiply(out.quotient, out.project(a.basis(i)), out.project(a.basis(j)));
      if (!equal<S>(lhs, rhs)) throw std::logic_error("quotient projection is not multiplicative");
    }
  return out;
}

template <class S> bool is_central(const FinDimAlgebra<S>& a, const Vec<S>& z) {
  for (int j = 0; j < a.dim(); ++j)
    if (!equal<S>(multiply(a, z, a.basis(j)), multiply(a, a.basis(j), z))) return false;
  return true;
}

/// Z(a) = {z : z b = b z for every basis b}.
template <class S> Subspace<S> center(const FinDimAlgebra<S>& a) {
  detail::require_field<S>("center");
  const int n = a.dim();
  Mat<S> stacked = zero_mat<S>(n * n, n);
  for (int j = 0; j < n; ++j) {
    const Mat<S> d = right_regular_matrix(a, a.basis(j)) - left_regular_matrix(a, a.basis(j));
    stacked.middleRows(static_cast<Eigen::Index>(j) * n, n) = d;
  }
  Subspace<S> z = kernel_basis(stacked);
  for (int r = 0; r < z.dim(); ++r)
    if (!is_central(a, z.basis_vector(r))) throw std::logic_error("center: kernel element fails to commute");
  return z;
}

template <class S> bool is_semisimple(const FinDimAlgebra<S>& a) { return jacobson_radical(a).dim() == 0; }

/// dim Z(a/J(a)) == 1. Over a splitting field this is exactly "one simple module up to
/// isomorphism"; over a smaller field it is sufficient but not necessary, so callers
/// label the verdict split-sensitive.
template <class S> bool has_unique_simple(const FinDimAlgebra<S>& a) {
  const Subspace<S> j = jacobson_radical(a);
  if (j.dim() == 0) return center(a).dim() == 1;
  return center(quotient_algebra(a, j).quotient).dim() == 1;
}

// ---------------------------------------------------------------------------
// Tensor squares

/// Index of b_i (x) b_j in the tensor square.
inline int pair_index(int n, int i, int j) { return i * n + j; }

/// a (x) a with (w(x)x)(y(x)z) = wy (x) xz. Materialises dim^4 table slots, so it is
/// meant for small algebras; large ones use tensor_multiply on sparse vectors.
template <class S> FinDimAlgebra<S> tensor_square_algebra(const FinDimAlgebra<S>& a) {
  const int n = a.dim(), nn = n * n;
  StructureTensor<S> mult(nn);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) labels.push_back(a.labels()[i] + "(x)" + a.labels()[j]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          for (const auto& [p, c] : a.mult().at(i, k))
            for (const auto& [q, d] : a.mult().at(j, l))
              mult.add(pair_index(n, i, j), pair_index(n, k, l), pair_index(n, p, q), c * d);
  Vec<S> unit = zero_vec<S>(nn);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!is_zero(a.unit()(i)) && !is_zero(a.unit()(j))) unit(pair_index(n, i, j)) = a.unit()(i) * a.unit()(j);
  return FinDimAlgebra<S>(std::move(labels), std::move(mult), std::move(unit));
}

/// For each i, the j with b_i b_j != 0.
template <class S> std::vector<std::vector<int>> nonzero_right_factors(const FinDimAlgebra<S>& a) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (!a.mult().at(i, j).empty()) out[static_cast<std::size_t>(i)].push_back(j);
  return out;
}

/// Product in a (x) a of two sparse tensors over pair indices, without building the
/// tensor-square table.
template <class S> class TensorSquareMultiplier {
 public:
  explicit TensorSquareMultiplier(const FinDimAlgebra<S>& a)
      : a_(&a), right_(nonzero_right_factors(a)), acc_(static_cast<std::size_t>(a.dim()) * a.dim()) {}

  SparseVec<S> operator()(const SparseVec<S>& x, const SparseVec<S>& y) {
    const int n = a_->dim();
    std::vector<std::vector<std::pair<int, const S*>>> by_left(static_cast<std::size_t>(n));
    for (const auto& [idx, c] : y) by_left[static_cast<std::size_t>(idx / n)].emplace_back(idx % n, &c);
    for (const auto& [idx, c] : x) {
      const int i1 = idx / n, i2 = idx % n;
      for (int j1 : right_[static_cast<std::size_t>(i1)]) {
        const auto& ys = by_left[static_cast<std::size_t>(j1)];
        if (ys.empty()) continue;
        const auto& p1 = a_->mult().at(i1, j1);
        for (const auto& [j2, d] : ys) {
          const auto& p2 = a_->mult().at(i2, j2);
          if (p2.empty()) continue;
          const S w = c * *d;
          for (const auto& [k1, e1] : p1) {
            const S w1 = w * e1;
            for (const auto& [k2, e2] : p2) acc_.add(pair_index(n, k1, k2), w1 * e2);
          }
        }
      }
    }
    return acc_.take();
  }

 private:
  const FinDimAlgebra<S>* a_;
  std::vector<std::vector<int>> right_;
  SparseAccumulator<S> acc_;
};

}  // namespace isotypic
