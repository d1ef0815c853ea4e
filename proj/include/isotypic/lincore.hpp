#pragma once

// Exact dense linear algebra over an ExactScalar, plus the sparse structure tensors
// that carry multiplication and comultiplication tables.

#include "isotypic/scalar.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace isotypic {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class S> using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S> using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
/// Sorted (index, nonzero coefficient) pairs.
template <class S> using SparseVec = std::vector<std::pair<int, S>>;

template <class S> Vec<S> zero_vec(int n) { return Vec<S>::Constant(n, S(0)); }
template <class S> Mat<S> zero_mat(int r, int c) { return Mat<S>::Constant(r, c, S(0)); }
template <class S> Mat<S> identity_mat(int n) {
  Mat<S> m = zero_mat<S>(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = S(1);
  return m;
}
template <class S> Vec<S> basis_vec(int n, int i) {
  Vec<S> v = zero_vec<S>(n);
  v(i) = S(1);
  return v;
}

template <class Derived> bool all_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (!is_zero(m(r, c))) return false;
  return true;
}

template <class S> bool equal(const Vec<S>& a, const Vec<S>& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (!(a(i) == b(i))) return false;
  return true;
}

template <class S> bool equal(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index c = 0; c < a.cols(); ++c)
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      if (!(a(r, c) == b(r, c))) return false;
  return true;
}

template <class S> SparseVec<S> to_sparse(const Vec<S>& v) {
  SparseVec<S> out;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) out.emplace_back(static_cast<int>(i), v(i));
  return out;
}

template <class S> Vec<S> to_dense(const SparseVec<S>& v, int n) {
  Vec<S> out = zero_vec<S>(n);
  for (const auto& [i, c] : v) out(i) += c;
  return out;
}

/// Exact matrix-vector product that skips zero entries.
template <class S> Vec<S> apply(const Mat<S>& m, const Vec<S>& v) {
  if (m.cols() != v.size()) throw DimensionMismatch("apply: matrix/vector size mismatch");
  Vec<S> out = zero_vec<S>(static_cast<int>(m.rows()));
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    if (is_zero(v(c))) continue;
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (!is_zero(m(r, c))) out(r) += m(r, c) * v(c);
  }
  return out;
}

template <class S> Mat<S> matmul(const Mat<S>& a, const Mat<S>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matmul: inner dimensions differ");
  Mat<S> out = zero_mat<S>(static_cast<int>(a.rows()), static_cast<int>(b.cols()));
  for (Eigen::Index j = 0; j < b.cols(); ++j)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (is_zero(b(k, j))) continue;
      for (Eigen::Index i = 0; i < a.rows(); ++i)
        if (!is_zero(a(i, k))) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <class S> S trace(const Mat<S>& m) {
  S t(0);
  for (Eigen::Index i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

template <class S> S dot(const Vec<S>& a, const Vec<S>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
  S t(0);
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (!is_zero(a(i)) && !is_zero(b(i))) t += a(i) * b(i);
  return t;
}

// ---------------------------------------------------------------------------
// Elimination

/// Reduced row echelon form together with its pivot columns.
template <class S> struct Echelon {
  Mat<S> rref;              ///< nonzero rows only
  std::vector<int> pivots;  ///< pivot column of each row
  int rank() const { return static_cast<int>(pivots.size()); }
};

/// Gauss-Jordan elimination with the first admissible pivot in each column.
///
/// Over a field every nonzero entry is admissible. Over a polynomial ring only
/// nonzero constants are; if a column holds nonzero entries but none of them is a
/// constant, the elimination throws UnsupportedDomain instead of guessing.
template <class S> Echelon<S> unit_pivot_echelon(Mat<S> m) {
  const int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    bool saw_nonzero = false;
    for (int i = r; i < rows; ++i) {
      if (is_zero(m(i, c))) continue;
      saw_nonzero = true;
      if (is_unit(m(i, c))) {
        piv = i;
        break;
      }
    }
    if (piv < 0) {
      if (saw_nonzero) throw UnsupportedDomain("elimination needs a non-constant pivot");
      continue;
    }
    if (piv != r) m.row(piv).swap(m.row(r));
    const S inv = inverse(m(r, c));
    for (int j = c; j < cols; ++j)
      if (!is_zero(m(r, j))) m(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const S f = m(i, c);
      for (int j = c; j < cols; ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Echelon<S> e;
  e.rref = m.topRows(r);
  e.pivots = std::move(pivots);
  return e;
}

namespace detail {
template <class S> void require_field(const char* op) {
  if constexpr (!is_field_v<S>) throw UnsupportedDomain(std::string(op) + " requires a field domain");
}
}  // namespace detail

template <class S> Echelon<S> echelon(const Mat<S>& m) {
  detail::require_field<S>("echelon");
  return unit_pivot_echelon(m);
}

template <class S> int rank(const Mat<S>& m) { return echelon(m).rank(); }

/// Linear subspace of S^n held as the reduced echelon basis of its spanning rows.
template <class S> class Subspace {
 public:
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim), basis_(zero_mat<S>(0, ambient_dim)) {}

  /// Span of the rows of `rows`. Uses unit pivots, so it also works over polynomial
  /// rings whenever the spanning set admits constant pivots.
  static Subspace span_of_rows(const Mat<S>& rows) {
    Subspace s(static_cast<int>(rows.cols()));
    auto e = unit_pivot_echelon(rows);
    s.basis_ = std::move(e.rref);
    s.pivots_ = std::move(e.pivots);
    return s;
  }
  static Subspace span_of(const std::vector<Vec<S>>& vectors, int ambient_dim) {
    Mat<S> rows = zero_mat<S>(static_cast<int>(vectors.size()), ambient_dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != ambient_dim) throw DimensionMismatch("span_of: vector length");
      rows.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
    }
    return span_of_rows(rows);
  }

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.rows()); }
  const Mat<S>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  Vec<S> basis_vector(int i) const { return basis_.row(i).transpose(); }
  std::vector<Vec<S>> basis_vectors() const {
    std::vector<Vec<S>> out;
    for (int i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
    return out;
  }

  /// v minus its projection along the echelon basis; zero iff v is in the span.
  Vec<S> residual(const Vec<S>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("subspace: ambient dimension mismatch");
    Vec<S> r = v;
    for (int i = 0; i < dim(); ++i) {
      const S f = r(pivots_[static_cast<std::size_t>(i)]);
      if (is_zero(f)) continue;
      for (int j = 0; j < ambient_; ++j)
        if (!is_zero(basis_(i, j))) r(j) -= f * basis_(i, j);
    }
    return r;
  }
  bool contains(const Vec<S>& v) const { return all_zero(residual(v)); }
  /// Coordinates with respect to the echelon basis; meaningful when contains(v).
  Vec<S> coordinates(const Vec<S>& v) const {
    Vec<S> c = zero_vec<S>(dim());
    for (int i = 0; i < dim(); ++i) c(i) = v(pivots_[static_cast<std::size_t>(i)]);
    return c;
  }
  bool is_echelon_stable() const {
    auto again = unit_pivot_echelon(basis_);
    return again.pivots == pivots_ && equal<S>(again.rref, basis_);
  }

 private:
  int ambient_;
  Mat<S> basis_;
  std::vector<int> pivots_;
};

template <class S> bool membership(const Subspace<S>& s, const Vec<S>& v) { return s.contains(v); }

/// Basis of {v : m v = 0}.
template <class S> Subspace<S> kernel_basis(const Mat<S>& m) {
  detail::require_field<S>("kernel_basis");
  const int cols = static_cast<int>(m.cols());
  const auto e = unit_pivot_echelon(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vec<S>> vectors;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vec<S> v = zero_vec<S>(cols);
    v(f) = S(1);
    for (int i = 0; i < e.rank(); ++i) v(e.pivots[static_cast<std::size_t>(i)]) = -e.rref(i, f);
    vectors.push_back(std::move(v));
  }
  return Subspace<S>::span_of(vectors, cols);
}

namespace detail {
template <class S> std::optional<Vec<S>> solve_with_echelon(const Mat<S>& m, const Vec<S>& b) {
  if (m.rows() != b.size()) throw DimensionMismatch("solve_linear: rhs length differs from row count");
  const int cols = static_cast<int>(m.cols());
  Mat<S> aug(m.rows(), cols + 1);
  aug.leftCols(cols) = m;
  aug.col(cols) = b;
  const auto e = unit_pivot_echelon(aug);
  Vec<S> x = zero_vec<S>(cols);
  for (int i = 0; i < e.rank(); ++i) {
    const int p = e.pivots[static_cast<std::size_t>(i)];
    if (p == cols) return std::nullopt;
    x(p) = e.rref(i, cols);
  }
  return x;
}
}  // namespace detail

/// Some x with m x = b, or nullopt when the system is inconsistent.
template <class S> std::optional<Vec<S>> solve_linear(const Mat<S>& m, const Vec<S>& b) {
  detail::require_field<S>("solve_linear");
  return detail::solve_with_echelon(m, b);
}

// ---------------------------------------------------------------------------
// Sparse systems

/// A sparse linear system A x = b. Rows are SparseVec over the unknowns.
template <class S> struct SparseSystem {
  int unknowns = 0;
  std::vector<SparseVec<S>> rows;
  std::vector<S> rhs;

  void add_row(SparseVec<S> row, S value) {
    rows.push_back(std::move(row));
    rhs.push_back(std::move(value));
  }
};

namespace detail {

template <class S> void axpy_sparse(SparseVec<S>& y, const S& f, const SparseVec<S>& x) {
  // y -= f * x
  SparseVec<S> out;
  out.reserve(y.size() + x.size());
  auto i = y.begin();
  auto j = x.begin();
  while (i != y.end() || j != x.end()) {
    if (j == x.end() || (i != y.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == y.end() || j->first < i->first) {
      out.emplace_back(j->first, -(f * j->second));
      ++j;
    } else {
      S c = i->second - f * j->second;
      if (!is_zero(c)) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

template <class S> const S* find_entry(const SparseVec<S>& v, int idx) {
  auto it = std::lower_bound(v.begin(), v.end(), idx, [](const auto& p, int k) { return p.first < k; });
  return (it != v.end() && it->first == idx) ? &it->second : nullptr;
}

}  // namespace detail

/// Solves a sparse system by Gaussian elimination with a Markowitz-style pivot order
/// (shortest row first) followed by back substitution. Free unknowns are set to 0.
/// Pivots must be units, so polynomial-ring systems are solvable exactly when constant
/// pivots suffice; otherwise UnsupportedDomain is thrown. Returns nullopt when the
/// system is inconsistent.
template <class S> std::optional<Vec<S>> solve_sparse(SparseSystem<S> sys) {
  const int n = sys.unknowns;
  const int rhs_col = n;
  const std::size_t m = sys.rows.size();
  // Fold the right-hand side in as column n.
  for (std::size_t r = 0; r < m; ++r) {
    auto& row = sys.rows[r];
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [c, v] : row)
      if (c < 0 || c >= n) throw DimensionMismatch("solve_sparse: unknown index out of range");
    std::erase_if(row, [](const auto& e) { return is_zero(e.second); });
    if (!is_zero(sys.rhs[r])) row.emplace_back(rhs_col, sys.rhs[r]);
  }
  std::vector<std::vector<int>> col_rows(static_cast<std::size_t>(n) + 1);
  for (std::size_t r = 0; r < m; ++r)
    for (const auto& e : sys.rows[r]) col_rows[static_cast<std::size_t>(e.first)].push_back(static_cast<int>(r));

  std::vector<char> active(m, 1);
  std::vector<std::pair<int, int>> order;  // (row, pivot column)
  auto unknown_count = [&](const SparseVec<S>& row) {
    return static_cast<int>(row.size()) - ((!row.empty() && row.back().first == rhs_col) ? 1 : 0);
  };

  std::size_t remaining = m;
  while (remaining > 0) {
    int best = -1, best_len = 0, best_col = -1;
    bool any_nonunit = false;
    for (std::size_t r = 0; r < m; ++r) {
      if (!active[r]) continue;
      const auto& row = sys.rows[r];
      const int len = unknown_count(row);
      if (len == 0) {
        if (!row.empty()) return std::nullopt;  // 0 = nonzero
        active[r] = 0;
        --remaining;
        continue;
      }
      if (best >= 0 && len >= best_len) continue;
      int col = -1;
      std::size_t col_len = 0;
      for (int k = 0; k < len; ++k) {
        const auto& [c, v] = row[static_cast<std::size_t>(k)];
        if (!is_unit(v)) continue;
        const std::size_t cl = col_rows[static_cast<std::size_t>(c)].size();
        if (col < 0 || cl < col_len) {
          col = c;
          col_len = cl;
        }
      }
      if (col < 0) {
        any_nonunit = true;
        continue;
      }
      best = static_cast<int>(r);
      best_len = len;
      best_col = col;
      if (len == 1) break;
    }
    if (best < 0) {
      if (remaining == 0) break;
      if (any_nonunit) throw UnsupportedDomain("sparse elimination needs a non-constant pivot");
      break;
    }
    auto& prow = sys.rows[static_cast<std::size_t>(best)];
    const S inv = inverse(*detail::find_entry(prow, best_col));
    for (auto& e : prow) e.second *= inv;
    active[static_cast<std::size_t>(best)] = 0;
    --remaining;
    order.emplace_back(best, best_col);
    auto& users = col_rows[static_cast<std::size_t>(best_col)];
    std::sort(users.begin(), users.end());
    users.erase(std::unique(users.begin(), users.end()), users.end());
    for (int r : users) {
      if (!active[static_cast<std::size_t>(r)]) continue;
      auto& row = sys.rows[static_cast<std::size_t>(r)];
      const S* f = detail::find_entry(row, best_col);
      if (!f) continue;
      const S factor = *f;
      const std::size_t before = row.size();
      detail::axpy_sparse(row, factor, prow);
      if (row.size() != before || true) {
        for (const auto& e : prow) {
          if (e.first == best_col) continue;
          if (detail::find_entry(row, e.first)) col_rows[static_cast<std::size_t>(e.first)].push_back(r);
        }
      }
    }
    users.clear();
  }

  Vec<S> x = zero_vec<S>(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto& row = sys.rows[static_cast<std::size_t>(it->first)];
    S value(0);
    for (const auto& [c, v] : row) {
      if (c == rhs_col)
        value += v;
      else if (c != it->second && !is_zero(x(c)))
        value -= v * x(c);
    }
    x(it->second) = value;
  }
  return x;
}

// ---------------------------------------------------------------------------
// Structure tensors

/// Bilinear map S^left x S^right -> S^out given by c_{ij}^k, stored sparsely per (i, j).
template <class S> class StructureTensor {
 public:
  StructureTensor() = default;
  StructureTensor(int left, int right, int out)
      : left_(left), right_(right), out_(out), table_(static_cast<std::size_t>(left) * right) {}
  explicit StructureTensor(int n) : StructureTensor(n, n, n) {}

  int left_dim() const { return left_; }
  int right_dim() const { return right_; }
  int out_dim() const { return out_; }

  const SparseVec<S>& at(int i, int j) const { return table_[index(i, j)]; }
  /// Replaces the product of basis i and basis j.
  void set(int i, int j, SparseVec<S> value) {
    std::sort(value.begin(), value.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::erase_if(value, [](const auto& e) { return is_zero(e.second); });
    table_[index(i, j)] = std::move(value);
  }
  /// Accumulates c into c_{ij}^k.
  void add(int i, int j, int k, const S& c) {
    if (k < 0 || k >= out_) throw DimensionMismatch("structure tensor: output index out of range");
    auto& v = table_[index(i, j)];
    auto it = std::lower_bound(v.begin(), v.end(), k, [](const auto& p, int q) { return p.first < q; });
    if (it != v.end() && it->first == k) {
      it->second += c;
      if (is_zero(it->second)) v.erase(it);
    } else if (!is_zero(c)) {
      v.insert(it, {k, c});
    }
  }

  std::vector<std::tuple<int, int, int, S>> quadruples() const {
    std::vector<std::tuple<int, int, int, S>> out;
    for (int i = 0; i < left_; ++i)
      for (int j = 0; j < right_; ++j)
        for (const auto& [k, c] : at(i, j)) out.emplace_back(i, j, k, c);
    return out;
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& v : table_) n += v.size();
    return n;
  }

  friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
    return a.left_ == b.left_ && a.right_ == b.right_ && a.out_ == b.out_ && a.table_ == b.table_;
  }

 private:
  std::size_t index(int i, int j) const {
    if (i < 0 || i >= left_ || j < 0 || j >= right_) throw DimensionMismatch("structure tensor index out of range");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(right_) + static_cast<std::size_t>(j);
  }

  int left_ = 0, right_ = 0, out_ = 0;
  std::vector<SparseVec<S>> table_;
};

/// Sum over i, j of u_i v_j c_{ij}^k.
template <class S> Vec<S> tensor_contract(const StructureTensor<S>& t, const Vec<S>& u, const Vec<S>& v) {
  if (u.size() != t.left_dim() || v.size() != t.right_dim())
    throw DimensionMismatch("tensor_contract: operand dimensions do not match the tensor");
  Vec<S> out = zero_vec<S>(t.out_dim());
  for (int i = 0; i < t.left_dim(); ++i) {
    if (is_zero(u(i))) continue;
    for (int j = 0; j < t.right_dim(); ++j) {
      if (is_zero(v(j))) continue;
      const auto& e = t.at(i, j);
      if (e.empty()) continue;
      const S w = u(i) * v(j);
      for (const auto& [k, c] : e) out(k) += w * c;
    }
  }
  return out;
}

/// Dense accumulator with a touched list, for repeated sparse sums of length n.
template <class S> class SparseAccumulator {
 public:
  explicit SparseAccumulator(std::size_t n) : values_(n, S(0)), seen_(n, 0) {}
  void add(int k, const S& c) {
    const auto u = static_cast<std::size_t>(k);
    if (!seen_[u]) {
      seen_[u] = 1;
      touched_.push_back(k);
    }
    values_[u] += c;
  }
  /// Moves out the nonzero entries in index order and resets the accumulator.
  SparseVec<S> take() {
    std::sort(touched_.begin(), touched_.end());
    SparseVec<S> out;
    for (int k : touched_) {
      const auto u = static_cast<std::size_t>(k);
      if (!is_zero(values_[u])) out.emplace_back(k, std::move(values_[u]));
      values_[u] = S(0);
      seen_[u] = 0;
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<S> values_;
  std::vector<char> seen_;
  std::vector<int> touched_;
};

}  // namespace isotypic
