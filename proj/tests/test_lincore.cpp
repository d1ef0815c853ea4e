#include "isotypic/lincore.hpp"

#include "doctest.h"

#include <random>

using namespace isotypic;
using Q = Rational;

namespace {

// Oracle: determinant by cofactor expansion and rank as the largest nonvanishing minor.
Q det(const Mat<Q>& m) {
  const int n = static_cast<int>(m.rows());
  if (n == 0) return Q(1);
  Q out(0);
  for (int c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    Mat<Q> minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r)
      for (int k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    const Q term = m(0, c) * det(minor);
    out += (c % 2 == 0) ? term : -term;
  }
  return out;
}

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

int rank_by_minors(const Mat<Q>& m) {
  const int r = static_cast<int>(m.rows()), c = static_cast<int>(m.cols());
  for (int k = std::min(r, c); k > 0; --k) {
    std::vector<std::vector<int>> rs, cs;
    std::vector<int> cur;
    subsets(r, k, 0, cur, rs);
    subsets(c, k, 0, cur, cs);
    for (const auto& ri : rs)
      for (const auto& ci : cs) {
        Mat<Q> sub(k, k);
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) sub(a, b) = m(ri[a], ci[b]);
        if (!det(sub).is_zero()) return k;
      }
  }
  return 0;
}

Mat<Q> random_low_rank(std::mt19937& rng, int rows, int cols, int k) {
  std::uniform_int_distribution<int> d(-3, 3);
  Mat<Q> a = zero_mat<Q>(rows, k), b = zero_mat<Q>(k, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < k; ++j) a(i, j) = Q(d(rng), 1 + (d(rng) + 3) % 3);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < cols; ++j) b(i, j) = Q(d(rng));
  return matmul<Q>(a, b);
}

Mat<Q> mat(std::initializer_list<std::initializer_list<int>> rows) {
  Mat<Q> m = zero_mat<Q>(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (int x : r) m(i, j++) = Q(x);
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("rank and kernel on small matrices") {
  const Mat<Q> ones = mat({{1, 1}, {1, 1}});
  CHECK(rank(ones) == 1);
  const Subspace<Q> k = kernel_basis(ones);
  REQUIRE(k.dim() == 1);
  CHECK(all_zero(apply<Q>(ones, k.basis_vector(0))));
  CHECK(k.contains((Vec<Q>(2) << Q(1), Q(-1)).finished()));
  CHECK(rank(identity_mat<Q>(4)) == 4);
  CHECK(kernel_basis(identity_mat<Q>(3)).dim() == 0);
  CHECK(rank(zero_mat<Q>(3, 2)) == 0);
}

TEST_CASE("rank-nullity and kernel correctness against the minors oracle") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 2 + trial % 3, cols = 2 + (trial / 3) % 4, k = 1 + trial % std::min(rows, cols);
    const Mat<Q> m = random_low_rank(rng, rows, cols, k);
    const int r = rank(m);
    CHECK(r == rank_by_minors(m));
    const Subspace<Q> ker = kernel_basis(m);
    CHECK(r + ker.dim() == cols);
    for (const auto& v : ker.basis_vectors()) CHECK(all_zero(apply<Q>(m, v)));
    CHECK(ker.is_echelon_stable());
  }
}

TEST_CASE("solving") {
  const Mat<Q> a = mat({{1, 2}, {3, 4}});
  const Vec<Q> b = (Vec<Q>(2) << Q(5), Q(6)).finished();
  const auto x = solve_linear(a, b);
  REQUIRE(x);
  CHECK(equal<Q>(apply<Q>(a, *x), b));
  CHECK((*x)(0) == Q(-4));
  CHECK((*x)(1) == Q(9, 2));
  CHECK_FALSE(solve_linear(mat({{1, 1}, {1, 1}}), (Vec<Q>(2) << Q(0), Q(1)).finished()));
  CHECK_THROWS_AS(solve_linear(a, Vec<Q>(zero_vec<Q>(3))), DimensionMismatch);
}

TEST_CASE("sparse solver agrees with dense elimination") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 5, rows = n + trial % 3;
    const Mat<Q> m = random_low_rank(rng, rows, n, 1 + trial % n);
    Vec<Q> x0 = zero_vec<Q>(n);
    for (int i = 0; i < n; ++i) x0(i) = Q(d(rng));
    Vec<Q> b = apply<Q>(m, x0);
    if (trial % 4 == 3) b(0) += Q(1);  // possibly inconsistent
    SparseSystem<Q> sys;
    sys.unknowns = n;
    for (int r = 0; r < rows; ++r) sys.add_row(to_sparse<Q>(m.row(r).transpose()), b(r));
    const auto xs = solve_sparse(sys);
    const auto xd = solve_linear(m, b);
    CHECK(xs.has_value() == xd.has_value());
    if (xs) CHECK(equal<Q>(apply<Q>(m, *xs), b));
  }
}

TEST_CASE("subspaces") {
  std::vector<Vec<Q>> vs{(Vec<Q>(3) << Q(1), Q(2), Q(3)).finished(), (Vec<Q>(3) << Q(2), Q(4), Q(6)).finished(),
                         (Vec<Q>(3) << Q(0), Q(1), Q(1)).finished()};
  const Subspace<Q> s = Subspace<Q>::span_of(vs, 3);
  CHECK(s.dim() == 2);
  CHECK(membership(s, Vec<Q>(vs[0] + vs[2])));
  CHECK_FALSE(s.contains(basis_vec<Q>(3, 2)));
  const Vec<Q> v = vs[0] * Q(3) - vs[2];
  const Vec<Q> c = s.coordinates(v);
  Vec<Q> back = zero_vec<Q>(3);
  for (int i = 0; i < s.dim(); ++i) back += c(i) * s.basis_vector(i);
  CHECK(equal<Q>(back, v));
  CHECK_THROWS_AS(s.residual(zero_vec<Q>(2)), DimensionMismatch);
}

TEST_CASE("polynomial entries: field-only routines refuse, unit pivots proceed") {
  const auto vars = std::make_shared<const PolyVars>(std::vector<std::string>{"l"});
  const MultiPoly l = MultiPoly::variable(vars, 0);
  Mat<MultiPoly> m = zero_mat<MultiPoly>(2, 2);
  m(0, 0) = MultiPoly(1);
  m(0, 1) = l;
  m(1, 0) = l;
  m(1, 1) = l * l;
  CHECK_THROWS_AS(rank(m), UnsupportedDomain);
  CHECK_THROWS_AS(kernel_basis(m), UnsupportedDomain);
  const Subspace<MultiPoly> s = Subspace<MultiPoly>::span_of_rows(m);
  CHECK(s.dim() == 1);
  Mat<MultiPoly> stuck = zero_mat<MultiPoly>(1, 1);
  stuck(0, 0) = l;
  CHECK_THROWS_AS(unit_pivot_echelon(stuck), UnsupportedDomain);
}

TEST_CASE("structure tensors") {
  StructureTensor<Q> t(2);
  t.add(0, 1, 1, Q(2));
  t.add(0, 1, 1, Q(-2));
  CHECK(t.at(0, 1).empty());
  t.add(1, 1, 0, Q(3));
  CHECK(t.nonzeros() == 1);
  const Vec<Q> u = (Vec<Q>(2) << Q(1), Q(2)).finished();
  CHECK(tensor_contract(t, u, u)(0) == Q(12));
  CHECK_THROWS_AS(t.add(0, 0, 5, Q(1)), DimensionMismatch);
  CHECK(trace<Q>(identity_mat<Q>(3)) == Q(3));
}
