#pragma once

// Built-in Hopf algebras.

#include "isotypic/hopf.hpp"
#include "isotypic/presentations.hpp"

#include <array>

namespace isotypic {

/// Q(i) as Q[t]/(t^2 + 1), printed with the variable name "i".
ExtModulusPtr gaussian_modulus();

/// Attaches eps and S, solved from the counit axiom and the convolution identity, to a
/// closed presentation with Delta extended multiplicatively from generator images.
template <class S>
HopfAlgebraData<S> hopf_from_presentation(const PresentedAlgebra<S>& pa, const std::vector<SparseVec<S>>& generator_images) {
  HopfAlgebraData<S> h;
  h.algebra = pa.result;
  h.comult = Coproduct<S>(pa.result.dim(), extend_to_tensor_square(pa, generator_images));
  h.counit = solve_counit(h.algebra, h.comult);
  h.antipode = solve_antipode(h.algebra, h.comult, h.counit);
  return h;
}

/// u (x) v as a sparse tensor over pair indices.
template <class S> SparseVec<S> outer(const Vec<S>& u, const Vec<S>& v) {
  const int n = static_cast<int>(u.size());
  SparseVec<S> out;
  for (const auto& [i, c] : to_sparse(u))
    for (const auto& [j, d] : to_sparse(v)) out.emplace_back(pair_index(n, i, j), c * d);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

template <class S> SparseVec<S> add_sparse(SparseVec<S> a, const SparseVec<S>& b, const S& scale = S(1)) {
  for (const auto& [i, c] : b) a.emplace_back(i, scale * c);
  std::sort(a.begin(), a.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVec<S> out;
  for (auto& e : a) {
    if (!out.empty() && out.back().first == e.first)
      out.back().second += e.second;
    else
      out.push_back(std::move(e));
    if (is_zero(out.back().second)) out.pop_back();
  }
  return out;
}

/// H_4 = <g, x | g^2 = 1, x^2 = 0, xg = -gx>, basis {1, g, x, gx}. Characters: the
/// trivial one and g -> -1.
HopfAlgebraData<Rational> build_sweedler4();
PresentedAlgebra<Rational> sweedler4_presentation(bool corrupt_sign = false);

/// H(mu) = <g, x | g^4 = 1, xg = -gx, x^2 = (mu/2)(1 - g^2)>, basis
/// {1, g, g^2, g^3, x, gx, g^2x, g^3x}. Characters of the absolutely simple modules
/// are attached: over Q(i) with mu = 0 the four g -> i^k; otherwise g -> +-1 and, when
/// mu != 0, the two-dimensional V with chi_V(g) = 0, chi_V(g^2) = -2.
template <class S> HopfAlgebraData<S> build_double_cover(const S& mu);

/// H with H* = H(2), in the basis dual to that of H(2). Its four simple characters are
/// the group-likes 1, g, g^2, g^3 of H*.
HopfAlgebraData<Rational> build_double_cover_dual();

/// Group algebras with their character tables over Q.
HopfAlgebraData<Rational> build_group_c2();
HopfAlgebraData<Rational> build_group_s3();

// ---------------------------------------------------------------------------
// The 72-dimensional example

/// Permutations of {1,2,3} as image arrays; composition is (st)(x) = s(t(x)).
using Perm = std::array<int, 3>;
/// e-index order: 1, (12), (23), (13), (123), (132).
const std::array<Perm, 6>& s3_elements();
const std::array<std::string, 6>& s3_names();
int s3_index(const Perm& p);
Perm s3_compose(const Perm& s, const Perm& t);
Perm s3_inverse(const Perm& p);

/// The declared words 1, a, b, c, ab, bc, ac, cb, aba, abc, bac, abac.
const std::array<std::string, 12>& fk3_words();
/// Basis index of word w times e_g.
inline int fk3_index(int word, int g) { return word * 6 + g; }

template <class S> struct FK3Algebra {
  PresentedAlgebra<S> presented;
  HopfAlgebraData<S> hstar;
};

/// H* as presented by generators a, b, c, e_g with lambda_xy = lambda_x - lambda_y.
/// `flip_sign` negates the right side of ba -> -ac - cb (a negative control).
template <class S> FK3Algebra<S> build_fk3(const S& la, const S& lb, const S& lc, bool flip_sign = false);
/// The symbolic algebra over Q[la, lb, lc].
FK3Algebra<MultiPoly> build_fk3_symbolic();
PolyVarsPtr fk3_vars();

/// H = (H*)* with the S3 characters triv, sgn and V attached.
template <class S> HopfAlgebraData<S> fk3_dual(const HopfAlgebraData<S>& hstar);

}  // namespace isotypic
