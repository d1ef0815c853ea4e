// Randomized identities on random elements of every small built-in Hopf algebra.

#include "isotypic/examples.hpp"

#include "doctest.h"

#include <random>

using namespace isotypic;
using Q = Rational;

namespace {

template <class S> Vec<S> random_element(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(-3, 3);
  Vec<S> v = zero_vec<S>(n);
  for (int i = 0; i < n; ++i) v(i) = S(Q(d(rng), 1 + (d(rng) + 3) % 4));
  return v;
}

// Delta(u) Delta(v) in H (x) H, via the tensor square algebra.
template <class S> Vec<S> comult_dense(const HopfAlgebraData<S>& h, const Vec<S>& u) { return comultiply(h, u); }

template <class S> void check_identities(const HopfAlgebraData<S>& h, std::mt19937& rng) {
  const int n = h.dim();
  const FinDimAlgebra<S> h2 = tensor_square_algebra(h.algebra);
  for (int trial = 0; trial < 10; ++trial) {
    const Vec<S> u = random_element<S>(rng, n), v = random_element<S>(rng, n), w = random_element<S>(rng, n);
    const Vec<S> uv = multiply(h.algebra, u, v);
    CHECK(equal<S>(multiply(h.algebra, uv, w), multiply(h.algebra, u, multiply(h.algebra, v, w))));
    CHECK(equal<S>(comult_dense(h, uv), multiply(h2, comult_dense(h, u), comult_dense(h, v))));
    CHECK(dot(h.counit, uv) == dot(h.counit, u) * dot(h.counit, v));
    CHECK(equal<S>(apply_antipode(h, uv), multiply(h.algebra, apply_antipode(h, v), apply_antipode(h, u))));
    // S(u_(1)) u_(2) = eps(u) 1
    Vec<S> conv = zero_vec<S>(n);
    for (const auto& [p, c] : comultiply_sparse(h.comult, to_sparse(u)))
      conv += c * multiply(h.algebra, apply_antipode(h, h.algebra.basis(p / n)), h.algebra.basis(p % n));
    CHECK(equal<S>(conv, Vec<S>(dot(h.counit, u) * h.algebra.unit())));
  }
  const Vec<S> p = dual_regular_idempotent(h);
  // p is a two-sided integral exactly when H is semisimple.
  bool integral = true;
  for (int i = 0; i < n; ++i)
    integral = integral && equal<S>(multiply(h.algebra, h.algebra.basis(i), p), Vec<S>(h.counit(i) * p));
  CHECK(integral == is_semisimple(h.algebra));
  CHECK(is_central(h.algebra, p) == is_semisimple(h.algebra));
}

}  // namespace

TEST_CASE("random-element identities on the built-ins") {
  std::mt19937 rng(29);
  check_identities(build_sweedler4(), rng);
  check_identities(build_group_c2(), rng);
  check_identities(build_group_s3(), rng);
  check_identities(build_double_cover<Q>(Q(2)), rng);
  check_identities(build_double_cover<Q>(Q(-1, 3)), rng);
  check_identities(build_double_cover_dual(), rng);
  check_identities(build_double_cover<ExtElement>(ExtElement(0)), rng);
  check_identities(dual(build_double_cover<ExtElement>(ExtElement(0))), rng);
}

TEST_CASE("double cover family: Chevalley exactly when mu = 0") {
  for (const Q mu : {Q(0), Q(1), Q(2), Q(-5, 3)}) {
    const auto h = build_double_cover<Q>(mu);
    CHECK(all_passed(verify_axioms(h)));
    CHECK(chevalley_check(h) == mu.is_zero());
    CHECK(all_passed(verify_axioms(dual(h))));
    CHECK(chevalley_check(dual(h)));
  }
}

TEST_CASE("projectors of one-dimensional characters are idempotents on Chevalley examples") {
  auto check = [](const auto& h) {
    if (!chevalley_check(h)) return;
    for (const auto& e : all_projectors(h))
      if (e.character.module_dim == 1) CHECK(equal(multiply(h.algebra, e.value, e.value), e.value));
  };
  check(build_sweedler4());
  check(build_double_cover_dual());
  check(build_double_cover<ExtElement>(ExtElement(0)));
  check(build_group_s3());
}
