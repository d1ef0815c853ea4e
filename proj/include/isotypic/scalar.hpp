#pragma once

#include "isotypic/extension.hpp"
#include "isotypic/multipoly.hpp"
#include "isotypic/rational.hpp"

#include <Eigen/Core>

#include <concepts>
#include <string>
#include <type_traits>

namespace isotypic {

/// Exact scalar types the library is instantiated for.
template <class S>
concept ExactScalar = requires(const S& a, const S& b) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a == b } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { is_unit(a) } -> std::convertible_to<bool>;
  { inverse(a) } -> std::convertible_to<S>;
  S(0);
  S(1);
};

/// Whether every nonzero scalar is invertible. Rank, kernel and radical computations
/// are only meaningful over fields; over polynomial rings they proceed while constant
/// pivots are available and refuse otherwise.
template <class S> inline constexpr bool is_field_v = true;
template <> inline constexpr bool is_field_v<MultiPoly> = false;

inline std::string to_string(const Rational& x) { return x.str(); }
inline std::string to_string(const ExtElement& x) { return x.str(); }
inline std::string to_string(const MultiPoly& x) { return x.str(); }

/// Embeds a rational into the scalar domain.
template <class S> S from_rational(const Rational& q) { return S(q); }

}  // namespace isotypic

namespace Eigen {

template <class S>
struct ExactNumTraitsBase : GenericNumTraits<S> {
  using Real = S;
  using NonInteger = S;
  using Literal = S;
  using Nested = S;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static S epsilon() { return S(0); }
  static S dummy_precision() { return S(0); }
  static S highest() = delete;
  static S lowest() = delete;
  static int digits10() { return 0; }
};

template <> struct NumTraits<isotypic::Rational> : ExactNumTraitsBase<isotypic::Rational> {};
template <> struct NumTraits<isotypic::ExtElement> : ExactNumTraitsBase<isotypic::ExtElement> {};
template <> struct NumTraits<isotypic::MultiPoly> : ExactNumTraitsBase<isotypic::MultiPoly> {};

}  // namespace Eigen
