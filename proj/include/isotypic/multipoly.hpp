#pragma once

#include "isotypic/rational.hpp"

#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace isotypic {

/// Ordered variable names of a polynomial ring Q[x_0, ..., x_{n-1}].
class PolyVars {
 public:
  static constexpr int kMaxVars = 7;
  explicit PolyVars(std::vector<std::string> names);
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  friend bool operator==(const PolyVars& a, const PolyVars& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using PolyVarsPtr = std::shared_ptr<const PolyVars>;

/// Packed exponent vector. Bits 56..63 hold the total degree and variable i occupies
/// bits 48-8i..55-8i, so comparing keys as integers is graded lexicographic order.
class Monomial {
 public:
  constexpr Monomial() = default;
  static Monomial from_exponents(std::span<const int> exps);
  static constexpr Monomial from_key(std::uint64_t k) { return Monomial(k); }

  int exponent(int var) const { return static_cast<int>((key_ >> (48 - 8 * var)) & 0xff); }
  int degree() const { return static_cast<int>(key_ >> 56); }
  std::uint64_t key() const { return key_; }
  Monomial operator*(Monomial o) const;

  friend constexpr auto operator<=>(Monomial, Monomial) = default;

 private:
  constexpr explicit Monomial(std::uint64_t k) : key_(k) {}
  std::uint64_t key_ = 0;
};

/// Sparse multivariate polynomial over Q with terms kept in descending graded-lex
/// order and no zero coefficients. Used for symbolic deformation parameters.
///
/// Only constants are invertible. Like ExtElement, a polynomial built from a plain
/// number carries no variable list and adopts the one it is combined with.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MultiPoly() = default;
  MultiPoly(int v) : MultiPoly(Rational(v)) {}   // NOLINT(google-explicit-constructor)
  MultiPoly(long v) : MultiPoly(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(const Rational& c);                  // NOLINT(google-explicit-constructor)
  MultiPoly(PolyVarsPtr vars, std::vector<Term> terms);

  static MultiPoly variable(const PolyVarsPtr& vars, int index);

  const PolyVarsPtr& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree() == 0); }
  Rational constant_value() const;
  int total_degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }

  /// Substitutes rationals for the variables, in variable order.
  Rational evaluate(std::span<const Rational> point) const;
  std::string str() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  /// Division is only defined by nonzero constants.
  MultiPoly& operator/=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator/(MultiPoly a, const MultiPoly& b) { return a /= b; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

 private:
  static PolyVarsPtr common(const MultiPoly& a, const MultiPoly& b);
  void add_scaled(const MultiPoly& o, int sign);

  PolyVarsPtr vars_;
  std::vector<Term> terms_;
};

/// True iff the polynomial is identically zero (exact identity check).
inline bool poly_is_zero(const MultiPoly& p) { return p.is_zero(); }
inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
/// Units of Q[x] are the nonzero constants.
inline bool is_unit(const MultiPoly& p) { return p.is_constant() && !p.is_zero(); }
MultiPoly inverse(const MultiPoly& p);

}  // namespace isotypic
