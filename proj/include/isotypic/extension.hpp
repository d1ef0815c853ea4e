#pragma once

#include "isotypic/rational.hpp"

#include <memory>
#include <ostream>
#include <string>
#include <vector>

namespace isotypic {

/// Univariate polynomial over Q, coefficients from the constant term upwards.
using UPoly = std::vector<Rational>;

/// A monic modulus m(t) defining Q[t]/(m). Irreducibility is the caller's claim.
class ExtModulus {
 public:
  explicit ExtModulus(UPoly coeffs, std::string var = "t");

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const UPoly& coefficients() const { return coeffs_; }
  const std::string& var() const { return var_; }

  friend bool operator==(const ExtModulus& a, const ExtModulus& b) { return a.coeffs_ == b.coeffs_; }

 private:
  UPoly coeffs_;
  std::string var_;
};

using ExtModulusPtr = std::shared_ptr<const ExtModulus>;

/// Element of the simple extension Q[t]/(m(t)).
///
/// Elements built from plain integers or rationals carry no modulus; they adopt the
/// modulus of whatever they are combined with. This lets generic code write Scalar(0)
/// and Scalar(1) without threading the field through every call.
class ExtElement {
 public:
  ExtElement() : coeffs_{Rational(0)} {}
  ExtElement(int v) : coeffs_{Rational(v)} {}             // NOLINT(google-explicit-constructor)
  ExtElement(long v) : coeffs_{Rational(v)} {}            // NOLINT(google-explicit-constructor)
  ExtElement(const Rational& v) : coeffs_{v} {}           // NOLINT(google-explicit-constructor)
  ExtElement(ExtModulusPtr modulus, const UPoly& raw);

  /// The class of t itself.
  static ExtElement generator(ExtModulusPtr modulus);

  const ExtModulusPtr& modulus() const { return mod_; }
  /// Coefficients c_0..c_{d-1}; a single entry for modulus-free constants.
  const UPoly& coefficients() const { return coeffs_; }
  /// Coefficient vector padded to the degree of `m`.
  UPoly coefficients_in(const ExtModulus& m) const;

  bool is_zero() const;
  /// True when the element lies in Q (all higher coefficients vanish).
  bool is_rational() const;
  std::string str() const;

  ExtElement& operator+=(const ExtElement& o);
  ExtElement& operator-=(const ExtElement& o);
  ExtElement& operator*=(const ExtElement& o);
  ExtElement& operator/=(const ExtElement& o);
  friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
  friend ExtElement operator-(ExtElement a, const ExtElement& b) { return a -= b; }
  friend ExtElement operator*(ExtElement a, const ExtElement& b) { return a *= b; }
  friend ExtElement operator/(ExtElement a, const ExtElement& b) { return a /= b; }
  ExtElement operator-() const;

  friend bool operator==(const ExtElement& a, const ExtElement& b);
  friend std::ostream& operator<<(std::ostream& os, const ExtElement& x) { return os << x.str(); }

 private:
  void adopt(const ExtModulusPtr& m);
  static const ExtModulusPtr& common(const ExtElement& a, const ExtElement& b);

  UPoly coeffs_;
  ExtModulusPtr mod_;
};

/// Reduces `raw` modulo `modulus`; the result has degree < deg(modulus).
ExtElement ext_normalize(const UPoly& raw, const ExtModulusPtr& modulus);
/// Multiplicative inverse via the extended Euclidean algorithm.
ExtElement ext_invert(const ExtElement& x);

inline bool is_zero(const ExtElement& x) { return x.is_zero(); }
inline bool is_unit(const ExtElement& x) { return !x.is_zero(); }
inline ExtElement inverse(const ExtElement& x) { return ext_invert(x); }

namespace upoly {
void trim(UPoly& p);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
/// Quotient and remainder of a by a nonzero b.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
}  // namespace upoly

}  // namespace isotypic
