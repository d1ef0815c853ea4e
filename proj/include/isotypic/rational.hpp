#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace isotypic {

/// Raised on division by an exact zero.
struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

/// Raised when an operation needs a field but the scalar domain is only a ring,
/// or when scalars from incompatible domains are combined.
struct UnsupportedDomain : std::domain_error {
  using std::domain_error::domain_error;
};

/// Arbitrary-precision rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : v_(v) {}                 // NOLINT(google-explicit-constructor)
  Rational(long v) : v_(v) {}                // NOLINT(google-explicit-constructor)
  Rational(long long v) : v_(static_cast<long>(v)) {}  // NOLINT
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p", "-p" or "p/q" (no decimal point, no whitespace).
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return v_; }
  std::string str() const;

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
/// Nonzero rationals are units, so any of them may serve as an elimination pivot.
inline bool is_unit(const Rational& x) { return !x.is_zero(); }
Rational inverse(const Rational& x);

}  // namespace isotypic
