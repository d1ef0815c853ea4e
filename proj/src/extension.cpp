#include "isotypic/extension.hpp"

#include <sstream>

namespace isotypic {

namespace upoly {

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  UPoly bb = b;
  trim(bb);
  if (bb.empty()) throw DivisionByZero("polynomial division by zero");
  UPoly rem = a;
  trim(rem);
  if (rem.size() < bb.size()) return {{}, rem};
  UPoly quot(rem.size() - bb.size() + 1, Rational(0));
  const Rational lead_inv = inverse(bb.back());
  while (!rem.empty() && rem.size() >= bb.size()) {
    const std::size_t shift = rem.size() - bb.size();
    const Rational c = rem.back() * lead_inv;
    quot[shift] = c;
    for (std::size_t i = 0; i < bb.size(); ++i) rem[shift + i] -= c * bb[i];
    trim(rem);
  }
  trim(quot);
  return {quot, rem};
}

}  // namespace upoly

ExtModulus::ExtModulus(UPoly coeffs, std::string var) : coeffs_(std::move(coeffs)), var_(std::move(var)) {
  upoly::trim(coeffs_);
  if (coeffs_.size() < 2) throw std::invalid_argument("extension modulus must have degree >= 1");
  if (!coeffs_.back().is_one()) throw std::invalid_argument("extension modulus must be monic");
}

ExtElement::ExtElement(ExtModulusPtr modulus, const UPoly& raw) : mod_(std::move(modulus)) {
  if (!mod_) throw std::invalid_argument("ExtElement needs a modulus");
  coeffs_ = upoly::divmod(raw, mod_->coefficients()).second;
  coeffs_.resize(static_cast<std::size_t>(mod_->degree()), Rational(0));
}

ExtElement ExtElement::generator(ExtModulusPtr modulus) {
  return ExtElement(std::move(modulus), UPoly{Rational(0), Rational(1)});
}

UPoly ExtElement::coefficients_in(const ExtModulus& m) const {
  UPoly r = coeffs_;
  r.resize(static_cast<std::size_t>(m.degree()), Rational(0));
  return r;
}

bool ExtElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool ExtElement::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

std::string ExtElement::str() const {
  const std::string var = mod_ ? mod_->var() : "t";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    Rational c = coeffs_[i];
    if (!first) {
      os << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c == Rational(-1))
        os << '-';
      else if (!c.is_one())
        os << c << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

void ExtElement::adopt(const ExtModulusPtr& m) {
  if (!m || mod_ == m) return;
  if (mod_ && !(*mod_ == *m)) throw UnsupportedDomain("combining elements of different extension fields");
  if (!mod_) {
    mod_ = m;
    coeffs_.resize(static_cast<std::size_t>(m->degree()), Rational(0));
  }
}

const ExtModulusPtr& ExtElement::common(const ExtElement& a, const ExtElement& b) {
  return a.mod_ ? a.mod_ : b.mod_;
}

ExtElement& ExtElement::operator+=(const ExtElement& o) {
  adopt(common(*this, o));
  const UPoly rhs = mod_ ? o.coefficients_in(*mod_) : o.coeffs_;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs[i];
  return *this;
}

ExtElement& ExtElement::operator-=(const ExtElement& o) {
  adopt(common(*this, o));
  const UPoly rhs = mod_ ? o.coefficients_in(*mod_) : o.coeffs_;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs[i];
  return *this;
}

ExtElement& ExtElement::operator*=(const ExtElement& o) {
  const ExtModulusPtr m = common(*this, o);
  if (!m) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  if (o.mod_ && mod_ && !(*o.mod_ == *mod_)) throw UnsupportedDomain("combining elements of different extension fields");
  *this = ExtElement(m, upoly::mul(coeffs_, o.coeffs_));
  return *this;
}

ExtElement& ExtElement::operator/=(const ExtElement& o) { return *this *= ext_invert(o); }

ExtElement ExtElement::operator-() const {
  ExtElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const ExtElement& a, const ExtElement& b) {
  const ExtModulusPtr& m = ExtElement::common(a, b);
  if (!m) return a.coeffs_[0] == b.coeffs_[0];
  if (a.mod_ && b.mod_ && !(*a.mod_ == *b.mod_)) return false;
  return a.coefficients_in(*m) == b.coefficients_in(*m);
}

ExtElement ext_normalize(const UPoly& raw, const ExtModulusPtr& modulus) { return ExtElement(modulus, raw); }

ExtElement ext_invert(const ExtElement& x) {
  if (x.is_zero()) throw DivisionByZero("inverse of zero in extension field");
  if (!x.modulus()) return ExtElement(inverse(x.coefficients()[0]));
  // Extended Euclid on (m, a): track s with s*a == r (mod m).
  UPoly r0 = x.modulus()->coefficients(), r1 = x.coefficients();
  upoly::trim(r1);
  UPoly s0{}, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = upoly::divmod(r0, r1);
    UPoly s = upoly::sub(s0, upoly::mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is the gcd; a nonconstant gcd means m was reducible and x is a zero divisor.
  if (r0.size() != 1)
    throw DivisionByZero("zero divisor in Q[t]/(m): the modulus is not irreducible");
  const Rational scale = inverse(r0[0]);
  for (auto& c : s0) c *= scale;
  return ExtElement(x.modulus(), s0);
}

}  // namespace isotypic
