#include "isotypic/rational.hpp"

#include <cctype>

namespace isotypic {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (!n.empty() && n.front() == '+') n.erase(0, 1);
  mpz_class zn(n, 10), zd(std::string(den), 10);
  if (zd == 0) throw DivisionByZero("rational with zero denominator '" + std::string(text) + "'");
  mpq_class q(zn, zd);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const { return v_.get_str(10); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational inverse(const Rational& x) {
  if (x.is_zero()) throw DivisionByZero("inverse of zero");
  return Rational(mpq_class(1 / x.raw()));
}

}  // namespace isotypic
