#include "isotypic/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace isotypic {

PolyVars::PolyVars(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty() || static_cast<int>(names_.size()) > kMaxVars)
    throw std::invalid_argument("polynomial rings need between 1 and 7 variables");
}

Monomial Monomial::from_exponents(std::span<const int> exps) {
  if (static_cast<int>(exps.size()) > PolyVars::kMaxVars) throw std::invalid_argument("too many variables");
  std::uint64_t key = 0;
  int total = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 255) throw std::out_of_range("exponent out of range");
    key |= static_cast<std::uint64_t>(exps[i]) << (48 - 8 * i);
    total += exps[i];
  }
  if (total > 255) throw std::out_of_range("total degree out of range");
  return Monomial(key | (static_cast<std::uint64_t>(total) << 56));
}

Monomial Monomial::operator*(Monomial o) const {
  // Per-byte addition; overflow of any field would corrupt its neighbour.
  std::uint64_t sum = 0;
  for (int b = 0; b < 8; ++b) {
    const std::uint64_t x = (key_ >> (8 * b)) & 0xff, y = (o.key_ >> (8 * b)) & 0xff;
    if (x + y > 255) throw std::out_of_range("monomial exponent overflow");
    sum |= (x + y) << (8 * b);
  }
  return Monomial(sum);
}

MultiPoly::MultiPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial(), c);
}

MultiPoly::MultiPoly(PolyVarsPtr vars, std::vector<Term> terms) : vars_(std::move(vars)) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().first == t.first)
      terms_.back().second += t.second;
    else
      terms_.push_back(std::move(t));
    if (terms_.back().second.is_zero()) terms_.pop_back();
  }
}

MultiPoly MultiPoly::variable(const PolyVarsPtr& vars, int index) {
  if (!vars || index < 0 || index >= vars->size()) throw std::out_of_range("variable index");
  std::vector<int> e(static_cast<std::size_t>(vars->size()), 0);
  e[static_cast<std::size_t>(index)] = 1;
  return MultiPoly(vars, {{Monomial::from_exponents(e), Rational(1)}});
}

Rational MultiPoly::constant_value() const {
  if (!is_constant()) throw UnsupportedDomain("polynomial is not a constant");
  return terms_.empty() ? Rational(0) : terms_[0].second;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (int i = 0; i < PolyVars::kMaxVars; ++i) {
      const int e = m.exponent(i);
      if (e == 0) continue;
      if (i >= static_cast<int>(point.size())) throw std::invalid_argument("evaluation point has too few coordinates");
      for (int k = 0; k < e; ++k) v *= point[static_cast<std::size_t>(i)];
    }
    total += v;
  }
  return total;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    if (first) {
      if (coeff.sign() < 0) { os << '-'; coeff = -coeff; }
    } else {
      os << (coeff.sign() < 0 ? " - " : " + ");
      if (coeff.sign() < 0) coeff = -coeff;
    }
    first = false;
    const bool unit = coeff.is_one() && m.degree() > 0;
    if (!unit) os << coeff;
    bool need_star = !unit;
    for (int i = 0; i < PolyVars::kMaxVars; ++i) {
      const int e = m.exponent(i);
      if (e == 0) continue;
      if (need_star) os << '*';
      need_star = true;
      os << (vars_ && i < vars_->size() ? vars_->names()[static_cast<std::size_t>(i)] : "x" + std::to_string(i));
      if (e > 1) os << '^' << e;
    }
  }
  return os.str();
}

PolyVarsPtr MultiPoly::common(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ && b.vars_ && a.vars_ != b.vars_ && !(*a.vars_ == *b.vars_))
    throw UnsupportedDomain("combining polynomials over different variable lists");
  return a.vars_ ? a.vars_ : b.vars_;
}

void MultiPoly::add_scaled(const MultiPoly& o, int sign) {
  vars_ = common(*this, o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && i->first > j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->first > i->first) {
      out.emplace_back(j->first, sign > 0 ? j->second : -j->second);
      ++j;
    } else {
      Rational c = sign > 0 ? i->second + j->second : i->second - j->second;
      if (!c.is_zero()) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  add_scaled(o, 1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  add_scaled(o, -1);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  r.vars_ = MultiPoly::common(a, b);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (b.terms_.size() == 1 && b.terms_[0].first.degree() == 0) {
    r.terms_ = a.terms_;
    for (auto& t : r.terms_) t.second *= b.terms_[0].second;
    return r;
  }
  if (a.terms_.size() == 1 && a.terms_[0].first.degree() == 0) {
    r.terms_ = b.terms_;
    for (auto& t : r.terms_) t.second *= a.terms_[0].second;
    return r;
  }
  std::vector<MultiPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) prod.emplace_back(ma * mb, ca * cb);
  return MultiPoly(r.vars_, std::move(prod));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator/=(const MultiPoly& o) {
  if (o.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (!o.is_constant()) throw UnsupportedDomain("division by a non-constant polynomial");
  vars_ = common(*this, o);
  const Rational inv = inverse(o.terms_[0].second);
  for (auto& t : terms_) t.second *= inv;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MultiPoly inverse(const MultiPoly& p) {
  if (p.is_zero()) throw DivisionByZero("inverse of the zero polynomial");
  if (!p.is_constant()) throw UnsupportedDomain("only constant polynomials are invertible");
  MultiPoly r(inverse(p.constant_value()));
  return r;
}

}  // namespace isotypic
