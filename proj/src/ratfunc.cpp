#include "qschur/ratfunc.hpp"

#include <ostream>
#include <stdexcept>

namespace qschur {

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("RatFunc with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  // Move powers of v and the scalar content of den into num.
  LaurentPoly unit;
  den_ = unit_normalize(den_, &unit);
  num_ = num_.shifted(-unit.low());
  num_ *= Rational(1) / unit.leading();
  if (den_.is_one()) return;
  LaurentPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
    LaurentPoly u;
    den_ = unit_normalize(den_, &u);
    num_ = num_.shifted(-u.low());
    num_ *= Rational(1) / u.leading();
  }
}

const LaurentPoly& RatFunc::as_laurent() const {
  if (!is_laurent()) throw std::domain_error("rational function is not a Laurent polynomial: " + to_string());
  return num_;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    if (den_.is_one()) {
      num_ += o.num_;
      return *this;
    }
    num_ += o.num_;
    normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  // Cross-cancel before multiplying to keep degrees small.
  LaurentPoly g1 = gcd(num_, o.den_);
  LaurentPoly g2 = gcd(o.num_, den_);
  LaurentPoly n = exact_div(num_, g1) * exact_div(o.num_, g2);
  LaurentPoly d = exact_div(den_, g2) * exact_div(o.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  // Factors are coprime already; only unit normalization remains.
  LaurentPoly u;
  den_ = unit_normalize(den_, &u);
  num_ = num_.shifted(-u.low());
  num_ *= Rational(1) / u.leading();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc RatFunc::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  const auto split = s.find(")/(");
  if (split == std::string::npos) return RatFunc(LaurentPoly::parse(s));
  if (s.front() != '(' || s.back() != ')') throw std::invalid_argument("bad rational function: " + s);
  LaurentPoly n = LaurentPoly::parse(s.substr(1, split - 1));
  LaurentPoly d = LaurentPoly::parse(s.substr(split + 3, s.size() - split - 4));
  return RatFunc(n, d);
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

}  // namespace qschur
