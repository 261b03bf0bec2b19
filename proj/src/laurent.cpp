#include "qschur/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <ostream>
#include <stdexcept>

namespace qschur {

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Polynomial long division in Q[v] on dense low-to-high coefficient vectors.
void poly_divmod(const Dense& a, const Dense& b, Dense& q, Dense& r) {
  r = a;
  trim(r);
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    Rational factor = r.back() / lead;
    q[shift] = factor;
    for (std::size_t k = 0; k < b.size(); ++k) r[shift + k] -= factor * b[k];
    r.pop_back();
    trim(r);
  }
  trim(q);
}

Dense monic(Dense p) {
  if (p.empty()) return p;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

// Dense polynomial of a nonzero Laurent polynomial after removing v^low.
Dense stripped(const LaurentPoly& p) { return p.dense(); }

}  // namespace

LaurentPoly::LaurentPoly(int c) {
  if (c != 0) terms_.emplace_back(0, Rational(c));
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) {
    terms_.emplace_back(0, c);
    terms_.back().second.canonicalize();
  }
}

LaurentPoly::LaurentPoly(std::initializer_list<Term> terms)
    : LaurentPoly(from_terms(std::vector<Term>(terms))) {}

LaurentPoly LaurentPoly::monomial(int e, const Rational& c) {
  LaurentPoly p;
  if (c != 0) {
    p.terms_.emplace_back(e, c);
    p.terms_.back().second.canonicalize();
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& [e, c] : terms) {
    c.canonicalize();
    if (!p.terms_.empty() && p.terms_.back().first == e) {
      p.terms_.back().second += c;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (c != 0) {
      p.terms_.emplace_back(e, std::move(c));
    }
  }
  return p;
}

LaurentPoly LaurentPoly::from_dense(int low, const std::vector<Rational>& c) {
  LaurentPoly p;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) p.terms_.emplace_back(low + static_cast<int>(k), c[k]);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

Rational LaurentPoly::coeff(int e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, int x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.first += k;
  return p;
}

LaurentPoly LaurentPoly::substitute_power(int d) const {
  if (d == 0) {
    Rational s = 0;
    for (const auto& t : terms_) s += t.second;
    return LaurentPoly(s);
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.emplace_back(e * d, c);
  return from_terms(std::move(out));
}

Rational LaurentPoly::evaluate(const Rational& q) const {
  if (is_zero()) return 0;
  if (q == 0) throw std::domain_error("LaurentPoly::evaluate at 0");
  // Horner on the dense form, then scale by q^low.
  Dense c = dense();
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + *it;
  int e = low();
  Rational base = e >= 0 ? q : Rational(1) / q;
  for (int k = 0; k < std::abs(e); ++k) acc *= base;
  return acc;
}

std::vector<Rational> LaurentPoly::dense() const {
  if (is_zero()) return {};
  std::vector<Rational> c(static_cast<std::size_t>(high() - low() + 1), Rational(0));
  for (const auto& [e, x] : terms_) c[static_cast<std::size_t>(e - low())] = x;
  return c;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Rational s = a->second + b->second;
      if (s != 0) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) {
    LaurentPoly p = b;
    for (auto& t : p.terms_) {
      t.first += a.terms_[0].first;
      t.second *= a.terms_[0].second;
    }
    return p;
  }
  if (b.size() == 1) return b * a;
  const int lo = a.low() + b.low();
  Dense acc(static_cast<std::size_t>(a.high() + b.high() - lo + 1), Rational(0));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
  return LaurentPoly::from_dense(lo, acc);
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const LaurentPoly::Term& x, const LaurentPoly::Term& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false;
  if (start == s.size()) throw std::invalid_argument("bad rational: " + s);
  for (std::size_t k = start; k < s.size(); ++k) {
    if (s[k] == '/') {
      if (slash || k == start || k + 1 == s.size())
        throw std::invalid_argument("bad rational: " + s);
      slash = true;
    } else if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
      throw std::invalid_argument("bad rational: " + s);
    }
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string var;
    if (e == 1) {
      var = "v";
    } else if (e != 0) {
      var = "v^" + std::to_string(e);
    }
    if (var.empty()) {
      out += rational_to_string(mag);
    } else if (mag == 1) {
      out += var;
    } else {
      out += rational_to_string(mag) + "*" + var;
    }
  }
  return out;
}

namespace {

LaurentPoly::Term parse_term(std::string_view t, bool negative) {
  auto fail = [&] { throw std::invalid_argument("bad Laurent term: " + std::string(t)); };
  if (t.empty()) fail();
  const auto vpos = t.find('v');
  Rational c = 1;
  int e = 0;
  if (vpos == std::string_view::npos) {
    c = parse_rational(t);
  } else {
    std::string_view coef = t.substr(0, vpos);
    if (!coef.empty()) {
      if (coef.back() != '*') fail();
      coef.remove_suffix(1);
      c = parse_rational(coef);
    }
    std::string_view rest = t.substr(vpos + 1);
    if (rest.empty()) {
      e = 1;
    } else {
      if (rest[0] != '^' || rest.size() < 2) fail();
      rest.remove_prefix(1);
      std::size_t used = 0;
      std::string r(rest);
      try {
        e = std::stoi(r, &used);
      } catch (const std::exception&) {
        fail();
      }
      if (used != r.size()) fail();
    }
  }
  if (negative) c = -c;
  return {e, c};
}

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty Laurent polynomial");
  std::vector<Term> terms;
  std::size_t k = 0;
  while (k < s.size()) {
    bool negative = false;
    if (s[k] == '+' || s[k] == '-') {
      negative = s[k] == '-';
      ++k;
    }
    std::size_t end = k;
    while (end < s.size() && !((s[end] == '+' || s[end] == '-') && end > k && s[end - 1] != '^'))
      ++end;
    terms.push_back(parse_term(std::string_view(s).substr(k, end - k), negative));
    k = end;
  }
  return from_terms(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
  if (a.is_zero()) return {LaurentPoly(), LaurentPoly()};
  Dense q;
  Dense r;
  poly_divmod(stripped(a), stripped(b), q, r);
  return {LaurentPoly::from_dense(a.low() - b.low(), q), LaurentPoly::from_dense(a.low(), r)};
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero())
    throw std::domain_error("inexact Laurent division: (" + a.to_string() + ")/(" +
                            b.to_string() + ")");
  return q;
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
  if (b.is_zero()) return a.is_zero();
  return divmod(a, b).second.is_zero();
}

LaurentPoly unit_normalize(const LaurentPoly& p, LaurentPoly* unit) {
  if (p.is_zero()) {
    if (unit) *unit = LaurentPoly(1);
    return p;
  }
  LaurentPoly u = LaurentPoly::monomial(p.low(), p.leading());
  if (unit) *unit = u;
  LaurentPoly out = p.shifted(-p.low());
  out *= Rational(1) / p.leading();
  return out;
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return unit_normalize(b);
  if (b.is_zero()) return unit_normalize(a);
  Dense x = monic(stripped(a));
  Dense y = monic(stripped(b));
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    Dense q;
    Dense r;
    poly_divmod(x, y, q, r);
    x = std::move(y);
    y = monic(std::move(r));
  }
  return LaurentPoly::from_dense(0, monic(x));
}

}  // namespace qschur
