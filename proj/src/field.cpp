#include "qschur/field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qschur {

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense poly_mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Dense poly_sub(Dense a, const Dense& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// a = q * b + r with deg r < deg b; b nonzero.
void poly_divmod(const Dense& a, const Dense& b, Dense& q, Dense& r) {
  r = a;
  trim(r);
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, Rational(0));
  while (!r.empty() && r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    Rational factor = r.back() / b.back();
    q[shift] = factor;
    for (std::size_t k = 0; k < b.size(); ++k) r[shift + k] -= factor * b[k];
    r.pop_back();
    trim(r);
  }
  trim(q);
}

std::string trimmed(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s += ch;
  return s;
}

}  // namespace

FieldContext FieldContext::rational(const Rational& q) {
  if (q == 0) throw std::invalid_argument("rational specialization point must be nonzero");
  FieldContext c;
  c.kind = Kind::RationalPoint;
  c.q = q;
  return c;
}

FieldContext FieldContext::cyclotomic(int ell) {
  if (ell < 2) throw std::invalid_argument("cyclotomic order must be at least 2");
  FieldContext c;
  c.kind = Kind::CyclotomicPoint;
  c.ell = ell;
  return c;
}

FieldContext FieldContext::parse(std::string_view text) {
  const std::string s = trimmed(text);
  auto value_of = [&](std::string_view prefix) -> std::string {
    return s.substr(prefix.size());
  };
  try {
    if (s == "generic") return generic();
    if (s.rfind("q=", 0) == 0) return rational(parse_rational(value_of("q=")));
    if (s.rfind("cyclotomic=", 0) == 0) {
      std::size_t used = 0;
      const std::string v = value_of("cyclotomic=");
      const int ell = std::stoi(v, &used);
      if (used != v.size()) throw std::invalid_argument("trailing characters");
      return cyclotomic(ell);
    }
    if (s.rfind("char=", 0) == 0) {
      std::size_t used = 0;
      const std::string v = value_of("char=");
      const long p = std::stol(v, &used);
      if (used != v.size() || p < 0) throw std::invalid_argument("bad characteristic");
      if (p == 0) return generic();
      throw UnsupportedCharacteristic("characteristic " + v + " is not supported; fields must have characteristic 0");
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("invalid field '" + std::string(text) + "': " + e.what());
  }
  throw ConfigError("invalid field '" + std::string(text) + "': expected generic, q=FRACTION or cyclotomic=L");
}

std::string FieldContext::to_string() const {
  switch (kind) {
    case Kind::Generic:
      return "generic";
    case Kind::RationalPoint:
      return "q=" + rational_to_string(q);
    case Kind::CyclotomicPoint:
      return "cyclotomic=" + std::to_string(ell);
  }
  return "generic";
}

const std::vector<Rational>& cyclotomic_polynomial(int ell) {
  if (ell < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  static std::mutex mutex;
  static std::map<int, Dense> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(ell); it != cache.end()) return it->second;
  }
  // Phi_n = (v^n - 1) / prod_{d | n, d < n} Phi_d.
  Dense num(static_cast<std::size_t>(ell) + 1, Rational(0));
  num[0] = -1;
  num[static_cast<std::size_t>(ell)] = 1;
  for (int d = 1; d < ell; ++d) {
    if (ell % d != 0) continue;
    Dense q, r;
    poly_divmod(num, cyclotomic_polynomial(d), q, r);
    num = std::move(q);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(ell, std::move(num)).first->second;
}

LaurentPoly cyclotomic_laurent(int ell) { return LaurentPoly::from_dense(0, cyclotomic_polynomial(ell)); }

CycloValue::CycloValue(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

CycloValue::CycloValue(int ell, const LaurentPoly& p) : ell_(ell) {
  if (ell < 2) throw std::invalid_argument("CycloValue: order must be at least 2");
  c_.assign(static_cast<std::size_t>(ell), Rational(0));
  for (const auto& [e, x] : p.terms()) c_[static_cast<std::size_t>(((e % ell) + ell) % ell)] += x;
  trim(c_);
  reduce();
}

void CycloValue::reduce() {
  if (ell_ == 0) return;
  const Dense& m = cyclotomic_polynomial(ell_);
  if (c_.size() < m.size()) return;
  Dense q, r;
  poly_divmod(c_, m, q, r);
  c_ = std::move(r);
}

int CycloValue::bind(const CycloValue& o) const {
  if (ell_ == 0) return o.ell_;
  if (o.ell_ == 0 || o.ell_ == ell_) return ell_;
  throw ContextMismatch("cyclotomic orders " + std::to_string(ell_) + " and " + std::to_string(o.ell_) + " mixed");
}

CycloValue& CycloValue::operator+=(const CycloValue& o) {
  ell_ = bind(o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim(c_);
  return *this;
}

CycloValue& CycloValue::operator-=(const CycloValue& o) { return *this += -o; }

CycloValue& CycloValue::operator*=(const CycloValue& o) {
  ell_ = bind(o);
  c_ = poly_mul(c_, o.c_);
  reduce();
  return *this;
}

CycloValue CycloValue::operator-() const {
  CycloValue out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

CycloValue CycloValue::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic residue");
  if (ell_ == 0 || c_.size() == 1) {
    CycloValue out(Rational(1) / c_.front());
    out.ell_ = ell_;
    return out;
  }
  // Extended Euclid: s1 * a == r1 (mod Phi) is maintained; Phi is irreducible.
  Dense r0 = cyclotomic_polynomial(ell_);
  Dense r1 = c_;
  Dense s0, s1{Rational(1)};
  while (!r1.empty()) {
    Dense q, r;
    poly_divmod(r0, r1, q, r);
    Dense s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant.
  CycloValue out;
  out.ell_ = ell_;
  out.c_ = std::move(s0);
  for (auto& x : out.c_) x /= r0.front();
  trim(out.c_);
  out.reduce();
  return out;
}

std::string CycloValue::to_string() const { return LaurentPoly::from_dense(0, c_).to_string(); }

namespace {

// Both operands promoted to a common alternative; Rational promotes upward.
template <class Op>
FieldValue combine(const FieldValue& a, const FieldValue& b, Op op) {
  return std::visit(
      [&](const auto& x, const auto& y) -> FieldValue {
        using X = std::decay_t<decltype(x)>;
        using Y = std::decay_t<decltype(y)>;
        if constexpr (std::is_same_v<X, Y>) {
          return FieldValue(op(x, y));
        } else if constexpr (std::is_same_v<X, Rational>) {
          return FieldValue(op(Y(x), y));
        } else if constexpr (std::is_same_v<Y, Rational>) {
          return FieldValue(op(x, X(y)));
        } else if constexpr (std::is_same_v<X, CycloValue>) {
          if (x.ell() == 0) return FieldValue(op(RatFunc(x.is_zero() ? Rational(0) : x.coeffs().front()), y));
          throw ContextMismatch("cannot combine a cyclotomic residue with an element of Q(v)");
        } else {
          if (y.ell() == 0) return FieldValue(op(x, RatFunc(y.is_zero() ? Rational(0) : y.coeffs().front())));
          throw ContextMismatch("cannot combine an element of Q(v) with a cyclotomic residue");
        }
      },
      a.storage(), b.storage());
}

}  // namespace

bool FieldValue::is_zero() const {
  return std::visit([](const auto& x) { return qschur::is_zero(x); }, v_);
}

FieldValue FieldValue::inverse() const {
  return std::visit(
      [](const auto& x) -> FieldValue {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, Rational>) {
          if (x == 0) throw std::domain_error("inverse of zero");
          return FieldValue(Rational(1) / x);
        } else {
          return FieldValue(x.inverse());
        }
      },
      v_);
}

RatFunc FieldValue::as_ratfunc() const {
  return std::visit(
      [](const auto& x) -> RatFunc {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, CycloValue>) {
          if (x.ell() != 0) throw ContextMismatch("cyclotomic residue is not an element of Q(v)");
          return RatFunc(x.is_zero() ? Rational(0) : x.coeffs().front());
        } else {
          return RatFunc(x);
        }
      },
      v_);
}

FieldValue& FieldValue::operator+=(const FieldValue& o) {
  return *this = combine(*this, o, [](const auto& x, const auto& y) { return x + y; });
}

FieldValue& FieldValue::operator-=(const FieldValue& o) {
  return *this = combine(*this, o, [](const auto& x, const auto& y) { return x - y; });
}

FieldValue& FieldValue::operator*=(const FieldValue& o) {
  return *this = combine(*this, o, [](const auto& x, const auto& y) { return x * y; });
}

FieldValue FieldValue::operator-() const {
  return std::visit([](const auto& x) { return FieldValue(-x); }, v_);
}

bool operator==(const FieldValue& a, const FieldValue& b) {
  try {
    return (a - b).is_zero();
  } catch (const ContextMismatch&) {
    return false;
  }
}

std::string FieldValue::to_string() const {
  return std::visit(
      [](const auto& x) -> std::string {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, Rational>) {
          return rational_to_string(x);
        } else {
          return x.to_string();
        }
      },
      v_);
}

FieldValue specialize(const LaurentPoly& p, const FieldContext& ctx) {
  switch (ctx.kind) {
    case FieldContext::Kind::Generic:
      return FieldValue(RatFunc(p));
    case FieldContext::Kind::RationalPoint:
      return FieldValue(p.evaluate(ctx.q));
    case FieldContext::Kind::CyclotomicPoint:
      return FieldValue(CycloValue(ctx.ell, p));
  }
  return FieldValue(RatFunc(p));
}

FieldValue specialize(const RatFunc& f, const FieldContext& ctx) {
  if (ctx.kind == FieldContext::Kind::Generic) return FieldValue(f);
  FieldValue den = specialize(f.den(), ctx);
  if (den.is_zero())
    throw DenominatorVanishes("denominator " + f.den().to_string() + " vanishes at " + ctx.to_string());
  return specialize(f.num(), ctx) / den;
}

}  // namespace qschur
