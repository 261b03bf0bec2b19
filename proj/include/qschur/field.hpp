#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qschur/errors.hpp"
#include "qschur/laurent.hpp"
#include "qschur/ratfunc.hpp"

namespace qschur {

/// A characteristic-zero field with a distinguished image of v:
/// Q(v) itself, Q with v = q, or Q[v]/Phi_l with v a primitive l-th root of 1.
struct FieldContext {
  enum class Kind { Generic, RationalPoint, CyclotomicPoint };

  Kind kind = Kind::Generic;
  Rational q = 1;
  int ell = 0;

  static FieldContext generic() { return {}; }
  /// Throws std::invalid_argument for q == 0.
  static FieldContext rational(const Rational& q);
  /// Throws std::invalid_argument for l < 2.
  static FieldContext cyclotomic(int ell);
  /// Accepts "generic", "q=FRACTION", "cyclotomic=L"; "char=P" with P > 0
  /// raises UnsupportedCharacteristic.
  static FieldContext parse(std::string_view text);

  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const FieldContext&, const FieldContext&) = default;
};

/// Coefficients (low to high) of the l-th cyclotomic polynomial.
const std::vector<Rational>& cyclotomic_polynomial(int ell);
/// Phi_l as a Laurent polynomial.
LaurentPoly cyclotomic_laurent(int ell);

/// Residue class in Q[v]/Phi_l. A value with ell() == 0 is a rational
/// constant not yet tied to a modulus; it combines with any context.
class CycloValue {
 public:
  CycloValue() = default;
  CycloValue(int c) : CycloValue(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  CycloValue(const Rational& c);  // NOLINT(google-explicit-constructor)
  /// Reduces p (v^-1 read as v^{l-1}) modulo Phi_l.
  CycloValue(int ell, const LaurentPoly& p);

  [[nodiscard]] int ell() const { return ell_; }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return c_; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] CycloValue inverse() const;

  CycloValue& operator+=(const CycloValue& o);
  CycloValue& operator-=(const CycloValue& o);
  CycloValue& operator*=(const CycloValue& o);
  CycloValue& operator/=(const CycloValue& o) { return *this *= o.inverse(); }
  CycloValue operator-() const;
  friend CycloValue operator+(CycloValue a, const CycloValue& b) { return a += b; }
  friend CycloValue operator-(CycloValue a, const CycloValue& b) { return a -= b; }
  friend CycloValue operator*(CycloValue a, const CycloValue& b) { return a *= b; }
  friend CycloValue operator/(CycloValue a, const CycloValue& b) { return a /= b; }
  /// Values compare by residue; an unbound constant equals the same constant
  /// in any context.
  friend bool operator==(const CycloValue& a, const CycloValue& b) { return a.c_ == b.c_; }

  /// Canonical representative as text, in the variable of Q[v].
  [[nodiscard]] std::string to_string() const;

 private:
  int bind(const CycloValue& o) const;
  void reduce();

  int ell_ = 0;
  std::vector<Rational> c_;
};

inline bool is_zero(const CycloValue& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x == 0; }

/// Scalar of any supported field. Rational is the prime-field alternative and
/// promotes silently into either of the others; mixing Q(v) with a
/// cyclotomic residue raises ContextMismatch.
class FieldValue {
 public:
  using Storage = std::variant<Rational, RatFunc, CycloValue>;

  FieldValue() : v_(Rational(0)) {}
  FieldValue(int c) : v_(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  FieldValue(Rational c) : v_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  FieldValue(RatFunc f) : v_(std::move(f)) {}  // NOLINT(google-explicit-constructor)
  FieldValue(CycloValue c) : v_(std::move(c)) {}  // NOLINT(google-explicit-constructor)

  [[nodiscard]] const Storage& storage() const { return v_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] FieldValue inverse() const;
  /// Views the value as an element of Q(v); throws ContextMismatch for residues.
  [[nodiscard]] RatFunc as_ratfunc() const;

  FieldValue& operator+=(const FieldValue& o);
  FieldValue& operator-=(const FieldValue& o);
  FieldValue& operator*=(const FieldValue& o);
  FieldValue& operator/=(const FieldValue& o) { return *this *= o.inverse(); }
  FieldValue operator-() const;
  friend FieldValue operator+(FieldValue a, const FieldValue& b) { return a += b; }
  friend FieldValue operator-(FieldValue a, const FieldValue& b) { return a -= b; }
  friend FieldValue operator*(FieldValue a, const FieldValue& b) { return a *= b; }
  friend FieldValue operator/(FieldValue a, const FieldValue& b) { return a /= b; }
  friend bool operator==(const FieldValue& a, const FieldValue& b);

  [[nodiscard]] std::string to_string() const;

 private:
  Storage v_;
};

inline bool is_zero(const FieldValue& x) { return x.is_zero(); }

/// Image of p under v -> q (or v -> residue class of v).
FieldValue specialize(const LaurentPoly& p, const FieldContext& ctx);
/// Throws DenominatorVanishes when den(f) maps to zero.
FieldValue specialize(const RatFunc& f, const FieldContext& ctx);

/// Typed specialization used by the templated linear algebra.
template <class Scalar>
Scalar specialize_as(const LaurentPoly& p, const FieldContext& ctx);

template <>
inline RatFunc specialize_as<RatFunc>(const LaurentPoly& p, const FieldContext&) {
  return RatFunc(p);
}
template <>
inline Rational specialize_as<Rational>(const LaurentPoly& p, const FieldContext& ctx) {
  return p.evaluate(ctx.q);
}
template <>
inline CycloValue specialize_as<CycloValue>(const LaurentPoly& p, const FieldContext& ctx) {
  return CycloValue(ctx.ell, p);
}
template <>
inline FieldValue specialize_as<FieldValue>(const LaurentPoly& p, const FieldContext& ctx) {
  return specialize(p, ctx);
}

}  // namespace qschur
