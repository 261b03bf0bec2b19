#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qschur {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Element of Q[v, v^-1], stored sparsely as (exponent, coefficient) pairs
/// sorted by increasing exponent. No stored coefficient is ever zero, so the
/// zero polynomial has no terms and structural equality is value equality.
class LaurentPoly {
 public:
  using Term = std::pair<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(int c);  // NOLINT(google-explicit-constructor): scalar embedding
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(std::initializer_list<Term> terms);

  /// c * v^e.
  static LaurentPoly monomial(int e, const Rational& c = 1);
  /// The indeterminate v.
  static LaurentPoly v() { return monomial(1); }
  /// Builds from arbitrary terms; duplicates are summed and zeros pruned.
  static LaurentPoly from_terms(std::vector<Term> terms);
  /// Dense coefficient vector read as c[0] + c[1] v + ... scaled by v^low.
  static LaurentPoly from_dense(int low, const std::vector<Rational>& c);
  /// Parses the canonical text form produced by to_string().
  static LaurentPoly parse(std::string_view text);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_one() const;
  [[nodiscard]] bool is_constant() const;
  /// True for c * v^k with c != 0, the units of Q[v, v^-1].
  [[nodiscard]] bool is_unit() const { return terms_.size() == 1; }

  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  /// Lowest / highest exponent; undefined for the zero polynomial.
  [[nodiscard]] int low() const { return terms_.front().first; }
  [[nodiscard]] int high() const { return terms_.back().first; }
  [[nodiscard]] const Rational& leading() const { return terms_.back().second; }
  [[nodiscard]] const Rational& trailing() const { return terms_.front().second; }
  /// Euclidean norm of Q[v, v^-1]: high() - low(). Zero has norm -1.
  [[nodiscard]] int span() const { return is_zero() ? -1 : high() - low(); }
  [[nodiscard]] Rational coeff(int e) const;

  /// Multiplication by v^k.
  [[nodiscard]] LaurentPoly shifted(int k) const;
  /// Substitution v -> v^d (d may be negative).
  [[nodiscard]] LaurentPoly substitute_power(int d) const;
  /// The bar involution v -> v^-1.
  [[nodiscard]] LaurentPoly bar() const { return substitute_power(-1); }
  [[nodiscard]] Rational evaluate(const Rational& q) const;
  /// Dense coefficients from low() to high().
  [[nodiscard]] std::vector<Rational> dense() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator*(LaurentPoly a, int c) { return a *= Rational(c); }
  friend LaurentPoly operator*(int c, LaurentPoly a) { return a *= Rational(c); }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  /// Total order (by term list) used only for deterministic containers.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

  /// Canonical text: descending exponents, e.g. "v^2 + 1 + v^-2", "-1/2*v".
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

/// Division with remainder for the Euclidean norm span(): a = q * b + r with
/// span(r) < span(b). Throws std::domain_error on b == 0.
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);

/// Exact quotient a / b in Q[v, v^-1]; throws std::domain_error when b does
/// not divide a.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// True when b divides a in Q[v, v^-1].
bool divides(const LaurentPoly& b, const LaurentPoly& a);

/// Scales p by a unit so that low() == 0 and the leading coefficient is 1.
/// Returns the normalized polynomial; `unit` (if given) receives u with
/// p == u * result.
LaurentPoly unit_normalize(const LaurentPoly& p, LaurentPoly* unit = nullptr);

/// Monic gcd in Q[v, v^-1], normalized by unit_normalize. gcd(0, 0) == 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Canonical rational text: "3", "-1/2".
std::string rational_to_string(const Rational& q);
/// Accepts "a", "-a", "a/b" (b != 0); throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

}  // namespace qschur
