#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "qschur/laurent.hpp"

namespace qschur {

/// Element of Q(v) in canonical form: num / den with gcd(num, den) a unit,
/// den a polynomial with nonzero constant term and leading coefficient 1.
/// Zero is 0 / 1. Canonical form makes == a structural comparison.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(int c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(LaurentPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when den is zero.
  RatFunc(const LaurentPoly& num, const LaurentPoly& den);

  /// Parses "p" or "(p)/(q)" as produced by to_string().
  static RatFunc parse(std::string_view text);

  [[nodiscard]] const LaurentPoly& num() const { return num_; }
  [[nodiscard]] const LaurentPoly& den() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// True when the value lies in Q[v, v^-1].
  [[nodiscard]] bool is_laurent() const { return den_.is_one(); }
  /// The numerator; throws std::domain_error unless is_laurent().
  [[nodiscard]] const LaurentPoly& as_laurent() const;

  [[nodiscard]] RatFunc inverse() const;
  [[nodiscard]] RatFunc bar() const { return RatFunc(num_.bar(), den_.bar()); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc operator-() const;

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  [[nodiscard]] std::string to_string() const;

 private:
  struct Canonical {};
  RatFunc(LaurentPoly num, LaurentPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }

}  // namespace qschur
