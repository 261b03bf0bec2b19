#include "qschur/quantum.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace qschur {

LaurentPoly quantum_integer(int n, int d) {
  if (d <= 0) throw std::invalid_argument("quantum_integer: d must be positive");
  if (n == 0) return {};
  if (n < 0) return -quantum_integer(-n, d);
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) terms.emplace_back(d * (n - 1 - 2 * k), Rational(1));
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly quantum_factorial(int n, int d) {
  if (n < 0) throw std::invalid_argument("quantum_factorial: negative argument");
  LaurentPoly out(1);
  for (int s = 1; s <= n; ++s) out *= quantum_integer(s, d);
  return out;
}

LaurentPoly quantum_binomial(int a, int t, int d) {
  if (t < 0) throw std::invalid_argument("quantum_binomial: negative t");
  if (d <= 0) throw std::invalid_argument("quantum_binomial: d must be positive");
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, LaurentPoly> cache;
  const auto key = std::make_tuple(a, t, d);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  LaurentPoly out(1);
  for (int s = 1; s <= t && !out.is_zero(); ++s) {
    const int e = a - s + 1;
    LaurentPoly num = LaurentPoly::monomial(d * e) - LaurentPoly::monomial(-d * e);
    LaurentPoly den = LaurentPoly::monomial(d * s) - LaurentPoly::monomial(-d * s);
    out = exact_div(out * num, den);
  }
  std::lock_guard lock(mutex);
  cache.emplace(key, out);
  return out;
}

}  // namespace qschur
