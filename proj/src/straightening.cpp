#include "qschur/straightening.hpp"

#include <algorithm>

#include "qschur/quantum.hpp"

namespace qschur {

void add_term(WordVector& v, const DividedWord& w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = v.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) v.erase(it);
}

WordVector scale(const WordVector& v, const LaurentPoly& c) {
  WordVector out;
  if (c.is_zero()) return out;
  for (const auto& [w, x] : v) out.emplace(w, x * c);
  return out;
}

WordVector add(const WordVector& a, const WordVector& b, const LaurentPoly& cb) {
  WordVector out = a;
  for (const auto& [w, x] : b) add_term(out, w, x * cb);
  return out;
}

std::vector<int> word_weight(const DividedWord& w, int rank) {
  std::vector<int> c(static_cast<std::size_t>(rank), 0);
  for (const auto& [i, a] : w) c[static_cast<std::size_t>(i)] += a;
  return c;
}

WordVector concat_divided(const RootDatum& datum, const DividedWord& b, int i, int a) {
  WordVector out;
  if (a == 0) {
    out.emplace(b, LaurentPoly(1));
    return out;
  }
  DividedWord w = b;
  if (!w.empty() && w.back().first == i) {
    const int old = w.back().second;
    w.back().second += a;
    out.emplace(std::move(w), quantum_binomial(a + old, a, datum.d(i)));
  } else {
    w.emplace_back(i, a);
    out.emplace(std::move(w), LaurentPoly(1));
  }
  return out;
}

WordVector plain_word(const RootDatum& datum, const std::vector<int>& s) {
  WordVector v{{DividedWord{}, LaurentPoly(1)}};
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    WordVector next;
    for (const auto& [w, c] : v)
      for (const auto& [w2, c2] : concat_divided(datum, w, *it, 1)) add_term(next, w2, c * c2);
    v = std::move(next);
  }
  return v;
}

ModuleContext::ModuleContext(RootDatum datum, Weight lambda, long max_orbit)
    : datum_(std::move(datum)), lambda_(std::move(lambda)) {
  pi_lambda_ = saturate(datum_, {lambda_});
  weights_ = orbit_union(datum_, pi_lambda_.elements, max_orbit);
}

Weight ModuleContext::weight_of(const DividedWord& w) const {
  return datum_.add_roots(lambda_, word_weight(w, datum_.r()), -1);
}

bool ModuleContext::is_alive(const DividedWord& w) const {
  Weight mu = lambda_;
  for (const auto& [i, a] : w) {
    // alpha_i-strings of weights are unbroken, so checking the endpoint of
    // each factor suffices.
    std::vector<int> c(static_cast<std::size_t>(datum_.r()), 0);
    c[static_cast<std::size_t>(i)] = a;
    mu = datum_.add_roots(mu, c, -1);
    if (!contains(mu)) return false;
  }
  return true;
}

WordVector Straightener::alive_only(WordVector v) const {
  for (auto it = v.begin(); it != v.end();) {
    if (ctx_.is_alive(it->first))
      ++it;
    else
      it = v.erase(it);
  }
  return v;
}

WordVector Straightener::apply_F(int i, int a, const WordVector& v) const {
  WordVector out;
  for (const auto& [w, c] : v)
    for (const auto& [w2, c2] : concat_divided(ctx_.datum(), w, i, a)) add_term(out, w2, c * c2);
  return alive_only(std::move(out));
}

WordVector Straightener::push_E(int j, int a, const DividedWord& b) const {
  if (a == 0) return WordVector{{b, LaurentPoly(1)}};
  if (b.empty()) return {};
  const auto key = std::make_tuple(j, a, b);
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  const RootDatum& datum = ctx_.datum();
  const DividedWord prefix(b.begin(), b.end() - 1);
  const auto [i, c] = b.back();
  WordVector out;
  if (i != j) {
    for (const auto& [w, x] : push_E(j, a, prefix))
      for (const auto& [w2, x2] : concat_divided(datum, w, i, c)) add_term(out, w2, x * x2);
  } else {
    // E^(a) F^(c) 1_nu = sum_t [a - c + <alpha_j^v, nu>, t] F^(c-t) E^(a-t) 1_nu.
    const int p = datum.pairing(j, ctx_.weight_of(prefix));
    for (int t = 0; t <= std::min(a, c); ++t) {
      const LaurentPoly coef = quantum_binomial(a - c + p, t, datum.d(j));
      if (coef.is_zero()) continue;
      for (const auto& [w, x] : push_E(j, a - t, prefix)) {
        const LaurentPoly xc = x * coef;
        for (const auto& [w2, x2] : concat_divided(datum, w, j, c - t)) add_term(out, w2, xc * x2);
      }
    }
  }
  out = alive_only(std::move(out));
  std::lock_guard lock(mutex_);
  memo_.emplace(key, out);
  return out;
}

WordVector Straightener::apply_E(int j, int a, const WordVector& v) const {
  WordVector out;
  for (const auto& [w, c] : v)
    for (const auto& [w2, c2] : push_E(j, a, w)) add_term(out, w2, c * c2);
  return out;
}

LaurentPoly Straightener::gram_entry(const DividedWord& b, const DividedWord& d) const {
  const int r = ctx_.datum().r();
  if (word_weight(b, r) != word_weight(d, r)) return {};
  WordVector v{{b, LaurentPoly(1)}};
  for (auto it = d.rbegin(); it != d.rend() && !v.empty(); ++it) v = apply_E(it->first, it->second, v);
  auto it = v.find(DividedWord{});
  return it == v.end() ? LaurentPoly() : it->second;
}

LaurentPoly Straightener::pairing(const WordVector& x, const WordVector& y) const {
  LaurentPoly s;
  for (const auto& [b, cb] : x)
    for (const auto& [d, cd] : y) {
      LaurentPoly g = gram_entry(b, d);
      if (!g.is_zero()) s += cb * cd * g;
    }
  return s;
}

IdempotentSandwich idempotent_straighten(const RootDatum& datum, const std::vector<int>& word, const Weight& lambda) {
  IdempotentSandwich out;
  out.word = word;
  Weight cur = lambda;
  for (std::size_t k = 0; k < word.size(); ++k) {
    const int a = datum.pairing(word[k], cur);
    if (a < 0)
      throw NonReducedWord("exponent " + std::to_string(a) + " at position " + std::to_string(k + 1) +
                           " is negative; the word is not reduced for " + weight_to_string(lambda));
    out.exponents.push_back(a);
    cur = datum.reflect(word[k], cur);
  }
  out.target = cur;
  return out;
}

}  // namespace qschur
