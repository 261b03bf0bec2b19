#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "qschur/quantum.hpp"
#include "qschur/straightening.hpp"

using namespace qschur;

namespace {

using Plain = std::vector<int>;
using PlainVector = std::map<Plain, LaurentPoly>;

// E_j on plain monomials F_{s0} ... F_{s(k-1)} x0 by commuting E_j to the
// right with [E_j, F_j] = sum [<alpha_j^v, mu>]_j 1_mu; independent of the
// divided-power route.
PlainVector plain_E(const RootDatum& dt, const Weight& lambda, int j, const PlainVector& v) {
  PlainVector out;
  for (const auto& [s, c] : v) {
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
      if (s[pos] != j) continue;
      Weight mu = lambda;
      for (std::size_t q = pos + 1; q < s.size(); ++q) {
        std::vector<int> e(static_cast<std::size_t>(dt.r()), 0);
        e[static_cast<std::size_t>(s[q])] = 1;
        mu = dt.add_roots(mu, e, -1);
      }
      Plain rest = s;
      rest.erase(rest.begin() + static_cast<long>(pos));
      LaurentPoly x = c * quantum_integer(dt.pairing(j, mu), dt.d(j));
      auto& slot = out[rest];
      slot += x;
      if (slot.is_zero()) out.erase(rest);
    }
  }
  return out;
}

// phi on plain monomials: x0-coefficient of (F_d)^* F_b x0.
LaurentPoly plain_gram(const RootDatum& dt, const Weight& lambda, const Plain& b, const Plain& d) {
  PlainVector v{{b, LaurentPoly(1)}};
  for (int j : d) v = plain_E(dt, lambda, j, v);
  auto it = v.find(Plain{});
  return it == v.end() ? LaurentPoly() : it->second;
}

std::vector<DividedWord> alive_words(const ModuleContext& ctx, int max_len) {
  std::vector<DividedWord> out;
  const int r = ctx.datum().r();
  std::function<void(DividedWord&)> walk = [&](DividedWord& w) {
    out.push_back(w);
    if (static_cast<int>(w.size()) == max_len) return;
    for (int i = 0; i < r; ++i) {
      if (!w.empty() && w.back().first == i) continue;
      for (int a = 1;; ++a) {
        w.emplace_back(i, a);
        const bool alive = ctx.is_alive(w);
        if (alive) walk(w);
        w.pop_back();
        if (!alive) break;
      }
    }
  };
  DividedWord w;
  walk(w);
  return out;
}

}  // namespace

TEST_CASE("word weights and concatenation") {
  RootDatum a1 = RootDatum::preset("A1");
  RootDatum a2 = RootDatum::preset("A2");
  CHECK(word_weight({}, 2) == std::vector<int>{0, 0});
  CHECK(a1.add_roots(a1.zero(), word_weight({{0, 2}}, 1)) == Weight{4});
  CHECK(a2.add_roots(a2.zero(), word_weight({{0, 1}, {1, 1}}, 2)) == Weight{1, 1});
  CHECK(concat_divided(a2, {}, 1, 3) == WordVector{{{{1, 3}}, LaurentPoly(1)}});
  CHECK(concat_divided(a1, {{0, 1}}, 0, 1) == WordVector{{{{0, 2}}, quantum_integer(2)}});
  CHECK(concat_divided(a2, {{0, 1}}, 1, 1) == WordVector{{{{0, 1}, {1, 1}}, LaurentPoly(1)}});
}

TEST_CASE("aliveness") {
  ModuleContext ctx(RootDatum::preset("A1"), {2});
  CHECK(ctx.is_alive({}));
  CHECK_FALSE(ctx.is_alive({{0, 3}}));
  CHECK(ctx.is_alive({{0, 2}}));
  CHECK(ctx.weights() == WeightSet{{-2}, {0}, {2}});
}

TEST_CASE("push examples") {
  ModuleContext c2(RootDatum::preset("A1"), {2});
  Straightener s2(c2);
  CHECK(s2.push_E(0, 1, {{0, 2}}) == WordVector{{{{0, 1}}, LaurentPoly(1)}});
  for (int n = 1; n <= 6; ++n) {
    Straightener s(ModuleContext(RootDatum::preset("A1"), {n}));
    CHECK(s.push_E(0, 1, {{0, 1}}) == WordVector{{DividedWord{}, quantum_integer(n)}});
  }
  Straightener s3(ModuleContext(RootDatum::preset("A2"), {1, 0}));
  CHECK(s3.push_E(1, 1, {{0, 1}}).empty());
}

TEST_CASE("gram examples") {
  for (int n = 0; n <= 6; ++n) {
    Straightener s(ModuleContext(RootDatum::preset("A1"), {n}));
    CHECK(s.gram_entry({}, {}).is_one());
    for (int t = 1; t <= n; ++t) CHECK(s.gram_entry({{0, t}}, {{0, t}}) == quantum_binomial(n, t));
    if (n >= 2) CHECK(s.gram_entry({{0, 1}}, {{0, 2}}).is_zero());
  }
  // A2, lambda = (1,1), weight (0,0): words F2 F1 x0 and F1 F2 x0.
  Straightener s(ModuleContext(RootDatum::preset("A2"), {1, 1}));
  const DividedWord b1{{0, 1}, {1, 1}}, b2{{1, 1}, {0, 1}};
  CHECK(s.gram_entry(b1, b1) == quantum_integer(2));
  CHECK(s.gram_entry(b1, b2).is_one());
  CHECK(s.gram_entry(b2, b1).is_one());
  CHECK(s.gram_entry(b2, b2) == quantum_integer(2));
}

TEST_CASE("idempotent straightening exponents") {
  RootDatum a1 = RootDatum::preset("A1");
  RootDatum a2 = RootDatum::preset("A2");
  for (int n = 0; n <= 5; ++n) {
    auto s = idempotent_straighten(a1, {0}, {n});
    CHECK(s.exponents == std::vector<int>{n});
    CHECK(s.target == Weight{-n});
  }
  CHECK(idempotent_straighten(a2, {}, {1, 0}).exponents.empty());
  auto s = idempotent_straighten(a2, {0, 1}, {1, 0});
  CHECK(s.exponents == std::vector<int>{1, 1});
  CHECK(s.target == Weight{0, -1});
  CHECK_THROWS_AS(idempotent_straighten(a1, {0, 0}, {2}), NonReducedWord);
}

TEST_CASE("gram symmetry, contravariance and agreement with the plain-word oracle") {
  const std::vector<std::pair<const char*, Weight>> modules = {
      {"A1", {4}}, {"A2", {1, 1}}, {"A2", {2, 0}}, {"B2", {1, 0}}, {"B2", {0, 1}}, {"G2", {1, 0}}, {"A3", {1, 0, 1}}};
  for (const auto& [name, lambda] : modules) {
    RootDatum dt = RootDatum::preset(name);
    Straightener s(ModuleContext(dt, lambda));
    const auto words = alive_words(s.context(), 4);
    std::map<std::vector<int>, std::vector<DividedWord>> by_weight;
    for (const auto& w : words) by_weight[word_weight(w, dt.r())].push_back(w);
    for (const auto& [wt, ws] : by_weight) {
      if (ws.size() > 6) continue;
      for (const auto& b : ws)
        for (const auto& d : ws) CHECK(s.gram_entry(b, d) == s.gram_entry(d, b));
    }
    // phi(F_i x, y) = phi(x, E_i y) for x of weight mu and y of weight mu - alpha_i.
    for (const auto& x : words)
      for (const auto& y : words)
        for (int i = 0; i < dt.r(); ++i) {
          auto wx = word_weight(x, dt.r());
          wx[static_cast<std::size_t>(i)] += 1;
          if (wx != word_weight(y, dt.r())) continue;
          const WordVector fx = s.apply_F(i, 1, {{x, LaurentPoly(1)}});
          const WordVector ey = s.push_E(i, 1, y);
          CHECK(s.pairing(fx, {{y, LaurentPoly(1)}}) == s.pairing({{x, LaurentPoly(1)}}, ey));
        }
    // Plain words all of whose factors have exponent 1.
    for (const auto& b : words) {
      if (std::any_of(b.begin(), b.end(), [](const Factor& f) { return f.second != 1; })) continue;
      for (const auto& d : words) {
        if (std::any_of(d.begin(), d.end(), [](const Factor& f) { return f.second != 1; })) continue;
        Plain pb, pd;
        for (auto it = b.rbegin(); it != b.rend(); ++it) pb.push_back(it->first);
        for (auto it = d.rbegin(); it != d.rend(); ++it) pd.push_back(it->first);
        CHECK(s.gram_entry(b, d) == plain_gram(dt, lambda, pb, pd));
      }
    }
  }
}

TEST_CASE("plain E-action agrees with the divided-power route") {
  for (const auto& [name, lambda] : std::vector<std::pair<const char*, Weight>>{{"A2", {2, 1}}, {"B2", {1, 1}}, {"A1", {5}}}) {
    RootDatum dt = RootDatum::preset(name);
    Straightener s(ModuleContext(dt, lambda));
    std::vector<Plain> seqs{{}};
    for (int len = 1; len <= 4; ++len) {
      std::vector<Plain> next;
      for (const auto& q : seqs)
        if (static_cast<int>(q.size()) == len - 1)
          for (int i = 0; i < dt.r(); ++i) {
            Plain p = q;
            p.insert(p.begin(), i);
            next.push_back(p);
          }
      seqs.insert(seqs.end(), next.begin(), next.end());
    }
    for (const auto& seq : seqs) {
      // The commutation formula presumes every intermediate idempotent is nonzero.
      Weight mu = lambda;
      bool alive = true;
      for (auto it = seq.rbegin(); it != seq.rend() && alive; ++it) {
        std::vector<int> e(static_cast<std::size_t>(dt.r()), 0);
        e[static_cast<std::size_t>(*it)] = 1;
        mu = dt.add_roots(mu, e, -1);
        alive = s.context().contains(mu);
      }
      if (!alive) continue;
      for (int j = 0; j < dt.r(); ++j) {
        // Left side: divided route, dead words dropped.
        WordVector v;
        for (const auto& [w, c] : plain_word(dt, seq))
          if (s.context().is_alive(w)) add_term(v, w, c);
        const WordVector lhs = s.apply_E(j, 1, v);
        // Right side: plain oracle, then respelled.
        WordVector rhs;
        for (const auto& [p, c] : plain_E(dt, lambda, j, {{seq, LaurentPoly(1)}}))
          for (const auto& [w, c2] : plain_word(dt, p))
            if (s.context().is_alive(w)) add_term(rhs, w, c * c2);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("plain and divided powers, weights of pushes") {
  RootDatum dt = RootDatum::preset("B2");
  Straightener s(ModuleContext(dt, {2, 1}));
  const auto words = alive_words(s.context(), 3);
  for (const auto& b : words)
    for (int i = 0; i < dt.r(); ++i)
      for (int a = 1; a <= 3; ++a) {
        WordVector lhs{{b, LaurentPoly(1)}};
        for (int k = 0; k < a; ++k) {
          WordVector next;
          for (const auto& [w, c] : lhs)
            for (const auto& [w2, c2] : concat_divided(dt, w, i, 1)) add_term(next, w2, c * c2);
          lhs = std::move(next);
        }
        CHECK(lhs == scale(concat_divided(dt, b, i, a), quantum_factorial(a, dt.d(i))));
        auto target = word_weight(b, dt.r());
        target[static_cast<std::size_t>(i)] -= a;
        for (const auto& [w, c] : s.push_E(i, a, b)) CHECK(word_weight(w, dt.r()) == target);
      }
}

TEST_CASE("F^(b) E^(a) reordering on rank-1 modules") {
  RootDatum a1 = RootDatum::preset("A1");
  for (int n = 0; n <= 6; ++n) {
    Straightener s(ModuleContext(a1, {n}));
    for (int c = 0; c <= n; ++c) {
      const DividedWord x = c ? DividedWord{{0, c}} : DividedWord{};
      const int mu = n - 2 * c;
      for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
          const WordVector lhs = s.apply_F(0, b, s.push_E(0, a, x));
          WordVector rhs;
          for (int t = 0; t <= std::min(a, b); ++t) {
            const LaurentPoly coef = quantum_binomial(b - a - mu, t);
            rhs = add(rhs, s.apply_E(0, a - t, s.apply_F(0, b - t, {{x, LaurentPoly(1)}})), coef);
          }
          INFO("n=", n, " c=", c, " a=", a, " b=", b);
          CHECK(lhs == rhs);
        }
    }
  }
}
