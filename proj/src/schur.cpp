#include "qschur/schur.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <random>
#include <set>
#include <thread>

#include "qschur/linalg.hpp"
#include "qschur/quantum.hpp"

namespace qschur {

// ---------------------------------------------------------------- BlockMatrix

BlockMatrix BlockMatrix::zero(const std::vector<Eigen::Index>& dims) {
  BlockMatrix m;
  for (Eigen::Index d : dims) m.blocks.push_back(QvMatrix::Constant(d, d, RatFunc()));
  return m;
}

BlockMatrix BlockMatrix::identity(const std::vector<Eigen::Index>& dims) {
  BlockMatrix m;
  for (Eigen::Index d : dims) {
    QvMatrix b = QvMatrix::Constant(d, d, RatFunc());
    for (Eigen::Index k = 0; k < d; ++k) b(k, k) = RatFunc(1);
    m.blocks.push_back(std::move(b));
  }
  return m;
}

bool BlockMatrix::is_zero() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const QvMatrix& b) { return is_zero_matrix<RatFunc>(b); });
}

BlockMatrix BlockMatrix::scaled(const RatFunc& c) const {
  BlockMatrix out = *this;
  for (auto& b : out.blocks)
    for (Eigen::Index i = 0; i < b.rows(); ++i)
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (!b(i, j).is_zero()) b(i, j) *= c;
  return out;
}

BlockMatrix& BlockMatrix::operator+=(const BlockMatrix& o) {
  for (std::size_t k = 0; k < blocks.size(); ++k) blocks[k] += o.blocks[k];
  return *this;
}

BlockMatrix& BlockMatrix::operator-=(const BlockMatrix& o) {
  for (std::size_t k = 0; k < blocks.size(); ++k) blocks[k] -= o.blocks[k];
  return *this;
}

BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b) {
  BlockMatrix out;
  out.blocks.reserve(a.blocks.size());
  for (std::size_t k = 0; k < a.blocks.size(); ++k) out.blocks.push_back(multiply<RatFunc>(a.blocks[k], b.blocks[k]));
  return out;
}

bool operator==(const BlockMatrix& a, const BlockMatrix& b) {
  if (a.blocks.size() != b.blocks.size()) return false;
  for (std::size_t k = 0; k < a.blocks.size(); ++k)
    if (!equal<RatFunc>(a.blocks[k], b.blocks[k])) return false;
  return true;
}

BlockMatrix GeneratorSet::idempotent(const Weight& mu) const {
  auto it = idempotents.find(mu);
  return it == idempotents.end() ? BlockMatrix::zero(dims) : it->second;
}

// --------------------------------------------------------------- SchurAlgebra

SchurAlgebra::SchurAlgebra(const RootDatum& datum, const SaturatedSet& pi, const Caps& caps, int threads)
    : datum_(datum), pi_(pi), caps_(caps) {
  if (pi_.empty()) throw ConfigError("the saturated set is empty");
  flag_ = build_flag(datum_, pi_);
  build(threads);
}

SchurAlgebra::SchurAlgebra(const RootDatum& datum, const SaturatedSet& pi, const CosaturatedFlag& flag,
                           const Caps& caps, int threads)
    : datum_(datum), pi_(pi), flag_(flag), caps_(caps) {
  if (pi_.empty()) throw ConfigError("the saturated set is empty");
  if (!is_cosaturated_flag(datum_, pi_, flag_)) throw ConfigError("the ordering is not a cosaturated flag");
  build(threads);
}

void SchurAlgebra::build(int threads) {
  if (!is_saturated(datum_, pi_)) throw ConfigError("the weight set is not saturated");
  weights_ = orbit_union(datum_, pi_.elements, caps_.max_orbit);
  const std::size_t m = flag_.order.size();
  modules_.resize(m);
  std::vector<std::exception_ptr> errors(m);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < m;) {
      try {
        modules_[k] = std::make_unique<CellModule>(datum_, flag_.order[k], caps_);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const int n = std::max(1, std::min<int>(threads, static_cast<int>(m)));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  // Report the first failure in flag order so errors do not depend on
  // scheduling.
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (const auto& mod : modules_) dims_.push_back(mod->dim());
}

std::size_t SchurAlgebra::module_index(const Weight& lambda) const {
  for (std::size_t k = 0; k < flag_.order.size(); ++k)
    if (flag_.order[k] == lambda) return k;
  throw ConfigError("weight " + weight_to_string(lambda) + " is not in the saturated set");
}

long SchurAlgebra::dim() const {
  long s = 0;
  for (Eigen::Index d : dims_) s += static_cast<long>(d * d);
  return s;
}

BlockMatrix SchurAlgebra::divided(Side side, int i, int a) const {
  if (a == 0) return BlockMatrix::identity(dims_);
  BlockMatrix m;
  for (const auto& mod : modules_) m.blocks.push_back(mod->action(side, i, a));
  return m;
}

BlockMatrix SchurAlgebra::idempotent(const Weight& mu) const {
  BlockMatrix m;
  for (const auto& mod : modules_) m.blocks.push_back(mod->idempotent(mu));
  return m;
}

BlockMatrix SchurAlgebra::k_element(const std::vector<int>& h) const {
  BlockMatrix m = BlockMatrix::zero(dims_);
  for (std::size_t k = 0; k < modules_.size(); ++k)
    for (const auto& ws : modules_[k]->spaces()) {
      const RatFunc c(LaurentPoly::monomial(RootDatum::pairing(h, ws.mu)));
      for (Eigen::Index j = 0; j < ws.rank; ++j) m.blocks[k](ws.offset + j, ws.offset + j) = c;
    }
  return m;
}

BlockMatrix SchurAlgebra::star(const BlockMatrix& x) const {
  BlockMatrix out;
  for (std::size_t k = 0; k < modules_.size(); ++k) {
    const QvMatrix t = x.blocks[k].transpose();
    out.blocks.push_back(multiply<RatFunc>(modules_[k]->gram_inverse(), multiply<RatFunc>(t, modules_[k]->gram_matrix())));
  }
  return out;
}

BlockMatrix SchurAlgebra::word_matrix(const WordVector& w, bool adjoint) const {
  BlockMatrix out = BlockMatrix::zero(dims_);
  for (const auto& [word, c] : w) {
    BlockMatrix m = BlockMatrix::identity(dims_);
    for (const auto& [i, a] : word) m = adjoint ? m * divided(Side::E, i, a) : divided(Side::F, i, a) * m;
    out += m.scaled(RatFunc(c));
  }
  return out;
}

GeneratorSet SchurAlgebra::generators() const {
  GeneratorSet g;
  g.dims = dims_;
  for (int i = 0; i < datum_.r(); ++i) {
    g.e.emplace_back();
    g.f.emplace_back();
    for (int a = 0; a <= caps_.max_divided_power; ++a) {
      g.e.back().push_back(divided(Side::E, i, a));
      g.f.back().push_back(divided(Side::F, i, a));
    }
  }
  for (const Weight& mu : weights_) g.idempotents.emplace(mu, idempotent(mu));
  return g;
}

std::vector<WordVector> SchurAlgebra::module_basis(std::size_t k, BasisChoice choice) const {
  std::vector<WordVector> out;
  const CellModule& mod = *modules_[k];
  for (const auto& ws : mod.spaces()) {
    if (choice == BasisChoice::Generic) {
      for (Eigen::Index b : ws.generic_basis) out.push_back(WordVector{{ws.words[static_cast<std::size_t>(b)], LaurentPoly(1)}});
    } else {
      const IntegralBasis& ib = mod.integral_basis(ws);
      for (Eigen::Index c = 0; c < ib.combos.cols(); ++c) {
        WordVector v;
        for (Eigen::Index w = 0; w < ib.combos.rows(); ++w) add_term(v, ws.words[static_cast<std::size_t>(w)], ib.combos(w, c));
        out.push_back(std::move(v));
      }
    }
  }
  return out;
}

std::vector<CellBasisElement> SchurAlgebra::cellular_basis(BasisChoice choice) const {
  std::vector<CellBasisElement> out;
  for (std::size_t k = 0; k < modules_.size(); ++k) {
    const Weight& lambda = flag_.order[k];
    const auto basis = module_basis(k, choice);
    std::vector<BlockMatrix> left, right;
    const BlockMatrix one = idempotent(lambda);
    for (const auto& b : basis) {
      left.push_back(word_matrix(b, false) * one);
      right.push_back(word_matrix(b, true));
    }
    for (std::size_t p = 0; p < basis.size(); ++p)
      for (std::size_t q = 0; q < basis.size(); ++q)
        out.push_back(CellBasisElement{lambda, basis[p], basis[q], left[p] * right[q]});
  }
  return out;
}

// ------------------------------------------------------------------ checking

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<std::string> VerificationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c.name);
  return out;
}

namespace {

/// Accumulates the cases of one named check, keeping the first failure.
class Recorder {
 public:
  explicit Recorder(std::string name) { check_.name = std::move(name); }
  void expect(bool ok, const std::string& what) {
    ++check_.cases;
    if (!ok && check_.passed) {
      check_.passed = false;
      check_.detail = what;
    }
  }
  void skip(const std::string& why) {
    check_.skipped = true;
    check_.detail = why;
  }
  Check done() { return std::move(check_); }

 private:
  Check check_;
};

RatFunc vpow(int e) { return RatFunc(LaurentPoly::monomial(e)); }
RatFunc rf(const LaurentPoly& p) { return RatFunc(p); }

BlockMatrix power(const BlockMatrix& x, int k, const std::vector<Eigen::Index>& dims) {
  BlockMatrix out = BlockMatrix::identity(dims);
  for (int s = 0; s < k; ++s) out = out * x;
  return out;
}

Weight shift(const RootDatum& dt, const Weight& mu, int i, int a) {
  std::vector<int> c(static_cast<std::size_t>(dt.r()), 0);
  c[static_cast<std::size_t>(i)] = a;
  return dt.add_roots(mu, c);
}

std::string at(int i, const Weight& mu) { return "i=" + std::to_string(i + 1) + " mu=" + weight_to_string(mu); }

/// +-pi^(i): the values <alpha_i^v, mu> over W pi, ascending.
std::vector<int> rank_one_weights(const SchurAlgebra& s, int i) {
  std::set<int> n;
  for (const Weight& mu : s.weights()) n.insert(s.datum().pairing(i, mu));
  return {n.begin(), n.end()};
}

BlockMatrix rank_one_idempotent(const SchurAlgebra& s, const GeneratorSet& g, int i, int n) {
  BlockMatrix out = BlockMatrix::zero(g.dims);
  for (const Weight& mu : s.weights())
    if (s.datum().pairing(i, mu) == n) out += g.idempotent(mu);
  return out;
}

std::vector<int> kbar_h(const RootDatum& dt, int i, int sign) {
  std::vector<int> h = dt.alphav(i);
  for (int& x : h) x *= sign * dt.d(i);
  return h;
}

}  // namespace

VerificationReport verify_relations(const SchurAlgebra& s) { return verify_relations(s, s.generators()); }

VerificationReport verify_relations(const SchurAlgebra& s, const GeneratorSet& g) {
  const RootDatum& dt = s.datum();
  const auto& dims = g.dims;
  const int r = dt.r();
  const int cap = static_cast<int>(g.e.empty() ? 0 : g.e[0].size()) - 1;
  const BlockMatrix one = BlockMatrix::identity(dims);
  VerificationReport rep;

  {
    Recorder c("relation (a): orthogonal idempotents summing to 1");
    BlockMatrix sum = BlockMatrix::zero(dims);
    for (const auto& [mu, p] : g.idempotents) {
      sum += p;
      for (const auto& [nu, q] : g.idempotents)
        c.expect(p * q == (mu == nu ? p : BlockMatrix::zero(dims)),
                 "1_" + weight_to_string(mu) + " 1_" + weight_to_string(nu));
    }
    c.expect(sum == one, "sum of idempotents");
    rep.checks.push_back(c.done());
  }
  {
    Recorder c("relation (b): E_i F_j - F_j E_i");
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        BlockMatrix rhs = BlockMatrix::zero(dims);
        if (i == j)
          for (const auto& [mu, p] : g.idempotents) rhs += p.scaled(rf(quantum_integer(dt.pairing(i, mu), dt.d(i))));
        c.expect(g.e[i][1] * g.f[j][1] - g.f[j][1] * g.e[i][1] == rhs,
                 "i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1));
      }
    rep.checks.push_back(c.done());
  }
  {
    Recorder c("relation (c): weight shifts");
    for (int i = 0; i < r; ++i)
      for (const auto& [mu, p] : g.idempotents) {
        const BlockMatrix& e = g.e[i][1];
        const BlockMatrix& f = g.f[i][1];
        c.expect(e * p == g.idempotent(shift(dt, mu, i, 1)) * e, "E_i 1_mu " + at(i, mu));
        c.expect(p * e == e * g.idempotent(shift(dt, mu, i, -1)), "1_mu E_i " + at(i, mu));
        c.expect(f * p == g.idempotent(shift(dt, mu, i, -1)) * f, "F_i 1_mu " + at(i, mu));
        c.expect(p * f == f * g.idempotent(shift(dt, mu, i, 1)), "1_mu F_i " + at(i, mu));
      }
    rep.checks.push_back(c.done());
  }
  {
    Recorder c("divided powers: X^a = [a]! X^(a)");
    for (int i = 0; i < r; ++i)
      for (int a = 0; a <= cap; ++a) {
        const RatFunc fact = rf(quantum_factorial(a, dt.d(i)));
        c.expect(power(g.e[i][1], a, dims) == g.e[i][a].scaled(fact), "E i=" + std::to_string(i + 1) + " a=" + std::to_string(a));
        c.expect(power(g.f[i][1], a, dims) == g.f[i][a].scaled(fact), "F i=" + std::to_string(i + 1) + " a=" + std::to_string(a));
      }
    rep.checks.push_back(c.done());
  }
  {
    Recorder ca("divided-power commutation (a)"), cb("divided-power commutation (b)"), cc("divided-power commutation (c)");
    for (int i = 0; i < r; ++i)
      for (const auto& [mu, p] : g.idempotents) {
        const int h = dt.pairing(i, mu);
        for (int a = 0; a <= cap; ++a) {
          ca.expect(g.e[i][a] * p == g.idempotent(shift(dt, mu, i, a)) * g.e[i][a], "E " + at(i, mu));
          ca.expect(g.f[i][a] * p == g.idempotent(shift(dt, mu, i, -a)) * g.f[i][a], "F " + at(i, mu));
          for (int b = 0; b <= cap; ++b) {
            BlockMatrix rb = BlockMatrix::zero(dims), rc = BlockMatrix::zero(dims);
            for (int t = 0; t <= std::min(a, b); ++t) {
              rb += (g.f[i][b - t] * g.e[i][a - t] * p).scaled(rf(quantum_binomial(a - b + h, t, dt.d(i))));
              rc += (g.e[i][a - t] * g.f[i][b - t] * p).scaled(rf(quantum_binomial(b - a - h, t, dt.d(i))));
            }
            const std::string where = at(i, mu) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
            cb.expect(g.e[i][a] * g.f[i][b] * p == rb, where);
            cc.expect(g.f[i][b] * g.e[i][a] * p == rc, where);
          }
        }
      }
    rep.checks.push_back(ca.done());
    rep.checks.push_back(cb.done());
    rep.checks.push_back(cc.done());
  }
  {
    Recorder ce("quantum Serre relation for E"), cf("quantum Serre relation for F"), cad("ad-expansion identity");
    if (r < 2) {
      ce.skip("rank 1");
      cf.skip("rank 1");
      cad.skip("rank 1");
    }
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        if (i == j) continue;
        const int m = 1 - dt.a(i, j);
        BlockMatrix se = BlockMatrix::zero(dims), sf = se;
        for (int t = 0; t <= m; ++t) {
          const RatFunc c = rf(quantum_binomial(m, t, dt.d(i))) * RatFunc(t % 2 == 0 ? 1 : -1);
          se += (power(g.e[i][1], m - t, dims) * g.e[j][1] * power(g.e[i][1], t, dims)).scaled(c);
          sf += (power(g.f[i][1], m - t, dims) * g.f[j][1] * power(g.f[i][1], t, dims)).scaled(c);
        }
        const std::string where = "i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1);
        ce.expect(se.is_zero(), where);
        cf.expect(sf.is_zero(), where);
        // Iterated (ad E_i) with the K_i-bar conjugation, against the
        // alternating expansion.
        const BlockMatrix kb = s.k_element(kbar_h(dt, i, 1));
        const BlockMatrix kbi = s.k_element(kbar_h(dt, i, -1));
        BlockMatrix x = g.e[j][1];
        for (int k = 0; k < m; ++k) x = g.e[i][1] * x - kb * x * kbi * g.e[i][1];
        cad.expect(x == se, where);
        cad.expect(kb * g.e[j][1] * kbi == g.e[j][1].scaled(vpow(dt.d(i) * dt.a(i, j))), "ad K " + where);
        cad.expect(((g.f[i][1] * g.e[j][1] - g.e[j][1] * g.f[i][1]) * kb).is_zero(), "ad F " + where);
      }
    rep.checks.push_back(ce.done());
    rep.checks.push_back(cf.done());
    rep.checks.push_back(cad.done());
  }
  {
    Recorder c("K_i-bar relations");
    for (int i = 0; i < r; ++i) {
      const BlockMatrix kb = s.k_element(kbar_h(dt, i, 1));
      const BlockMatrix kbi = s.k_element(kbar_h(dt, i, -1));
      const RatFunc vi = vpow(dt.d(i));
      const RatFunc denom = vi - vpow(-dt.d(i));
      for (int j = 0; j < r; ++j) {
        const std::string where = "i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1);
        BlockMatrix rhs = BlockMatrix::zero(dims);
        if (i == j) rhs = (kb - kbi).scaled(denom.inverse());
        c.expect(g.e[i][1] * g.f[j][1] - g.f[j][1] * g.e[i][1] == rhs, "commutator " + where);
        c.expect(kb * g.e[j][1] * kbi == g.e[j][1].scaled(vpow(dt.d(i) * dt.a(i, j))), "K E K^-1 " + where);
        c.expect(kb * g.f[j][1] * kbi == g.f[j][1].scaled(vpow(-dt.d(i) * dt.a(i, j))), "K F K^-1 " + where);
      }
    }
    rep.checks.push_back(c.done());
  }
  {
    Recorder c("rank-one subalgebra relations");
    for (int i = 0; i < r; ++i) {
      const auto ns = rank_one_weights(s, i);
      const std::set<int> nset(ns.begin(), ns.end());
      const int di = dt.d(i);
      std::map<int, BlockMatrix> p;
      for (int n : ns) p.emplace(n, rank_one_idempotent(s, g, i, n));
      auto idem = [&](int n) { return nset.count(n) ? p.at(n) : BlockMatrix::zero(dims); };
      const BlockMatrix& e = g.e[i][1];
      const BlockMatrix& f = g.f[i][1];
      const std::string where = "i=" + std::to_string(i + 1);
      BlockMatrix sum = BlockMatrix::zero(dims), comm = sum;
      for (int m : ns) {
        sum += p.at(m);
        comm += p.at(m).scaled(rf(quantum_integer(m, di)));
        for (int n : ns) c.expect(p.at(m) * p.at(n) == (m == n ? p.at(n) : BlockMatrix::zero(dims)), "(a) " + where);
        c.expect(e * p.at(m) == idem(m + 2) * e, "(c) E 1_n " + where);
        c.expect(p.at(m) * e == e * idem(m - 2), "(c) 1_n E " + where);
        c.expect(f * p.at(m) == idem(m - 2) * f, "(c) F 1_n " + where);
        c.expect(p.at(m) * f == f * idem(m + 2), "(c) 1_n F " + where);
      }
      c.expect(sum == BlockMatrix::identity(dims), "(a) completeness " + where);
      c.expect(e * f - f * e == comm, "(b) " + where);

      // The K_i-bar presentation and the interpolation formula for 1_n.
      const BlockMatrix kb = s.k_element(kbar_h(dt, i, 1));
      const BlockMatrix kbi = s.k_element(kbar_h(dt, i, -1));
      BlockMatrix kb_sum = BlockMatrix::zero(dims);
      for (int n : ns) kb_sum += p.at(n).scaled(vpow(di * n));
      c.expect(kb == kb_sum, "K-bar as sum of 1_n " + where);
      c.expect(kb * kbi == BlockMatrix::identity(dims), "K K^-1 " + where);
      c.expect(kb * e * kbi == e.scaled(vpow(2 * di)), "K E K^-1 " + where);
      c.expect(kb * f * kbi == f.scaled(vpow(-2 * di)), "K F K^-1 " + where);
      for (int n : ns) {
        BlockMatrix prod = BlockMatrix::identity(dims);
        for (int m : ns) {
          if (m == n) continue;
          const RatFunc inv = (vpow(di * n) - vpow(di * m)).inverse();
          prod = prod * (kb - BlockMatrix::identity(dims).scaled(vpow(di * m))).scaled(inv);
        }
        c.expect(prod == p.at(n), "interpolation for 1_n " + where + " n=" + std::to_string(n));
      }
    }
    rep.checks.push_back(c.done());
  }
  {
    Recorder c("K_h multiplicativity");
    c.expect(s.k_element(std::vector<int>(static_cast<std::size_t>(dt.n()), 0)) == BlockMatrix::identity(dims), "K_0 = 1");
    std::mt19937 rng(20240601);
    std::uniform_int_distribution<int> coord(-2, 2);
    for (int k = 0; k < s.caps().samples; ++k) {
      std::vector<int> h(static_cast<std::size_t>(dt.n())), h2(h.size()), hs(h.size());
      for (std::size_t t = 0; t < h.size(); ++t) {
        h[t] = coord(rng);
        h2[t] = coord(rng);
        hs[t] = h[t] + h2[t];
      }
      c.expect(s.k_element(h) * s.k_element(h2) == s.k_element(hs), "sample " + std::to_string(k));
    }
    rep.checks.push_back(c.done());
  }
  {
    Recorder c("minimal polynomial of K_i-bar");
    for (int i = 0; i < r; ++i) {
      const BlockMatrix kb = s.k_element(kbar_h(dt, i, 1));
      BlockMatrix prod = BlockMatrix::identity(dims);
      for (int n : rank_one_weights(s, i)) prod = prod * (kb - BlockMatrix::identity(dims).scaled(vpow(dt.d(i) * n)));
      c.expect(prod.is_zero(), "i=" + std::to_string(i + 1));
    }
    rep.checks.push_back(c.done());
  }
  {
    Recorder c("anti-involution on generators");
    for (int i = 0; i < r; ++i)
      for (int a = 1; a <= cap; ++a) {
        c.expect(s.star(g.e[i][a]) == g.f[i][a], "E^* = F i=" + std::to_string(i + 1));
        c.expect(s.star(g.f[i][a]) == g.e[i][a], "F^* = E i=" + std::to_string(i + 1));
        c.expect(s.star(s.star(g.e[i][a])) == g.e[i][a], "involution i=" + std::to_string(i + 1));
      }
    for (const auto& [mu, p] : g.idempotents) c.expect(s.star(p) == p, "1_mu^* " + weight_to_string(mu));
    rep.checks.push_back(c.done());
  }
  {
    Recorder c("biweight support of generators");
    for (int i = 0; i < r; ++i)
      for (const auto& [mu, p] : g.idempotents)
        for (const auto& [nu, q] : g.idempotents) {
          const bool allowed = shift(dt, nu, i, 1) == mu;
          if (!allowed) {
            c.expect((p * g.e[i][1] * q).is_zero(), "E " + at(i, mu) + " nu=" + weight_to_string(nu));
            c.expect((q * g.f[i][1] * p).is_zero(), "F " + at(i, mu) + " nu=" + weight_to_string(nu));
          }
        }
    rep.checks.push_back(c.done());
  }
  {
    Recorder c("nilpotency of E_i and F_i");
    for (int i = 0; i < r; ++i) {
      int top = 0;
      for (const Weight& mu : s.weights()) top = std::max(top, std::abs(dt.pairing(i, mu)));
      c.expect(power(g.e[i][1], top + 1, dims).is_zero(), "E i=" + std::to_string(i + 1));
      c.expect(power(g.f[i][1], top + 1, dims).is_zero(), "F i=" + std::to_string(i + 1));
    }
    rep.checks.push_back(c.done());
  }
  return rep;
}

VerificationReport verify_cellularity(const SchurAlgebra& s) {
  return verify_cellularity(s, s.cellular_basis(BasisChoice::Generic));
}

VerificationReport verify_cellularity(const SchurAlgebra& s, const std::vector<CellBasisElement>& basis) {
  const RootDatum& dt = s.datum();
  VerificationReport rep;
  const std::size_t blocks = s.module_count();

  {
    Recorder c("independence and dimension count");
    Eigen::Index total = 0;
    for (Eigen::Index d : s.dims()) total += d * d;
    c.expect(static_cast<long>(basis.size()) == s.dim(), "count " + std::to_string(basis.size()) + " vs " + std::to_string(s.dim()));
    QvMatrix flat(static_cast<Eigen::Index>(basis.size()), total);
    for (std::size_t e = 0; e < basis.size(); ++e) {
      Eigen::Index col = 0;
      for (const auto& b : basis[e].matrix.blocks)
        for (Eigen::Index i = 0; i < b.rows(); ++i)
          for (Eigen::Index j = 0; j < b.cols(); ++j) flat(static_cast<Eigen::Index>(e), col++) = b(i, j);
    }
    const Eigen::Index rk = generic_rank(flat);
    c.expect(rk == static_cast<Eigen::Index>(basis.size()) && rk == total, "rank " + std::to_string(rk));
    rep.checks.push_back(c.done());
  }
  {
    Recorder c("triangularity");
    for (const auto& el : basis)
      for (std::size_t k = 0; k < blocks; ++k) {
        const Weight& mu = s.flag().order[k];
        if (dt.dominance_leq(el.lambda, mu)) continue;
        c.expect(is_zero_matrix<RatFunc>(el.matrix.blocks[k]),
                 "cell " + weight_to_string(el.lambda) + " block " + weight_to_string(mu));
      }
    rep.checks.push_back(c.done());
  }
  {
    Recorder c("rank-one tensor structure");
    for (const auto& el : basis) {
      const std::size_t k = s.module_index(el.lambda);
      const CellModule& mod = s.module(k);
      auto coords = [&](const WordVector& v) {
        QvVector x = QvVector::Constant(mod.dim(), RatFunc());
        std::map<Weight, WordVector> by;
        for (const auto& [w, cf] : v) add_term(by[mod.straightener().context().weight_of(w)], w, cf);
        for (const auto& [mu, part] : by) {
          const WeightSpace* ws = mod.space(mu);
          x.segment(ws->offset, ws->rank) = mod.coordinates(*ws, part);
        }
        return x;
      };
      const QvVector l = coords(el.left), rgt = coords(el.right);
      const QvMatrix outer = multiply<RatFunc>(QvMatrix(l), QvMatrix(rgt.transpose()));
      c.expect(equal<RatFunc>(multiply<RatFunc>(el.matrix.blocks[k], mod.gram_inverse()), outer),
               "cell " + weight_to_string(el.lambda));
    }
    rep.checks.push_back(c.done());
  }
  {
    Recorder c("star swaps basis indices");
    std::map<std::tuple<Weight, WordVector, WordVector>, const CellBasisElement*> index;
    for (const auto& el : basis) index.emplace(std::make_tuple(el.lambda, el.left, el.right), &el);
    for (const auto& el : basis) {
      auto it = index.find(std::make_tuple(el.lambda, el.right, el.left));
      c.expect(it != index.end() && s.star(el.matrix) == it->second->matrix, "cell " + weight_to_string(el.lambda));
    }
    rep.checks.push_back(c.done());
  }
  {
    Recorder c("idempotent straightening");
    for (std::size_t k = 0; k < blocks; ++k) {
      const Weight& lambda = s.flag().order[k];
      for (const Weight& target : dt.weyl_orbit(lambda, s.caps().max_orbit)) {
        const auto word = dt.dominant_representative(target).word;
        const IdempotentSandwich sw = idempotent_straighten(dt, word, lambda);
        c.expect(sw.target == target, "target " + weight_to_string(target));
        const CellModule& mod = s.module(k);
        QvMatrix x = mod.idempotent(lambda);
        for (std::size_t t = 0; t < word.size(); ++t) {
          if (sw.exponents[t] == 0) continue;
          x = multiply<RatFunc>(mod.action(Side::F, word[t], sw.exponents[t]), x);
        }
        for (std::size_t t = 0; t < word.size(); ++t) {
          if (sw.exponents[t] == 0) continue;
          x = multiply<RatFunc>(x, mod.action(Side::E, word[t], sw.exponents[t]));
        }
        c.expect(equal<RatFunc>(x, s.module(k).idempotent(target)), "lambda " + weight_to_string(lambda) + " w(lambda) " + weight_to_string(target));
      }
    }
    rep.checks.push_back(c.done());
  }
  {
    Recorder c("rank-one canonical identity");
    if (dt.r() != 1) c.skip("rank " + std::to_string(dt.r()));
    for (std::size_t k = 0; dt.r() == 1 && k < blocks; ++k) {
      const int n = s.flag().order[k][0];
      if (n > 4) continue;
      const CellModule& mod = s.module(k);
      const Eigen::Index d = mod.dim();
      auto op = [&](Side side, int a) {
        return a == 0 ? QvMatrix(QvMatrix::Identity(d, d)) : mod.action(side, 0, a);
      };
      for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) {
          if (a + b < n) continue;
          const QvMatrix lhs = multiply<RatFunc>(multiply<RatFunc>(op(Side::F, b), mod.idempotent({n})), op(Side::E, a));
          QvMatrix rhs = QvMatrix::Constant(d, d, RatFunc());
          for (int t = 0; t <= std::min(a, b); ++t) {
            const QvMatrix term = multiply<RatFunc>(multiply<RatFunc>(op(Side::E, a - t), mod.idempotent({n - 2 * (a + b - t)})),
                                                    op(Side::F, b - t));
            const RatFunc coef = rf(quantum_binomial(a + b - n, t, dt.d(0)));
            for (Eigen::Index i = 0; i < d; ++i)
              for (Eigen::Index j = 0; j < d; ++j)
                if (!term(i, j).is_zero()) rhs(i, j) += coef * term(i, j);
          }
          c.expect(equal<RatFunc>(lhs, rhs), "n=" + std::to_string(n) + " a=" + std::to_string(a) + " b=" + std::to_string(b));
        }
    }
    rep.checks.push_back(c.done());
  }
  return rep;
}

}  // namespace qschur
