#include "qschur/cell_module.hpp"

#include <algorithm>
#include <numeric>

#include "qschur/linalg.hpp"

namespace qschur {

namespace {

bool word_order(const DividedWord& a, const DividedWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void enumerate_from(const ModuleContext& ctx, DividedWord& w, const Weight& mu,
                    std::map<Weight, std::vector<DividedWord>>& out) {
  out[mu].push_back(w);
  const RootDatum& datum = ctx.datum();
  for (int i = 0; i < datum.r(); ++i) {
    if (!w.empty() && w.back().first == i) continue;
    std::vector<int> c(static_cast<std::size_t>(datum.r()), 0);
    for (int a = 1;; ++a) {
      c[static_cast<std::size_t>(i)] = a;
      const Weight next = datum.add_roots(mu, c, -1);
      // The alpha_i-string through mu is unbroken, so the first dead exponent
      // ends the run.
      if (!ctx.contains(next)) break;
      w.emplace_back(i, a);
      enumerate_from(ctx, w, next, out);
      w.pop_back();
    }
  }
}

QvMatrix to_qv(const LaurentMatrix& m) { return to_ratfunc(m); }

}  // namespace

std::map<Weight, std::vector<DividedWord>> enumerate_words(const ModuleContext& ctx) {
  std::map<Weight, std::vector<DividedWord>> out;
  for (const Weight& mu : ctx.weights()) out[mu];
  DividedWord w;
  enumerate_from(ctx, w, ctx.lambda(), out);
  for (auto& [mu, words] : out) std::sort(words.begin(), words.end(), word_order);
  return out;
}

LaurentMatrix build_gram(const Straightener& s, const std::vector<DividedWord>& words) {
  const auto n = static_cast<Eigen::Index>(words.size());
  LaurentMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      g(i, j) = s.gram_entry(words[static_cast<std::size_t>(i)], words[static_cast<std::size_t>(j)]);
  return g;
}

std::vector<Eigen::Index> select_generic_basis(const LaurentMatrix& gram) {
  std::vector<Eigen::Index> kept;
  const QvMatrix g = to_qv(gram);
  for (Eigen::Index k = 0; k < g.cols(); ++k) {
    QvMatrix cand(g.rows(), static_cast<Eigen::Index>(kept.size()) + 1);
    for (std::size_t c = 0; c < kept.size(); ++c) cand.col(static_cast<Eigen::Index>(c)) = g.col(kept[c]);
    cand.col(cand.cols() - 1) = g.col(k);
    if (generic_rank(cand) == cand.cols()) kept.push_back(k);
  }
  return kept;
}

namespace {

const RootDatum& within_rank_cap(const RootDatum& datum, const Caps& caps) {
  if (datum.r() > caps.max_rank)
    throw CapExceeded("rank " + std::to_string(datum.r()) + " exceeds max_rank " + std::to_string(caps.max_rank));
  return datum;
}

}  // namespace

CellModule::CellModule(const RootDatum& datum, const Weight& lambda, const Caps& caps)
    : lambda_(lambda), straightener_(ModuleContext(within_rank_cap(datum, caps), lambda, caps.max_orbit)) {
  const ModuleContext& ctx = straightener_.context();
  auto words = enumerate_words(ctx);
  const auto freudenthal = freudenthal_character(datum, lambda);

  std::vector<std::pair<int, Weight>> order;
  for (const auto& [mu, list] : words) {
    std::vector<int> diff(mu.size());
    for (std::size_t k = 0; k < mu.size(); ++k) diff[k] = lambda[k] - mu[k];
    const auto rc = datum.root_coordinates(diff);
    const int h = rc ? std::accumulate(rc->begin(), rc->end(), 0) : 0;
    order.emplace_back(h, mu);
  }
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second > y.second;
  });

  for (const auto& [h, mu] : order) {
    WeightSpace ws;
    ws.mu = mu;
    ws.words = std::move(words[mu]);
    for (std::size_t k = 0; k < ws.words.size(); ++k) ws.index.emplace(ws.words[k], static_cast<Eigen::Index>(k));
    ws.gram = build_gram(straightener_, ws.words);
    ws.generic_basis = select_generic_basis(ws.gram);
    ws.rank = static_cast<Eigen::Index>(ws.generic_basis.size());
    auto it = freudenthal.find(mu);
    const long expected = it == freudenthal.end() ? 0 : it->second;
    if (ws.rank != expected)
      throw RankMismatch("weight " + weight_to_string(mu) + " of the module " + weight_to_string(lambda) +
                         " has Gram rank " + std::to_string(ws.rank) + " but multiplicity " +
                         std::to_string(expected));
    ws.basis_gram = QvMatrix(ws.rank, ws.rank);
    for (Eigen::Index r = 0; r < ws.rank; ++r)
      for (Eigen::Index c = 0; c < ws.rank; ++c)
        ws.basis_gram(r, c) = RatFunc(ws.gram(ws.generic_basis[static_cast<std::size_t>(r)],
                                              ws.generic_basis[static_cast<std::size_t>(c)]));
    auto inv = inverse<RatFunc>(ws.basis_gram);
    if (!inv) throw RankMismatch("singular basis Gram block at weight " + weight_to_string(mu));
    ws.basis_gram_inverse = std::move(*inv);
    ws.offset = dim_;
    dim_ += ws.rank;
    by_weight_.emplace(mu, spaces_.size());
    spaces_.push_back(std::move(ws));
  }

  full_gram_ = QvMatrix::Constant(dim_, dim_, RatFunc());
  full_gram_inverse_ = full_gram_;
  for (const auto& ws : spaces_) {
    full_gram_.block(ws.offset, ws.offset, ws.rank, ws.rank) = ws.basis_gram;
    full_gram_inverse_.block(ws.offset, ws.offset, ws.rank, ws.rank) = ws.basis_gram_inverse;
  }
}

const WeightSpace* CellModule::space(const Weight& mu) const {
  auto it = by_weight_.find(mu);
  return it == by_weight_.end() ? nullptr : &spaces_[it->second];
}

std::map<Weight, long> CellModule::character() const {
  std::map<Weight, long> out;
  for (const auto& ws : spaces_)
    if (ws.rank > 0) out.emplace(ws.mu, static_cast<long>(ws.rank));
  return out;
}

Vec<LaurentPoly> CellModule::pairing_vector(const WeightSpace& ws, const WordVector& v) const {
  Vec<LaurentPoly> p = Vec<LaurentPoly>::Constant(static_cast<Eigen::Index>(ws.words.size()), LaurentPoly());
  for (const auto& [w, c] : v) {
    auto it = ws.index.find(w);
    if (it == ws.index.end()) throw CoordinateFailure("word outside the weight space " + weight_to_string(ws.mu));
    for (Eigen::Index d = 0; d < p.size(); ++d)
      if (!ws.gram(it->second, d).is_zero()) p(d) += c * ws.gram(it->second, d);
  }
  return p;
}

QvVector CellModule::coordinates(const WeightSpace& ws, const WordVector& v) const {
  const Vec<LaurentPoly> p = pairing_vector(ws, v);
  QvVector pb(ws.rank);
  for (Eigen::Index k = 0; k < ws.rank; ++k) pb(k) = RatFunc(p(ws.generic_basis[static_cast<std::size_t>(k)]));
  QvVector c = multiply<RatFunc>(ws.basis_gram_inverse, pb);
  // The recovered vector must pair correctly with every word, not only the
  // basis words.
  for (Eigen::Index d = 0; d < p.size(); ++d) {
    RatFunc s;
    for (Eigen::Index k = 0; k < ws.rank; ++k) {
      const LaurentPoly& g = ws.gram(ws.generic_basis[static_cast<std::size_t>(k)], d);
      if (!g.is_zero() && !c(k).is_zero()) s += c(k) * RatFunc(g);
    }
    if (!(s == RatFunc(p(d))))
      throw CoordinateFailure("vector of weight " + weight_to_string(ws.mu) + " is not in the span of the basis");
  }
  return c;
}

WordVector CellModule::apply(Side side, int i, int a, const WordVector& v) const {
  return side == Side::F ? straightener_.apply_F(i, a, v) : straightener_.apply_E(i, a, v);
}

const QvMatrix& CellModule::action(Side side, int i, int a) const {
  const auto key = std::make_tuple(side, i, a);
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = actions_.find(key); it != actions_.end()) return *it->second;
  }
  auto m = std::make_unique<QvMatrix>(QvMatrix::Constant(dim_, dim_, RatFunc()));
  std::vector<int> shift(static_cast<std::size_t>(datum().r()), 0);
  shift[static_cast<std::size_t>(i)] = a;
  for (const auto& src : spaces_) {
    if (src.rank == 0) continue;
    const WeightSpace* dst = space(datum().add_roots(src.mu, shift, side == Side::F ? -1 : 1));
    if (dst == nullptr || dst->rank == 0) continue;
    for (Eigen::Index k = 0; k < src.rank; ++k) {
      const DividedWord& b = src.words[static_cast<std::size_t>(src.generic_basis[static_cast<std::size_t>(k)])];
      const QvVector c = coordinates(*dst, apply(side, i, a, WordVector{{b, LaurentPoly(1)}}));
      m->block(dst->offset, src.offset + k, dst->rank, 1) = c;
    }
  }
  std::lock_guard lock(cache_mutex_);
  return *actions_.emplace(key, std::move(m)).first->second;
}

QvMatrix CellModule::idempotent(const Weight& mu) const {
  QvMatrix m = QvMatrix::Constant(dim_, dim_, RatFunc());
  if (const WeightSpace* ws = space(mu))
    for (Eigen::Index k = 0; k < ws->rank; ++k) m(ws->offset + k, ws->offset + k) = RatFunc(1);
  return m;
}

const IntegralBasis& CellModule::integral_basis(const WeightSpace& ws) const {
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = integral_.find(ws.mu); it != integral_.end()) return *it->second;
  }
  auto ib = std::make_unique<IntegralBasis>();
  ib->hnf = hnf_column_basis(ws.gram);
  ib->combos = ib->hnf.transform;
  ib->gram = multiply<LaurentPoly>(LaurentMatrix(ib->combos.transpose()), multiply<LaurentPoly>(ws.gram, ib->combos));
  if (ib->combos.cols() != ws.rank)
    throw RankMismatch("integral basis size differs from the rank at weight " + weight_to_string(ws.mu));
  std::lock_guard lock(cache_mutex_);
  return *integral_.emplace(ws.mu, std::move(ib)).first->second;
}

std::optional<LaurentMatrix> CellModule::integral_action(Side side, int i, int a, const WeightSpace& src) const {
  std::vector<int> shift(static_cast<std::size_t>(datum().r()), 0);
  shift[static_cast<std::size_t>(i)] = a;
  const WeightSpace* dst = space(datum().add_roots(src.mu, shift, side == Side::F ? -1 : 1));
  if (dst == nullptr) return std::nullopt;
  const IntegralBasis& is = integral_basis(src);
  const IntegralBasis& id = integral_basis(*dst);
  const auto target_inv = inverse<RatFunc>(to_ratfunc(id.gram));
  if (dst->rank > 0 && !target_inv) throw CoordinateFailure("singular integral Gram at " + weight_to_string(dst->mu));
  LaurentMatrix out = LaurentMatrix::Constant(dst->rank, src.rank, LaurentPoly());
  for (Eigen::Index k = 0; k < src.rank; ++k) {
    WordVector v;
    for (Eigen::Index w = 0; w < is.combos.rows(); ++w) add_term(v, src.words[static_cast<std::size_t>(w)], is.combos(w, k));
    const Vec<LaurentPoly> p = pairing_vector(*dst, apply(side, i, a, v));
    const Vec<LaurentPoly> pt = multiply<LaurentPoly>(LaurentMatrix(id.combos.transpose()), LaurentMatrix(p));
    const QvVector c = multiply<RatFunc>(*target_inv, QvMatrix(to_ratfunc(LaurentMatrix(pt))));
    for (Eigen::Index r = 0; r < dst->rank; ++r) {
      if (!c(r).is_laurent())
        throw CoordinateFailure("divided power leaves the integral lattice at weight " + weight_to_string(dst->mu));
      out(r, k) = c(r).as_laurent();
    }
  }
  return out;
}

}  // namespace qschur
