#include "qschur/specialization.hpp"

#include <algorithm>
#include <numeric>

#include "qschur/linalg.hpp"

namespace qschur {

SpecializedModule specialize_module(const CellModule& m, const FieldContext& ctx) {
  SpecializedModule out;
  out.lambda = m.lambda();
  out.ctx = ctx;
  for (const auto& ws : m.spaces()) {
    SpecializedWeight sw;
    sw.mu = ws.mu;
    sw.gram = specialize_matrix<FieldValue>(m.integral_basis(ws).gram, ctx);
    sw.delta_rank = static_cast<long>(ws.rank);
    sw.rank = static_cast<long>(rank<FieldValue>(sw.gram));
    sw.radical = nullspace<FieldValue>(sw.gram);
    out.dim_delta += sw.delta_rank;
    out.dim_l += sw.rank;
    if (sw.delta_rank > 0) out.char_delta[ws.mu] = sw.delta_rank;
    if (sw.rank > 0) out.char_l[ws.mu] = sw.rank;
    out.weights.push_back(std::move(sw));
  }
  return out;
}

bool DecompositionMatrix::is_identity() const {
  for (std::size_t r = 0; r < d.size(); ++r)
    for (std::size_t c = 0; c < d[r].size(); ++c)
      if (d[r][c] != (r == c ? 1 : 0)) return false;
  return true;
}

DecompositionMatrix decomposition_matrix(const SchurAlgebra& s, const std::vector<SpecializedModule>& specialized) {
  const RootDatum& dt = s.datum();
  DecompositionMatrix out;
  out.order = s.flag().order;
  const std::size_t m = out.order.size();
  out.d.assign(m, std::vector<long>(m, 0));
  auto depth = [&](const Weight& lambda, const Weight& mu) {
    Weight diff(mu.size());
    for (std::size_t k = 0; k < mu.size(); ++k) diff[k] = lambda[k] - mu[k];
    const auto rc = dt.root_coordinates(diff);
    return rc ? std::accumulate(rc->begin(), rc->end(), 0) : 0;
  };
  for (std::size_t row = 0; row < m; ++row) {
    const Weight& lambda = out.order[row];
    std::map<Weight, long> residual = specialized[row].char_delta;
    for (;;) {
      const Weight* top = nullptr;
      for (const auto& [mu, c] : residual) {
        if (c == 0) continue;
        if (c < 0)
          throw InconsistentCharacters("negative residue at " + weight_to_string(mu) + " for " + weight_to_string(lambda));
        if (!dt.is_dominant(mu)) continue;
        if (top == nullptr || depth(lambda, mu) < depth(lambda, *top)) top = &mu;
      }
      if (top == nullptr) break;
      const Weight nu = *top;
      const long c = residual[nu];
      const std::size_t col = s.module_index(nu);
      const auto& simple = specialized[col].char_l;
      auto lead = simple.find(nu);
      if (lead == simple.end() || lead->second != 1)
        throw InconsistentCharacters("simple character of " + weight_to_string(nu) + " lacks its highest weight");
      out.d[row][col] += c;
      for (const auto& [mu, k] : simple) residual[mu] -= c * k;
    }
    for (const auto& [mu, c] : residual)
      if (c != 0)
        throw InconsistentCharacters("leftover multiplicity at " + weight_to_string(mu) + " for " + weight_to_string(lambda));
    if (out.d[row][row] != 1) throw InconsistentCharacters("diagonal entry is not 1 for " + weight_to_string(lambda));
  }
  return out;
}

LaurentPoly normalize_determinant(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly out = p.shifted(-p.low());
  if (out.leading() < 0) out = -out;
  return out;
}

std::vector<CyclotomicFactor> cyclotomic_factors(const LaurentPoly& p, int bound, LaurentPoly* residual) {
  std::vector<CyclotomicFactor> out;
  LaurentPoly rest = p;
  for (int ell = 1; ell <= bound && !rest.is_zero() && rest.span() > 0; ++ell) {
    const LaurentPoly phi = cyclotomic_laurent(ell);
    if (phi.span() > rest.span()) continue;
    int e = 0;
    while (rest.span() >= phi.span() && divides(phi, rest)) {
      rest = exact_div(rest, phi);
      ++e;
    }
    if (e > 0) out.push_back({ell, e});
  }
  if (residual) *residual = normalize_determinant(rest);
  return out;
}

namespace {

GramDeterminantRecord record(const CellModule& m, const WeightSpace& ws, const LaurentMatrix& g, int bound) {
  GramDeterminantRecord r;
  r.lambda = m.lambda();
  r.mu = ws.mu;
  r.det = normalize_determinant(determinant<RatFunc>(to_ratfunc(g)).as_laurent());
  r.factors = cyclotomic_factors(r.det, bound, &r.residual);
  return r;
}

}  // namespace

GramDeterminantRecord gram_determinant(const CellModule& m, const WeightSpace& ws, int bound) {
  LaurentMatrix g(ws.rank, ws.rank);
  for (Eigen::Index i = 0; i < ws.rank; ++i)
    for (Eigen::Index j = 0; j < ws.rank; ++j)
      g(i, j) = ws.gram(ws.generic_basis[static_cast<std::size_t>(i)], ws.generic_basis[static_cast<std::size_t>(j)]);
  return record(m, ws, g, bound);
}

GramDeterminantRecord lattice_discriminant(const CellModule& m, const WeightSpace& ws, int bound) {
  return record(m, ws, m.integral_basis(ws).gram, bound);
}

SemisimplicityReport semisimplicity_report(const SchurAlgebra& s, const FieldContext& ctx, int bound) {
  SemisimplicityReport rep;
  rep.ctx = ctx;
  for (std::size_t k = 0; k < s.module_count(); ++k) {
    const CellModule& m = s.module(k);
    auto& list = rep.vanishing[m.lambda()];
    for (const auto& ws : m.spaces()) {
      if (ws.rank == 0) continue;
      const GramDeterminantRecord r = lattice_discriminant(m, ws, bound);
      if (!specialize(r.det, ctx).is_zero()) continue;
      rep.semisimple = false;
      for (const auto& f : r.factors)
        if (specialize(cyclotomic_laurent(f.ell), ctx).is_zero()) list.push_back({ws.mu, "Phi_" + std::to_string(f.ell)});
      if (specialize(r.residual, ctx).is_zero()) list.push_back({ws.mu, "residual"});
    }
    // The highest weight space has Gram matrix [1] in every specialization.
    const FieldMatrix top = specialize_matrix<FieldValue>(m.integral_basis(*m.space(m.lambda())).gram, ctx);
    if (rank<FieldValue>(top) != 1) rep.quasihereditary_witness = false;
  }
  return rep;
}

Check radical_submodule_check(const CellModule& m, const SpecializedModule& specialized, int max_power) {
  Check c;
  c.name = "radical is a submodule";
  const RootDatum& dt = m.datum();
  for (std::size_t k = 0; k < m.spaces().size(); ++k) {
    const WeightSpace& src = m.spaces()[k];
    const SpecializedWeight& ss = specialized.weights[k];
    if (ss.radical.empty()) continue;
    for (int i = 0; i < dt.r(); ++i)
      for (Side side : {Side::E, Side::F})
        for (int a = 1; a <= max_power; ++a) {
          const auto act = m.integral_action(side, i, a, src);
          if (!act || act->rows() == 0) continue;
          const FieldMatrix sa = specialize_matrix<FieldValue>(*act, specialized.ctx);
          std::vector<int> shift(static_cast<std::size_t>(dt.r()), 0);
          shift[static_cast<std::size_t>(i)] = a;
          const Weight target = dt.add_roots(src.mu, shift, side == Side::F ? -1 : 1);
          const auto it = std::find_if(specialized.weights.begin(), specialized.weights.end(),
                                       [&](const SpecializedWeight& w) { return w.mu == target; });
          for (const auto& rv : ss.radical) {
            ++c.cases;
            const FieldMatrix image = multiply<FieldValue>(sa, FieldMatrix(rv));
            const bool ok = is_zero_matrix<FieldValue>(multiply<FieldValue>(it->gram, image));
            if (!ok && c.passed) {
              c.passed = false;
              c.detail = std::string(side == Side::E ? "E" : "F") + "_" + std::to_string(i + 1) + "^(" +
                         std::to_string(a) + ") at " + weight_to_string(src.mu);
            }
          }
        }
  }
  return c;
}

}  // namespace qschur
