#pragma once

#include <map>
#include <string>
#include <vector>

#include "qschur/schur.hpp"

namespace qschur {

struct SpecializedWeight {
  Weight mu;
  /// Integral-basis Gram matrix at v = q.
  FieldMatrix gram;
  /// dim Delta(lambda)_mu.
  long delta_rank = 0;
  /// dim L_q(lambda)_mu.
  long rank = 0;
  /// Basis of the mu-component of rad_q, in integral coordinates.
  std::vector<Vec<FieldValue>> radical;
};

struct SpecializedModule {
  Weight lambda;
  FieldContext ctx;
  /// Same order as the weight spaces of the module.
  std::vector<SpecializedWeight> weights;
  long dim_delta = 0;
  long dim_l = 0;
  std::map<Weight, long> char_delta;
  std::map<Weight, long> char_l;
};

SpecializedModule specialize_module(const CellModule& m, const FieldContext& ctx);

/// Rows and columns indexed by pi in flag order; d[row][col] = d_{lambda mu}.
struct DecompositionMatrix {
  std::vector<Weight> order;
  std::vector<std::vector<long>> d;

  [[nodiscard]] bool is_identity() const;
};

/// Peels characters of simples off each standard character, highest
/// remaining weight first. `specialized` is indexed like the flag of s. Throws
/// InconsistentCharacters on a negative or leftover multiplicity.
DecompositionMatrix decomposition_matrix(const SchurAlgebra& s, const std::vector<SpecializedModule>& specialized);

struct CyclotomicFactor {
  int ell = 0;
  int exponent = 0;
};

struct GramDeterminantRecord {
  Weight lambda;
  Weight mu;
  /// Shifted to lowest exponent 0 with positive leading coefficient.
  LaurentPoly det;
  std::vector<CyclotomicFactor> factors;
  LaurentPoly residual;
};

/// p * v^-low(p) times the sign of its leading coefficient.
LaurentPoly normalize_determinant(const LaurentPoly& p);
/// Phi_l-adic factorization of a normalized polynomial for l <= bound.
std::vector<CyclotomicFactor> cyclotomic_factors(const LaurentPoly& p, int bound, LaurentPoly* residual);

/// Determinant of the generic-basis Gram submatrix of one weight space.
GramDeterminantRecord gram_determinant(const CellModule& m, const WeightSpace& ws, int bound);
/// Determinant of the integral-basis Gram matrix, the discriminant of the
/// divided-power lattice.
GramDeterminantRecord lattice_discriminant(const CellModule& m, const WeightSpace& ws, int bound);

struct VanishingFactor {
  Weight mu;
  /// "Phi_l" or "residual".
  std::string factor;
};

struct SemisimplicityReport {
  FieldContext ctx;
  bool semisimple = true;
  /// Every specialized highest-weight form is nonzero.
  bool quasihereditary_witness = true;
  /// Per lambda, the weight spaces whose discriminant vanishes at ctx.
  std::map<Weight, std::vector<VanishingFactor>> vanishing;
};

SemisimplicityReport semisimplicity_report(const SchurAlgebra& s, const FieldContext& ctx, int bound = 50);

/// Every specialized divided power E_i^(a), F_i^(a) (a <= max_power) maps
/// the radical into the radical.
Check radical_submodule_check(const CellModule& m, const SpecializedModule& specialized, int max_power);

}  // namespace qschur
