#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qschur/cell_module.hpp"

namespace qschur {

/// Element of the block model: one square Q(v) block per cell module, in
/// flag order.
struct BlockMatrix {
  std::vector<QvMatrix> blocks;

  static BlockMatrix zero(const std::vector<Eigen::Index>& dims);
  static BlockMatrix identity(const std::vector<Eigen::Index>& dims);

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] BlockMatrix scaled(const RatFunc& c) const;

  BlockMatrix& operator+=(const BlockMatrix& o);
  BlockMatrix& operator-=(const BlockMatrix& o);
  friend BlockMatrix operator+(BlockMatrix a, const BlockMatrix& b) { return a += b; }
  friend BlockMatrix operator-(BlockMatrix a, const BlockMatrix& b) { return a -= b; }
  friend BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b);
  friend bool operator==(const BlockMatrix& a, const BlockMatrix& b);
};

/// Generator images used by the verification suites. Copyable so tests can
/// corrupt an entry and watch the suite fail.
struct GeneratorSet {
  /// e[i][a] = rho(E_i^(a)) for 0 <= a <= max_power; likewise f.
  std::vector<std::vector<BlockMatrix>> e;
  std::vector<std::vector<BlockMatrix>> f;
  /// rho(1_mu) for every mu in W pi.
  std::map<Weight, BlockMatrix> idempotents;
  std::vector<Eigen::Index> dims;

  /// 1_mu, or zero when mu is outside W pi.
  [[nodiscard]] BlockMatrix idempotent(const Weight& mu) const;
};

enum class BasisChoice { Generic, Integral };

struct CellBasisElement {
  Weight lambda;
  WordVector left;
  WordVector right;
  BlockMatrix matrix;
};

/// Faithful model of S(pi) as the direct sum of the endomorphism algebras of
/// its cell modules.
class SchurAlgebra {
 public:
  /// Builds the cell modules, `threads` at a time. Throws on an empty pi.
  SchurAlgebra(const RootDatum& datum, const SaturatedSet& pi, const Caps& caps = {}, int threads = 1);
  /// Same with an explicit flag (a cosaturated ordering of pi).
  SchurAlgebra(const RootDatum& datum, const SaturatedSet& pi, const CosaturatedFlag& flag, const Caps& caps,
               int threads);

  [[nodiscard]] const RootDatum& datum() const { return datum_; }
  [[nodiscard]] const SaturatedSet& pi() const { return pi_; }
  [[nodiscard]] const CosaturatedFlag& flag() const { return flag_; }
  [[nodiscard]] const Caps& caps() const { return caps_; }
  /// W pi.
  [[nodiscard]] const WeightSet& weights() const { return weights_; }
  /// Modules in flag order.
  [[nodiscard]] const CellModule& module(std::size_t k) const { return *modules_[k]; }
  [[nodiscard]] std::size_t module_count() const { return modules_.size(); }
  /// Position of lambda in the flag; throws ConfigError if lambda is not in pi.
  [[nodiscard]] std::size_t module_index(const Weight& lambda) const;
  [[nodiscard]] const std::vector<Eigen::Index>& dims() const { return dims_; }
  /// sum of (dim Delta(lambda))^2.
  [[nodiscard]] long dim() const;

  [[nodiscard]] BlockMatrix divided(Side side, int i, int a) const;
  [[nodiscard]] BlockMatrix idempotent(const Weight& mu) const;
  /// K_h = sum_mu v^<h, mu> 1_mu for h in X^v-coordinates.
  [[nodiscard]] BlockMatrix k_element(const std::vector<int>& h) const;
  /// Per block: G^-1 x^T G.
  [[nodiscard]] BlockMatrix star(const BlockMatrix& x) const;
  /// rho of a word combination F_B (or its adjoint E-spelling when
  /// `adjoint`).
  [[nodiscard]] BlockMatrix word_matrix(const WordVector& w, bool adjoint) const;

  [[nodiscard]] GeneratorSet generators() const;
  /// b' 1_lambda b^* for every lambda in flag order and every ordered pair of
  /// basis vectors of Delta(lambda), the row index b' varying slowest.
  [[nodiscard]] std::vector<CellBasisElement> cellular_basis(BasisChoice choice = BasisChoice::Generic) const;
  /// Basis vectors of Delta(lambda) as word combinations.
  [[nodiscard]] std::vector<WordVector> module_basis(std::size_t k, BasisChoice choice) const;

 private:
  void build(int threads);

  RootDatum datum_;
  SaturatedSet pi_;
  CosaturatedFlag flag_;
  Caps caps_;
  WeightSet weights_;
  std::vector<std::unique_ptr<CellModule>> modules_;
  std::vector<Eigen::Index> dims_;
};

struct Check {
  std::string name;
  bool passed = true;
  bool skipped = false;
  long cases = 0;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;

  [[nodiscard]] bool passed() const;
  /// Names of the failed checks, in suite order.
  [[nodiscard]] std::vector<std::string> failures() const;
};

/// Defining relations, divided-power commutation, quantum Serre relations,
/// the ad-expansion identity, the rank-one subalgebra presentations, K_h
/// multiplicativity and the minimal polynomial of each K_i-bar.
VerificationReport verify_relations(const SchurAlgebra& s, const GeneratorSet& g);
VerificationReport verify_relations(const SchurAlgebra& s);

/// Independence and count, triangularity, the rank-one tensor structure,
/// star symmetry, idempotent straightening and the rank-one canonical
/// identity.
VerificationReport verify_cellularity(const SchurAlgebra& s, const std::vector<CellBasisElement>& basis);
VerificationReport verify_cellularity(const SchurAlgebra& s);

}  // namespace qschur
