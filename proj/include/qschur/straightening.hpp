#pragma once

#include <map>
#include <mutex>
#include <tuple>
#include <utility>
#include <vector>

#include "qschur/laurent.hpp"
#include "qschur/root_datum.hpp"

namespace qschur {

/// (i, a) stands for F_i^(a).
using Factor = std::pair<int, int>;
/// Factors listed innermost first: ((i1,a1),...,(ir,ar)) is
/// F_ir^(ar) ... F_i1^(a1) x0. Adjacent indices differ.
using DividedWord = std::vector<Factor>;
/// Finite combination of words; no stored coefficient is zero.
using WordVector = std::map<DividedWord, LaurentPoly>;

void add_term(WordVector& v, const DividedWord& w, const LaurentPoly& c);
WordVector scale(const WordVector& v, const LaurentPoly& c);
WordVector add(const WordVector& a, const WordVector& b, const LaurentPoly& cb = 1);

/// sum a_k e_{i_k} in root coordinates.
std::vector<int> word_weight(const DividedWord& w, int rank);

/// F_i^(a) F_B: merges into the last factor when its index is i, with
/// coefficient [a + b choose a]_i.
WordVector concat_divided(const RootDatum& datum, const DividedWord& b, int i, int a);

/// Spell of a plain monomial F_{s[0]} F_{s[1]} ... F_{s[k-1]} x0 (s[k-1]
/// acts first) as a combination of merged divided words.
WordVector plain_word(const RootDatum& datum, const std::vector<int>& s);

/// lambda together with the weights W pi_lambda that can carry nonzero vectors.
class ModuleContext {
 public:
  ModuleContext(RootDatum datum, Weight lambda, long max_orbit = 10000);

  [[nodiscard]] const RootDatum& datum() const { return datum_; }
  [[nodiscard]] const Weight& lambda() const { return lambda_; }
  [[nodiscard]] const SaturatedSet& pi_lambda() const { return pi_lambda_; }
  [[nodiscard]] const WeightSet& weights() const { return weights_; }
  [[nodiscard]] bool contains(const Weight& mu) const { return weights_.count(mu) != 0; }

  /// lambda - wt(w).
  [[nodiscard]] Weight weight_of(const DividedWord& w) const;
  /// Every prefix weight lies in W pi_lambda.
  [[nodiscard]] bool is_alive(const DividedWord& w) const;

 private:
  RootDatum datum_;
  Weight lambda_;
  SaturatedSet pi_lambda_;
  WeightSet weights_;
};

/// E- and F-action on the divided-word spanning set of the cell module of
/// highest weight lambda. Thread-safe; push results are memoised.
class Straightener {
 public:
  explicit Straightener(ModuleContext ctx) : ctx_(std::move(ctx)) {}

  [[nodiscard]] const ModuleContext& context() const { return ctx_; }

  /// F_i^(a) applied to a vector; dead words are dropped.
  [[nodiscard]] WordVector apply_F(int i, int a, const WordVector& v) const;
  /// E_j^(a) F_B x0 expanded by the divided-power commutation identity.
  [[nodiscard]] WordVector push_E(int j, int a, const DividedWord& b) const;
  [[nodiscard]] WordVector apply_E(int j, int a, const WordVector& v) const;
  /// phi(F_B x0, F_D x0): the x0-coefficient of (F_D)^* F_B x0.
  [[nodiscard]] LaurentPoly gram_entry(const DividedWord& b, const DividedWord& d) const;
  /// Bilinear extension of gram_entry.
  [[nodiscard]] LaurentPoly pairing(const WordVector& x, const WordVector& y) const;

 private:
  [[nodiscard]] WordVector alive_only(WordVector v) const;

  ModuleContext ctx_;
  mutable std::mutex mutex_;
  mutable std::map<std::tuple<int, int, DividedWord>, WordVector> memo_;
};

/// Exponents a_j = <alpha_{i_j}^v, s_{i_{j-1}} ... s_{i_1} lambda> for a word
/// in application order, and the target weight w(lambda).
struct IdempotentSandwich {
  std::vector<int> word;
  std::vector<int> exponents;
  Weight target;
};

/// Throws NonReducedWord when some exponent is negative.
IdempotentSandwich idempotent_straighten(const RootDatum& datum, const std::vector<int>& word, const Weight& lambda);

}  // namespace qschur
