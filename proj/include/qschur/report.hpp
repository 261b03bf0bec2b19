#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qschur/schur.hpp"

namespace qschur {

using Json = nlohmann::json;

inline constexpr const char* kEngineName = "qschur";
inline constexpr const char* kEngineVersion = "1.0.0";

/// One job: a datum, the seeds of pi, a field and the engine caps. Either
/// `preset` or `cartan` is set, never both.
struct JobConfig {
  std::optional<std::string> preset;
  std::optional<int> rank;
  std::optional<IntMatrix> cartan;
  std::optional<IntMatrix> alpha;
  std::optional<IntMatrix> alphav;
  std::vector<Weight> seeds;
  FieldContext field;
  Caps caps;
  std::optional<std::string> out;
};

/// Validates a config document. Unknown keys and malformed values raise
/// ConfigError naming the JSON pointer of the offending entry.
JobConfig parse_config(const Json& doc);
/// Same from text; syntax errors carry the byte offset.
JobConfig parse_config_text(std::string_view text);
/// Canonical echo, accepted back by parse_config.
Json config_to_json(const JobConfig& c);

/// Symmetrizes a Cartan matrix with the smallest positive integer d and
/// returns the dot matrix d_i a_ij. Throws NotFiniteType if impossible.
IntMatrix symmetrize_cartan(const IntMatrix& a);
/// Throws CapExceeded above caps.max_rank.
RootDatum resolve_datum(const JobConfig& c);

/// Parses "c1,c2,...".
Weight parse_weight(std::string_view text);

struct RunOptions {
  /// Restricts module and gram to one lambda; every lambda in pi otherwise.
  std::optional<Weight> lambda;
  /// Include action or basis matrices in module and cellbasis payloads.
  bool matrices = false;
  BasisChoice basis = BasisChoice::Generic;
  int threads = 1;
};

struct CommandResult {
  Json report;
  /// 0 success, 1 verification failure.
  int exit_code = 0;
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"datum", "saturate", "module", "gram",
                                                 "cellbasis", "specialize", "decomp", "verify"};
  return names;
}

/// Runs one subcommand. Config problems (including lambda outside pi) are
/// thrown as engine errors for the caller to map to exit code 2.
CommandResult run_command(const std::string& command, const JobConfig& config, const RunOptions& options);

/// Errors that reflect a bad request rather than an engine fault.
bool is_config_error(const Error& e);

/// Report serialization: object keys sorted, two-space indent, trailing
/// newline.
std::string serialize_report(const Json& report);

// Encoders shared with the tests.
Json weight_json(const Weight& w);
/// [[i, a], ...] in application order with 1-based i.
Json word_json(const DividedWord& w);
Json word_vector_json(const WordVector& v);
Json laurent_matrix_json(const LaurentMatrix& m);
Json ratfunc_matrix_json(const QvMatrix& m);
Json field_matrix_json(const FieldMatrix& m);
Json int_matrix_json(const IntMatrix& m);

}  // namespace qschur
