#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qschur/report.hpp"

using namespace qschur;

namespace {

constexpr int kExitConfig = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact generalized q-Schur algebra engine"};
  std::string command, config_path, lambda_text, field_text, out_path, basis_text = "generic";
  int depth = 0, threads = 1;
  bool matrices = false, timing = false;
  app.add_option("command", command, "datum | saturate | module | gram | cellbasis | specialize | decomp | verify")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("--config", config_path, "JSON job config")->required();
  app.add_option("--lambda", lambda_text, "restrict module/gram to one weight, \"c1,c2,...\"");
  app.add_option("--field", field_text, "generic | q=FRACTION | cyclotomic=L (overrides the config)");
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--depth", depth, "divided-power depth for the verification suites")->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "worker threads for per-lambda construction")->check(CLI::PositiveNumber);
  app.add_option("--basis", basis_text, "cellular basis for cellbasis")->check(CLI::IsMember({"generic", "integral"}));
  app.add_flag("--matrices", matrices, "include matrices in module and cellbasis reports");
  app.add_flag("--timing", timing, "print wall time to stderr");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    JobConfig config = parse_config_text(read_file(config_path));
    if (!field_text.empty()) config.field = FieldContext::parse(field_text);
    if (depth > 0) config.caps.max_divided_power = depth;
    if (!out_path.empty()) config.out = out_path;
    RunOptions options;
    if (!lambda_text.empty()) options.lambda = parse_weight(lambda_text);
    options.matrices = matrices;
    options.basis = basis_text == "integral" ? BasisChoice::Integral : BasisChoice::Generic;
    options.threads = threads;

    const CommandResult result = run_command(command, config, options);
    const std::string text = serialize_report(result.report);
    if (config.out) {
      std::ofstream out(*config.out, std::ios::binary);
      if (!out) throw ConfigError("cannot write " + *config.out);
      out << text;
    } else {
      std::cout << text;
    }
    if (timing) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
      std::cerr << "qschur " << command << ": " << dt.count() << " s\n";
    }
    if (result.exit_code != 0) std::cerr << "qschur: verification failed\n";
    return result.exit_code;
  } catch (const Error& e) {
    std::cerr << "qschur: " << e.kind() << ": " << e.what() << "\n";
    return is_config_error(e) ? kExitConfig : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qschur: ConfigError: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "qschur: internal error: " << e.what() << "\n";
    return 1;
  }
}
