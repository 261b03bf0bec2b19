#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "qschur/report.hpp"

using namespace qschur;

namespace {

JobConfig job(const std::string& text) { return parse_config_text(text); }

Json run(const std::string& cmd, const std::string& text, RunOptions o = {}) {
  return run_command(cmd, job(text), o).report;
}

std::string config_error(const std::string& text) {
  try {
    (void)job(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

struct Process {
  int exit_code = -1;
  std::string out;
};

Process invoke(const std::string& args) {
  const std::string cmd = std::string(QSCHUR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Process p;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) p.out.append(buf.data(), n);
  const int status = pclose(pipe);
  p.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = "qschur_cli_test_" + name + ".json";
  std::ofstream(path) << text;
  return path;
}

const char* kA1 = R"({"datum": {"preset": "A1"}, "pi": {"seeds": [[2], [1]]}})";
const char* kA2 = R"({"datum": {"preset": "A2"}, "pi": {"seeds": [[1, 1]]}})";

}  // namespace

TEST_CASE("config parsing and validation") {
  const JobConfig a = job(R"({"datum": {"preset": "A", "rank": 2}, "pi": {"seeds": [[1, 0]]}, "field": "q=3/2",
                              "caps": {"max_divided_power": 2}})");
  CHECK(*a.preset == "A");
  CHECK(*a.rank == 2);
  CHECK(a.seeds == std::vector<Weight>{{1, 0}});
  CHECK(a.field == FieldContext::rational(Rational(3, 2)));
  CHECK(a.caps.max_divided_power == 2);
  CHECK(a.caps.samples == 50);
  CHECK(resolve_datum(a).name() == "A2");

  CHECK(config_error(R"({"datum": {"preset": "A1"}, "extra": 1})") == "/extra: unknown key");
  CHECK(config_error(R"({"datum": {"preset": "A1", "colour": 1}})") == "/datum/colour: unknown key");
  CHECK(config_error(R"({"datum": {"preset": "A1"}, "caps": {"speed": 1}})") == "/caps/speed: unknown key");
  CHECK(config_error(R"({"datum": {"preset": "A1"}, "pi": {"seeds": [[1], ["x"]]}})") ==
        "/pi/seeds/1/0: expected an integer");
  CHECK(config_error(R"({"pi": {}})") == "/datum: missing");
  CHECK(config_error(R"({"datum": {"preset": "A1", "cartan": [[2]]}})") == "/datum: give exactly one of preset and cartan");
  CHECK(config_error(R"({"datum": {"cartan": [[2, -1], [-1]]}})") == "/datum/cartan/1: ragged row");
  CHECK(config_error(R"({"datum": {"preset": "A1"}, "caps": {"samples": 0}})") == "/caps/samples: must be positive");
  CHECK(config_error(R"({"datum": {"preset": "A1"}, "field": "q=0"})").rfind("/field:", 0) == 0);
  CHECK(config_error(R"({"datum": )").rfind("syntax error at byte", 0) == 0);
  CHECK_THROWS_AS((void)job(R"({"datum": {"preset": "A1"}, "field": "char=3"})"), UnsupportedCharacteristic);
  CHECK(job(R"({"datum": {"preset": "A1"}, "field": "char=0"})").field == FieldContext::generic());
}

TEST_CASE("config echo round-trips") {
  for (const char* text : {kA1, kA2,
                           R"({"datum": {"cartan": [[2, -1], [-3, 2]], "alpha": [[2, -1], [-3, 2]],
                                         "alphav": [[1, 0], [0, 1]]}, "field": "cyclotomic=5", "out": "x.json"})"}) {
    const Json echo = config_to_json(job(text));
    CHECK(config_to_json(parse_config(echo)) == echo);
  }
}

TEST_CASE("Cartan symmetrization") {
  IntMatrix b2(2, 2);
  b2 << 2, -1, -2, 2;
  IntMatrix dot_b2(2, 2);
  dot_b2 << 4, -2, -2, 2;
  CHECK(symmetrize_cartan(b2) == dot_b2);
  IntMatrix g2(2, 2);
  g2 << 2, -3, -1, 2;
  IntMatrix dot_g2(2, 2);
  dot_g2 << 2, -3, -3, 6;
  CHECK(symmetrize_cartan(g2) == dot_g2);
  IntMatrix bad(3, 3);
  bad << 2, -1, -1, -2, 2, -1, -1, -1, 2;
  CHECK_THROWS_AS((void)symmetrize_cartan(bad), NotFiniteType);
  IntMatrix zero_pattern(2, 2);
  zero_pattern << 2, 0, -1, 2;
  CHECK_THROWS_AS((void)symmetrize_cartan(zero_pattern), NotFiniteType);
}

TEST_CASE("datum command") {
  const Json a2 = run("datum", kA2)["payload"];
  CHECK(a2["weyl_order"] == "6");
  CHECK(a2["positive_roots"].size() == 3);
  CHECK(run("datum", kA1)["payload"]["weyl_order"] == "2");
  // The explicit simply connected G2 datum agrees with the preset.
  const Json g2 = run("datum", R"({"datum": {"preset": "G2"}})")["payload"];
  const Json ex = run("datum", R"({"datum": {"cartan": [[2, -3], [-1, 2]]}})")["payload"];
  for (const char* key : {"cartan", "d", "alpha", "alphav", "weyl_order", "positive_roots"}) CHECK(g2[key] == ex[key]);
  CHECK(g2["weyl_order"] == "12");
  try {
    (void)run("datum", R"({"datum": {"cartan": [[2, -2], [-2, 2]]}})");
    FAIL("affine matrix accepted");
  } catch (const NotFiniteType& e) {
    CHECK(is_config_error(e));
  }
  CHECK_THROWS_AS((void)run("datum", R"({"datum": {"preset": "A5"}, "caps": {"max_rank": 4}})"), CapExceeded);
  CHECK_THROWS_AS((void)run("datum", R"({"datum": {"preset": "A2", "rank": 3}})"), ConfigError);
}

TEST_CASE("saturate command") {
  const Json a1 = run("saturate", R"({"datum": {"preset": "A1"}, "pi": {"seeds": [[4]]}})")["payload"];
  CHECK(a1["pi"] == Json::parse("[[4], [2], [0]]"));
  CHECK(a1["flag"] == Json::parse("[[4], [2], [0]]"));
  CHECK(run("saturate", kA2)["payload"]["pi"].size() == 2);
  const Json empty = run("saturate", R"({"datum": {"preset": "A2"}})")["payload"];
  CHECK(empty["pi"].empty());
  CHECK(empty["flag"].empty());
  CHECK_THROWS_AS((void)run("saturate", R"({"datum": {"preset": "A2"}, "pi": {"seeds": [[-1, 0]]}})"), NonDominantSeed);
}

TEST_CASE("module and gram commands") {
  RunOptions o;
  o.lambda = Weight{2};
  o.matrices = true;
  const Json m = run("module", kA1, o)["payload"]["modules"];
  REQUIRE(m.size() == 1);
  CHECK(m[0]["dim"] == 3);
  CHECK(m[0]["weight_spaces"][1]["words"] == Json::parse("[[[1, 1]]]"));
  CHECK(m[0]["actions"][1]["matrix"] == Json::parse(R"([["0", "0", "0"], ["1", "0", "0"], ["0", "v + v^-1", "0"]])"));
  o.lambda = Weight{3};
  CHECK_THROWS_AS((void)run("module", kA1, o), ConfigError);
  o.lambda = Weight{1, 1};
  CHECK_THROWS_AS((void)run("module", kA1, o), ConfigError);

  o.lambda = Weight{2};
  const Json g = run("gram", kA1, o)["payload"]["modules"][0]["weight_spaces"][1];
  CHECK(g["gram"] == Json::parse(R"([["v + v^-1"]])"));
  CHECK(g["determinant"]["det"] == "v^2 + 1");
  CHECK(g["determinant"]["cyclotomic_factors"] == Json::parse(R"([{"ell": 4, "exponent": 1}])"));
  // Without --lambda every module of pi is reported, in flag order.
  CHECK(run("gram", kA1)["payload"]["modules"].size() == 3);
}

TEST_CASE("cellbasis, specialize and decomp commands") {
  const Json cb = run("cellbasis", kA2)["payload"];
  CHECK(cb["dim"] == 65);
  CHECK(cb["elements"].size() == 65);
  RunOptions integral;
  integral.basis = BasisChoice::Integral;
  CHECK(run("cellbasis", kA2, integral)["payload"]["basis"] == "integral");

  const std::string at4 = R"({"datum": {"preset": "A1"}, "pi": {"seeds": [[2]]}, "field": "cyclotomic=4"})";
  const Json sp = run("specialize", at4)["payload"]["modules"];
  std::vector<long> dims;
  for (const auto& mod : sp) dims.push_back(mod["dim_l"].get<long>());
  CHECK(sp[0]["lambda"] == Json::parse("[2]"));
  CHECK(sp[0]["weights"][1]["radical"] == Json::parse(R"([["1"]])"));
  const Json d = run("decomp", at4)["payload"];
  CHECK(d["order"] == Json::parse("[[2], [0]]"));
  CHECK(d["matrix"] == Json::parse("[[1, 1], [0, 1]]"));
  CHECK(d["semisimple"] == false);
  CHECK(run("decomp", kA2)["payload"]["semisimple"] == true);
  CHECK_THROWS_AS((void)run("decomp", R"({"datum": {"preset": "A1"}})"), ConfigError);
}

TEST_CASE("verify command is deterministic across thread counts") {
  RunOptions one, many;
  many.threads = 4;
  const CommandResult a = run_command("verify", job(kA2), one);
  const CommandResult b = run_command("verify", job(kA2), many);
  CHECK(a.exit_code == 0);
  CHECK(a.report["payload"]["passed"] == true);
  CHECK(serialize_report(a.report) == serialize_report(b.report));
  const CommandResult specialized = run_command("verify", job(R"({"datum": {"preset": "A1"}, "pi": {"seeds": [[2]]},
                                                             "field": "cyclotomic=4"})"), one);
  CHECK(specialized.exit_code == 0);
  CHECK(specialized.report["payload"]["specialization"]["radical_submodule"].size() == 2);
}

TEST_CASE("reports re-parse and re-serialize identically") {
  for (const auto& cmd : command_names()) {
    const std::string text = serialize_report(run(cmd, kA1));
    CHECK(serialize_report(Json::parse(text)) == text);
  }
}

TEST_CASE("binary exit codes and output") {
  const std::string a1 = write_temp("a1", kA1);
  const Process ok = invoke("decomp --config " + a1 + " --field cyclotomic=4");
  CHECK(ok.exit_code == 0);
  const Json r = Json::parse(ok.out);
  CHECK(r["payload"]["field"] == "cyclotomic=4");
  CHECK(r["config"]["field"] == "cyclotomic=4");
  CHECK(invoke("module --config " + a1 + " --lambda 3").exit_code == 2);
  CHECK(invoke("module --config " + a1 + " --lambda x").exit_code == 2);
  CHECK(invoke("frobnicate --config " + a1).exit_code == 2);
  CHECK(invoke("datum").exit_code == 2);
  CHECK(invoke("datum --config missing_file.json").exit_code == 2);
  CHECK(invoke("datum --config " + a1 + " --field char=5").exit_code == 2);
  CHECK(invoke("datum --config " + write_temp("bad", R"({"datum": {"preset": "A1"}, "x": 0})")).exit_code == 2);
  CHECK(invoke("datum --config " + write_temp("affine", R"({"datum": {"cartan": [[2, -2], [-2, 2]]}})")).exit_code == 2);

  const Process v1 = invoke("verify --config " + a1 + " --threads 1");
  const Process v3 = invoke("verify --config " + a1 + " --threads 3");
  CHECK(v1.exit_code == 0);
  CHECK(v1.out == v3.out);

  const Process to_file = invoke("saturate --config " + a1 + " --out qschur_cli_test_out.json");
  CHECK(to_file.exit_code == 0);
  CHECK(to_file.out.empty());
  std::ifstream in("qschur_cli_test_out.json");
  const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(Json::parse(written)["command"] == "saturate");
}
