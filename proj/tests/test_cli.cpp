#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

fs::path scratch_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("zqc_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  const auto out = scratch_dir() / ("out" + std::to_string(counter));
  const auto err = scratch_dir() / ("err" + std::to_string(counter));
  ++counter;
  const std::string command = env_prefix + " \"" + ZQC_CLI_PATH + "\" " + args + " > \"" +
                              out.string() + "\" 2> \"" + err.string() + "\"";
  const int status = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out);
  result.err = slurp(err);
  return result;
}

} // namespace

TEST_CASE("verify emits a passing report") {
  const auto r = run_cli("verify --q 3 --n 5 --weight 1");
  CHECK(r.exit_code == 0);
  const auto report = json::parse(r.out);
  CHECK(report["verdict"] == "pass");
  CHECK(report["certificates"].size() == 40);
  CHECK(report["params"]["K"] == 9);
  CHECK(report["params"]["M"] == 3);
  CHECK(report["engine"] == "factored");
  CHECK(report["counts"]["violations"] == 0);
  CHECK(report["wall_time_ms"].is_null());
}

TEST_CASE("invalid configurations fail fast with exit 1") {
  const auto even = run_cli("verify --q 2 --n 4");
  CHECK(even.exit_code == 1);
  CHECK(even.err.find("odd") != std::string::npos);
  CHECK(even.out.empty());

  CHECK(run_cli("verify --q 1 --n 3").exit_code == 1);
  CHECK(run_cli("verify --q 3 --n 3 --weight 0").exit_code == 1);
  CHECK(run_cli("verify --q 3 --n 3 --weight 9").exit_code == 1);
  CHECK(run_cli("verify --q 3 --n 3 --engine turbo").exit_code == 1);
  CHECK(run_cli("split --q 2 --n 5 --coordinate c1").exit_code == 1);
  CHECK(run_cli("frobnicate --q 2 --n 3").exit_code == 1);
  CHECK(run_cli("verify --q 3 --n 3 --output /nonexistent-dir/report.json").exit_code == 1);
}

TEST_CASE("violations exit with status 2") {
  const auto r = run_cli("verify --q 3 --n 3 --weight 2");
  CHECK(r.exit_code == 2);
  const auto report = json::parse(r.out);
  CHECK(report["verdict"] == "violation");
  CHECK(report["counts"]["violations"] > 0);
  bool found_witness = false;
  for (const auto& cert : report["certificates"])
    if (cert["status"] == "violation") {
      CHECK(cert.contains("witness"));
      CHECK_FALSE(cert.contains("lambda_table"));
      found_witness = true;
    }
  CHECK(found_witness);
}

TEST_CASE("bound reports the exact rational and the comparison") {
  const auto r = run_cli("bound --q 2 --n 5");
  CHECK(r.exit_code == 0);
  const auto b = json::parse(r.out);
  CHECK(b["bound"]["num"] == 6);
  CHECK(b["bound"]["den"] == 1);
  CHECK(b["KM"] == 8);
  CHECK(b["exceeds"] == true);

  const auto r7 = run_cli("bound --q 2 --n 7");
  const auto b7 = json::parse(r7.out);
  CHECK(b7["bound"]["num"] == 80);
  CHECK(b7["bound"]["den"] == 3);
  CHECK(b7["KM"] == 32);
}

TEST_CASE("identical configs produce byte-identical artifacts") {
  const auto f1 = (scratch_dir() / "det1.json").string();
  const auto f2 = (scratch_dir() / "det2.json").string();
  const auto f3 = (scratch_dir() / "det3.json").string();
  CHECK(run_cli("verify --q 3 --n 3 --weight 2 --parallelism 1 --output \"" + f1 + "\"").exit_code == 2);
  CHECK(run_cli("verify --q 3 --n 3 --weight 2 --parallelism 2 --output \"" + f2 + "\"").exit_code == 2);
  CHECK(run_cli("verify --q 3 --n 3 --weight 2 --output \"" + f3 + "\"",
                "ZQCODES_PARALLELISM=2").exit_code == 2);
  const auto bytes = slurp(f1);
  CHECK(!bytes.empty());
  CHECK(bytes == slurp(f2));
  CHECK(bytes == slurp(f3));
}

TEST_CASE("timing flag switches wall_time_ms from null to a number") {
  const auto r = run_cli("verify --q 2 --n 3 --timing");
  CHECK(r.exit_code == 0);
  const auto report = json::parse(r.out);
  CHECK(report["wall_time_ms"].is_number());
}

TEST_CASE("build emits the exact code artifact") {
  const auto r = run_cli("build --q 2 --n 3");
  CHECK(r.exit_code == 0);
  const auto code = json::parse(r.out);
  CHECK(code["q"] == 2);
  CHECK(code["K"] == 1);
  CHECK(code["M"] == 2);
  REQUIRE(code["inner_codes"].size() == 2);
  const auto& cw = code["inner_codes"][0]["codewords"][0];
  CHECK(cw["norm_exp"] == 3);
  CHECK(cw["label"]["a"] == json::array({0}));
  CHECK(cw["label"]["b"] == json::array({0}));
  REQUIRE(cw["amplitudes"].size() == 8);
  // pair(0,0) (x) psi(0) = (1,1,1,1,1,1,-1,-1); the last two amplitudes are
  // stored in their monomial form w^1 (= -1 for q=2).
  const auto coeff_of = [](const json& amp) { return amp["coeffs"]; };
  CHECK(coeff_of(cw["amplitudes"][0]) == json::parse("[[1,1],[0,1]]"));
  CHECK(coeff_of(cw["amplitudes"][6]) == json::parse("[[0,1],[1,1]]"));
  CHECK(coeff_of(cw["amplitudes"][7]) == json::parse("[[0,1],[1,1]]"));
  CHECK(cw["amplitudes"][6]["approx"] == "-1+0i");
}

TEST_CASE("split emits the candidate code and its report") {
  const auto r = run_cli("split --q 2 --n 5 --coordinate b1");
  CHECK(r.exit_code == 0);
  const auto artifact = json::parse(r.out);
  CHECK(artifact["code"]["K"] == 2);
  CHECK(artifact["code"]["M"] == 4);
  CHECK(artifact["report"]["verdict"] == "pass");

  CHECK(run_cli("split --q 2 --n 3 --coordinate b1").exit_code == 1); // K = 1
}

TEST_CASE("verify-union reports the message-dependent scalar as a violation") {
  const auto r = run_cli("verify-union --q 2 --n 5");
  CHECK(r.exit_code == 2);
  const auto report = json::parse(r.out);
  CHECK(report["check"] == "quantum-union");
  CHECK(report["counts"]["violations"] == 1);
  for (const auto& cert : report["certificates"])
    if (cert["status"] == "violation") {
      CHECK(cert["error"]["support"] == json::array({5}));
      CHECK(cert["error"]["xvec"][4] == 1);
      CHECK(cert["error"]["zvec"][4] == 0);
    }
}
