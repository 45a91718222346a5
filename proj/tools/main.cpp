// Command-line front end: build codes, verify detectability, compute the
// distance-2 bound, and perform verified splits, emitting deterministic JSON.
//
// Exit status: 0 on success / verification pass, 1 on invalid configuration,
// 2 when a verification reports a violation.

#include "zqc/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

namespace {

struct RunConfig {
  int q = 0;
  int n = 0;
  int weight = 1;
  std::string engine = "factored";
  int parallelism = 0; // 0 = use all available cores
  std::string output;  // empty = stdout
  std::string coordinate = "b1";
  bool timing = false;
};

constexpr int kExitOk = 0;
constexpr int kExitInvalidConfig = 1;
constexpr int kExitViolation = 2;

int fail(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitInvalidConfig;
}

std::optional<std::string> validate(const RunConfig& cfg, bool takes_weight) {
  if (cfg.q < 2) return "q must be at least 2";
  if (cfg.n % 2 == 0) return "n must be odd";
  if (cfg.n < 3) return "n must be at least 3";
  if (takes_weight && (cfg.weight < 1 || cfg.weight > cfg.n)) return "weight out of range";
  if (cfg.parallelism < 0) return "parallelism must be positive";
  return std::nullopt;
}

std::optional<zqc::SplitCoordinate> parse_coordinate(const std::string& text) {
  if (text.size() < 2 || (text[0] != 'a' && text[0] != 'b')) return std::nullopt;
  int index = 0;
  for (size_t i = 1; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
    index = index * 10 + (text[i] - '0');
  }
  if (index < 1) return std::nullopt;
  return zqc::SplitCoordinate{text[0], index};
}

int threads_from(const RunConfig& cfg) {
  if (cfg.parallelism > 0) return cfg.parallelism;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

zqc::Engine engine_from(const RunConfig& cfg) {
  return cfg.engine == "dense" ? zqc::Engine::Dense : zqc::Engine::Factored;
}

int emit(const zqc::Json& artifact, const std::string& output) {
  const std::string text = artifact.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) return fail("cannot open output file: " + output);
  file << text;
  return file ? kExitOk : fail("failed to write output file: " + output);
}

int run_build(const RunConfig& cfg) {
  return emit(zqc::code_json(zqc::build_hybrid_code(cfg.q, cfg.n)), cfg.output);
}

int run_verify(const RunConfig& cfg, bool union_check) {
  const auto code = zqc::build_hybrid_code(cfg.q, cfg.n);
  const auto report =
      union_check ? zqc::verify_quantum_union(code, cfg.weight, engine_from(cfg), threads_from(cfg))
                  : zqc::verify_hybrid(code, cfg.weight, engine_from(cfg), threads_from(cfg));
  const int status = emit(zqc::report_json(report, cfg.timing), cfg.output);
  if (status != kExitOk) return status;
  return report.pass ? kExitOk : kExitViolation;
}

int run_bound(const RunConfig& cfg) { return emit(zqc::bound_json(cfg.q, cfg.n), cfg.output); }

int run_split(const RunConfig& cfg) {
  const auto coordinate = parse_coordinate(cfg.coordinate);
  if (!coordinate) return fail("split coordinate must look like a1 or b2");
  const auto code = zqc::build_hybrid_code(cfg.q, cfg.n);
  try {
    const auto result = zqc::trivial_split(code, *coordinate, engine_from(cfg), threads_from(cfg));
    return emit(zqc::split_json(result.code, result.report, cfg.timing), cfg.output);
  } catch (const zqc::SplitInvalidError& e) {
    std::cerr << "error: " << e.what() << "\n";
    const int status = emit(zqc::split_json(e.code, e.report, cfg.timing), cfg.output);
    return status == kExitOk ? kExitViolation : status;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid error-detecting codes over Z_q: exact construction and verification"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--q", cfg.q, "local dimension (>= 2)")->required();
    cmd->add_option("--n", cfg.n, "code length (odd, >= 3)")->required();
    cmd->add_option("--output", cfg.output, "output path (default: stdout)");
  };
  auto add_sweep = [&](CLI::App* cmd) {
    cmd->add_option("--engine", cfg.engine, "matrix-element engine (default factored)")
        ->check(CLI::IsMember({"dense", "factored"}));
    cmd->add_option("--parallelism", cfg.parallelism, "worker threads (default: all cores)")
        ->envname("ZQCODES_PARALLELISM");
    cmd->add_flag("--timing", cfg.timing, "include measured wall_time_ms in the report");
  };
  auto add_weight = [&](CLI::App* cmd) {
    cmd->add_option("--weight", cfg.weight, "maximum error weight to sweep (default 1)");
  };

  auto* build = app.add_subcommand("build", "construct the code and emit it as JSON");
  add_common(build);

  auto* verify = app.add_subcommand("verify", "sweep all errors up to the given weight against the hybrid detectability conditions");
  add_common(verify);
  add_sweep(verify);
  add_weight(verify);

  auto* verify_union = app.add_subcommand(
      "verify-union", "sweep the union of all inner codes as a single quantum code");
  add_common(verify_union);
  add_sweep(verify_union);
  add_weight(verify_union);

  auto* bound = app.add_subcommand("bound", "distance-2 bound versus this instance's K*M");
  add_common(bound);

  auto* split = app.add_subcommand("split", "trade one quantum digit for a classical one and re-verify");
  add_common(split);
  add_sweep(split);
  split->add_option("--coordinate", cfg.coordinate,
                    "free label coordinate to split on, e.g. b1 (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidConfig;
  }

  const bool takes_weight = verify->parsed() || verify_union->parsed();
  if (const auto problem = validate(cfg, takes_weight)) return fail(*problem);

  try {
    if (build->parsed()) return run_build(cfg);
    if (verify->parsed()) return run_verify(cfg, false);
    if (verify_union->parsed()) return run_verify(cfg, true);
    if (bound->parsed()) return run_bound(cfg);
    if (split->parsed()) return run_split(cfg);
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  return fail("no command given");
}
