#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "liekit/cli/run.hpp"

using namespace liekit;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void add_common(CLI::App& cmd, RunConfig& config, std::optional<std::uint64_t>& seed, double& tol) {
  cmd.add_option("--model", config.model, "euclidean:n, gl:n or file:<model.json>")->capture_default_str();
  cmd.add_option("--order", config.order, "probe order")->check(CLI::Range(1, 4))->capture_default_str();
  cmd.add_option("--samples", config.samples, "samples per region and probe")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--tol", tol, "replace every check threshold")->check(CLI::PositiveNumber);
  cmd.add_option("--seed", seed, std::string("seed (default: $") + kSeedEnv + " or 0)");
  cmd.add_option("--format", config.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd.add_option("--output", config.output, "write the report here instead of standard output");
}

// Opened before any work so an unwritable path fails fast.
bool emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return static_cast<bool>(std::cout.flush());
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out.flush());
}

bool writable(const std::string& path) {
  if (path.empty()) return true;
  std::ofstream probe(path, std::ios::binary | std::ios::app);
  return static_cast<bool>(probe);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"liekit: numerical checks for manifolds, vector fields and Lie groups"};
  app.require_subcommand(1);

  RunConfig config;
  std::optional<std::uint64_t> seed;
  double tol = 0.0;
  std::string field_x, field_y, point;

  CLI::App* verify = app.add_subcommand("verify", "run every check suite on a model");
  CLI::App* report = app.add_subcommand("report", "run the suites and emit the JSON report");
  CLI::App* bracket = app.add_subcommand("bracket", "Lie bracket of two polynomial fields at a point");
  for (CLI::App* cmd : {verify, report, bracket}) add_common(*cmd, config, seed, tol);
  bracket->add_option("--field-x", field_x, "components of X, e.g. \"1,0\"")->required();
  bracket->add_option("--field-y", field_y, "components of Y, e.g. \"0,x0\"")->required();
  bracket->add_option("--point", point, "comma-separated coordinates")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    CLI::App* used = app.get_subcommands().front();
    if (used->count("--tol") > 0) config.tol = tol;
    config.seed = seed ? *seed : parse_seed(std::getenv(kSeedEnv)).value_or(0);
    if (used == report) config.format = "json";
    validate_config(config);
    if (!writable(config.output)) {
      std::cerr << "liekit: cannot write '" << config.output << "'\n";
      return kExitUsage;
    }

    std::string text;
    bool passed = false;
    if (used == bracket) {
      const BracketResult r = run_bracket(config, field_x, field_y, point);
      text = config.format == "json" ? render_json(r) : render_text(r);
      passed = r.passed;
    } else {
      const VerifyResult r = run_verify(config);
      text = config.format == "json" ? render_json(r) : render_text(r);
      passed = r.passed;
    }
    if (!emit(config.output, text)) {
      std::cerr << "liekit: cannot write '" << config.output << "'\n";
      return kExitUsage;
    }
    return passed ? kExitPass : kExitFail;
  } catch (const UsageError& e) {
    std::cerr << "liekit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "liekit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OutOfDomain& e) {
    std::cerr << "liekit: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "liekit: " << e.what() << "\n";
    return kExitFail;
  }
}
