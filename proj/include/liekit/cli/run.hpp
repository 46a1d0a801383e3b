#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liekit/geometry/chart.hpp"
#include "liekit/models/spaces.hpp"

namespace liekit {

/// Bad command line or model description. The CLI maps it to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kSeedEnv = "LIEKIT_SEED";

struct RunConfig {
  std::string model = "euclidean:2";  // euclidean:n | gl:n | file:<path>
  std::size_t order = 3;
  std::size_t samples = 16;
  std::optional<double> tol;  // overrides every threshold when set
  std::uint64_t seed = 0;
  std::string format = "text";  // text | json
  std::string output;           // empty: standard output
};

/// Throws UsageError.
void validate_config(const RunConfig& config);
/// Parses the seed override from the environment value, if any.
std::optional<std::uint64_t> parse_seed(const char* text);

struct GroupSpec {
  RealMap times;
  Vector unit;
  RealMap inverse;
};

struct ModelSpec {
  std::string name;
  std::vector<Chart> charts;
  std::optional<GroupSpec> group;
  std::vector<DiffeoFixture> fixtures;
};

/// Built-in models or a JSON model file. Throws UsageError for unknown
/// names and ParseError for malformed files.
ModelSpec load_model(const RunConfig& config);

/// Per-check thresholds; a configured tol replaces all of them.
struct Thresholds {
  double probe = 1e-5;
  double axioms = 1e-9;
  double action = 1e-9;
  double diff_group = 1e-9;
  double antisymmetry = 1e-10;
  double routes = 1e-6;
  double leibniz = 1e-7;
  double jacobi = 1e-5;
  double invariance = 1e-6;
  double span = 1e-6;

  static Thresholds from(const RunConfig& config);
};

struct CheckResult {
  std::string name;
  std::string anchor;
  bool passed = false;
  double max_residual = 0.0;
  std::size_t samples = 0;
  double threshold = 0.0;
  std::string note;
};

struct VerifyResult {
  RunConfig config;
  std::vector<CheckResult> checks;
  /// coefficients[i][j] of [X_i, X_j] in the left-invariant basis.
  std::optional<std::vector<std::vector<Vector>>> structure_constants;
  bool passed = false;
};

/// Runs the suites in a fixed order. Throws UsageError / ParseError for
/// configuration problems only; check failures are recorded.
VerifyResult run_verify(const RunConfig& config);

std::string render_text(const VerifyResult& result);
std::string render_json(const VerifyResult& result);

struct BracketResult {
  std::string model;
  Vector point;
  Vector coordinate;  // coordinate formula
  Vector derivation;  // X(Y x_i) - Y(X x_i) on the chart coordinates
  double discrepancy = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

/// Throws ParseError / UsageError for bad input and OutOfDomain when the point
/// is outside the carrier.
BracketResult run_bracket(const RunConfig& config, std::string_view field_x, std::string_view field_y,
                          std::string_view point);

std::string render_text(const BracketResult& result);
std::string render_json(const BracketResult& result);

}  // namespace liekit
