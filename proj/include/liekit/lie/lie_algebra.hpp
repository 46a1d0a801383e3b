#pragma once

#include <functional>
#include <vector>

#include "liekit/lie/lie_group.hpp"

namespace liekit {

using BracketFn = std::function<VectorField(const VectorField&, const VectorField&)>;

inline BracketFn default_bracket() { return [](const VectorField& a, const VectorField& b) { return lie_bracket(a, b); }; }

struct LieAlgebraReport {
  double bilinearity = 0.0;
  double alternating = 0.0;
  double jacobi = 0.0;
  bool bilinear = false;
  bool alternates = false;
  bool jacobi_holds = false;
  bool passed = false;
};

/// Bilinearity (in each slot, with real scalings and sums), [x,x] = 0 and the
/// Jacobi identity, componentwise at the carrier samples.
LieAlgebraReport lie_algebra_check(const std::vector<VectorField>& elements, const BracketFn& bracket, double tol);

struct SubalgebraReport {
  /// coefficients[i][j] expresses [sub_i, sub_j] in the sub basis.
  std::vector<std::vector<Vector>> coefficients;
  double span_residual = 0.0;     // brackets against the span
  double closure_residual = 0.0;  // sampled sums and scalings against the span
  bool passed = false;
};

inline constexpr double kRankTol = 1e-9;

/// Least-squares membership of every pairwise bracket (and of sampled linear
/// combinations) in the span of `sub`, using component values at the carrier
/// samples. Throws InconclusiveSpan when the sample matrix is rank deficient.
SubalgebraReport lie_subalgebra_check(const std::vector<VectorField>& sub, const std::vector<VectorField>& ambient,
                                      const BracketFn& bracket, double tol);

struct LieAlgebraOf {
  std::vector<VectorField> basis;  // left-invariant extensions of e_i at the unit
  std::vector<FieldSmoothnessReport> smoothness;
  InvarianceReport invariance;
  LieAlgebraReport algebra;
  SubalgebraReport closure;
  bool passed = false;
};

struct LieAlgebraTolerances {
  double invariance = 1e-6;
  double algebra = 1e-5;
  double span = 1e-6;
};

/// Builds the left-invariant basis and runs every check on it. The result is
/// returned even when a check fails.
LieAlgebraOf lie_algebra_of(const LieGroup& g, const ProbeOptions& options = {}, const LieAlgebraTolerances& tol = {},
                            std::size_t n_translations = 8);

}  // namespace liekit
