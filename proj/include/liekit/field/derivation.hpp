#pragma once

#include <functional>
#include <string>
#include <vector>

#include "liekit/field/vector_field.hpp"

namespace liekit {

/// An operator on scalar functions of the ambient space.
struct Derivation {
  std::function<RealMap(const RealMap&)> action;
  std::string name;

  RealMap operator()(const RealMap& f) const { return action(f); }
};

/// f -> X f.
Derivation derivation_of(const VectorField& x);

inline constexpr double kDerivationTol = 1e-8;

struct DerivationReport {
  double linearity_residual = 0.0;
  double leibniz_residual = 0.0;
  SmoothnessReport smoothness;  // D f probed on the carrier for every battery f
  bool linear = false;
  bool leibniz = false;
  bool passed = false;
  std::string counterexample;  // first failing clause, if any
};

/// Linearity (sums and real scalings), the Leibniz rule D(fg) = f Dg + g Df
/// at carrier samples, and smoothness of every D f. Residuals are scaled by
/// 1 + |reference value|.
DerivationReport is_derivation_check(const Derivation& d, const Manifold& m, const std::vector<RealMap>& fs,
                                     const std::vector<RealMap>& gs, const ProbeOptions& options = {},
                                     double tol = kDerivationTol);

/// The field whose components in chart c are D applied to c's coordinate
/// functions, read at c^-1(u).
VectorField vf_of_derivation(const Derivation& d, const Manifold& m);

}  // namespace liekit
