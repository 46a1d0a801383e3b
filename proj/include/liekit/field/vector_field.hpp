#pragma once

#include <functional>
#include <string>
#include <vector>

#include "liekit/tangent/bundle.hpp"

namespace liekit {

/// A vector field on a manifold, stored as one component map per chart:
/// comps(c) sends chart coordinates u to the components of X at c^-1(u) in
/// c's frame. Outside the carrier the field is undefined and refuses points.
class VectorField {
 public:
  /// comps must have one e -> e map per chart, in chart order.
  VectorField(Manifold m, std::vector<RealMap> comps, std::string name = {});

  /// Field from an ambient map X : R^a -> R^a (for embedded models where the
  /// chart is the identity, this is just X). Per-chart components are
  /// D psi(x) X(x) at x = psi^-1(u).
  static VectorField from_ambient(const Manifold& m, const RealMap& ambient, std::string name = {});
  static VectorField zero(const Manifold& m);

  const Manifold& manifold() const { return manifold_; }
  const RealMap& comps(std::size_t chart_index) const { return comps_.at(chart_index); }
  const RealMap& comps(const std::string& chart_id) const;
  const std::vector<RealMap>& all_comps() const { return comps_; }
  const std::string& name() const { return name_; }

  VectorField operator+(const VectorField& other) const;
  VectorField operator-(const VectorField& other) const;
  VectorField operator*(double s) const;
  friend VectorField operator*(double s, const VectorField& x) { return x * s; }

 private:
  Manifold manifold_;
  std::vector<RealMap> comps_;
  std::string name_;
};

/// X_p in the first chart covering p. Throws OutOfDomain outside the carrier.
TangentVector vf_apply(const VectorField& x, Point p);

/// Components of X at p expressed in chart c (which must cover p).
std::vector<Jet> field_in_chart(const VectorField& x, const Chart& c, std::span<const Jet> u);

/// The function p -> X_p(f). Jet-evaluable; lifting it consumes one extra
/// derivative order of f. Evaluation outside the carrier throws EvaluationError.
RealMap vf_sharp(const VectorField& x, const RealMap& f);

/// X on charts_submanifold(manifold, U).
VectorField vf_restrict(const VectorField& x, const Region& u);

/// Rough-field clause: at each carrier sample, vf_apply yields finite
/// components in a covering chart. Returns the problems found.
std::vector<std::string> rough_field_check(const VectorField& x);

/// Largest disagreement, over carrier samples covered by two charts, between
/// comps in c2 and the transition Jacobian applied to comps in c1.
double transition_consistency(const VectorField& x);

struct FieldSmoothnessReport {
  SmoothnessReport bundle;  // p -> (p, X_p) read through bundle charts
  SmoothnessReport local;   // per-chart component maps
  bool consistent = true;   // both routes reached the same verdict
  bool passed = false;
};

/// Runs both smoothness characterizations and requires them to agree.
FieldSmoothnessReport smooth_vf_check(const VectorField& x, const ProbeOptions& options = {});

/// [X, Y] by the coordinate formula [X,Y]^i = X^j d_j Y^i - Y^j d_j X^i in
/// every chart. Throws ContractViolation unless both live on one manifold.
VectorField lie_bracket(const VectorField& x, const VectorField& y);

/// The derivation form p -> X_p(Y f) - Y_p(X f), used as the bracket oracle.
RealMap bracket_action(const VectorField& x, const VectorField& y, const RealMap& f);

/// Largest componentwise difference of two fields on the same manifold at its
/// carrier samples.
double field_distance(const VectorField& a, const VectorField& b);

}  // namespace liekit
