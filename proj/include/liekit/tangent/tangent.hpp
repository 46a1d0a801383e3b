#pragma once

#include "liekit/geometry/manifold.hpp"

namespace liekit {

/// A tangent vector at `base`, stored by its components in the frame of one
/// chart covering the base point. It acts on functions as the directional
/// derivative of f o chart^-1 at chart(base).
class TangentVector {
 public:
  /// Throws OutOfDomain when base is not in the chart's domain.
  TangentVector(Chart chart, Vector base, Vector comps);

  const Chart& chart() const { return chart_; }
  const std::string& chart_id() const { return chart_.id(); }
  const Vector& base() const { return base_; }
  const Vector& comps() const { return comps_; }
  std::size_t dim() const { return comps_.size(); }

  /// Both operands must share base point and chart id.
  TangentVector operator+(const TangentVector& other) const;
  TangentVector operator*(double s) const;
  friend TangentVector operator*(double s, const TangentVector& v) { return v * s; }

 private:
  Chart chart_;
  Vector base_;
  Vector comps_;
};

/// sum_i comps_i d_i (f o psi^-1)(psi(p)). Throws EvaluationError when the
/// derivative is not finite.
double tangent_apply(const TangentVector& v, const RealMap& f);

/// The tangent vector with components b in psi's frame at p.
TangentVector coordinate_vector(const Chart& psi, Point p, Point b);

/// x -> (psi(x) - psi(p)) . e_i, the i-th coordinate function centred at p.
RealMap coordinate_function(const Chart& psi, Point p, std::size_t i);

/// Components of v in psi's frame, obtained by letting v act on psi's
/// coordinate functions.
Vector component_function(const TangentVector& v, const Chart& psi);

/// Re-expresses v in psi2 using the Jacobian of psi2 o psi1^-1.
TangentVector change_chart(const TangentVector& v, const Chart& psi2);

/// dF_p(v), based at F(p) in the first destination chart covering F(p), with
/// components J(c2 o F o c1^-1)(c1(p)) v. Throws OutOfDomain when p is outside
/// src or F(p) is outside every chart of dst.
TangentVector push_forward(const RealMap& f, const Manifold& src, const Manifold& dst, const TangentVector& v);

}  // namespace liekit
