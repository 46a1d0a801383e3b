#include "liekit/tangent/tangent.hpp"

#include <cmath>

namespace liekit {

TangentVector::TangentVector(Chart chart, Vector base, Vector comps)
    : chart_(std::move(chart)), base_(std::move(base)), comps_(std::move(comps)) {
  require(base_.size() == chart_.ambient_dim(), "TangentVector: base point has the wrong dimension");
  require(comps_.size() == chart_.dim(), "TangentVector: expected " + std::to_string(chart_.dim()) + " components");
  if (!chart_.domain().contains(base_))
    throw OutOfDomain("TangentVector: " + format_point(base_) + " is outside the domain of chart '" + chart_.id() +
                      "'");
}

TangentVector TangentVector::operator+(const TangentVector& other) const {
  require(base_ == other.base_ && chart_id() == other.chart_id(),
          "TangentVector: sum needs a common base point and chart");
  Vector c = comps_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.comps_[i];
  return TangentVector(chart_, base_, std::move(c));
}

TangentVector TangentVector::operator*(double s) const {
  Vector c = comps_;
  for (auto& x : c) x *= s;
  return TangentVector(chart_, base_, std::move(c));
}

double tangent_apply(const TangentVector& v, const RealMap& f) {
  require(f.out_dim() == 1 && f.in_dim() == v.chart().ambient_dim(),
          "tangent_apply: expected a scalar function on the ambient space");
  const Vector u = v.chart()(v.base());
  const auto jets = jet_eval(map_compose(f, v.chart().inv()), u, 1);
  const Vector grad = jets[0].gradient();
  double sum = 0.0;
  for (std::size_t i = 0; i < grad.size(); ++i) sum += v.comps()[i] * grad[i];
  if (!std::isfinite(sum))
    throw EvaluationError("tangent_apply: '" + f.name() + "' is not differentiable at " + format_point(v.base()));
  return sum;
}

TangentVector coordinate_vector(const Chart& psi, Point p, Point b) {
  require(b.size() == psi.dim(), "coordinate_vector: direction has the wrong dimension");
  return TangentVector(psi, Vector(p.begin(), p.end()), Vector(b.begin(), b.end()));
}

RealMap coordinate_function(const Chart& psi, Point p, std::size_t i) {
  require(i < psi.dim(), "coordinate_function: index out of range");
  Vector centre = psi(p);
  Vector offset(psi.dim(), 0.0);
  offset[i] = -centre[i];
  Vector row(psi.dim(), 0.0);
  row[i] = 1.0;
  // e_i . (psi(x) - psi(p)) as the composition of psi with an affine form
  return map_compose(map_affine(psi.dim(), row, {offset[i]}), psi.fwd());
}

Vector component_function(const TangentVector& v, const Chart& psi) {
  if (!psi.domain().contains(v.base()))
    throw OutOfDomain("component_function: " + format_point(v.base()) + " is outside chart '" + psi.id() + "'");
  Vector out(psi.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = tangent_apply(v, coordinate_function(psi, v.base(), i));
  return out;
}

namespace {

Vector apply_jacobian(const RealMap& g, Point at, Point comps) {
  const Vector jac = jacobian(g, at);
  const std::size_t rows = g.out_dim();
  const std::size_t cols = g.in_dim();
  Vector out(rows, 0.0);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out[r] += jac[r * cols + c] * comps[c];
  for (double x : out)
    if (!std::isfinite(x)) throw EvaluationError("non-finite Jacobian at " + format_point(at));
  return out;
}

}  // namespace

TangentVector change_chart(const TangentVector& v, const Chart& psi2) {
  if (!psi2.domain().contains(v.base()))
    throw OutOfDomain("change_chart: " + format_point(v.base()) + " is outside chart '" + psi2.id() + "'");
  const Chart& psi1 = v.chart();
  Vector comps = apply_jacobian(map_compose(psi2.fwd(), psi1.inv()), psi1(v.base()), v.comps());
  return TangentVector(psi2, v.base(), std::move(comps));
}

TangentVector push_forward(const RealMap& f, const Manifold& src, const Manifold& dst, const TangentVector& v) {
  require(f.in_dim() == src.ambient_dim() && f.out_dim() == dst.ambient_dim(),
          "push_forward: map dimensions do not match the manifolds");
  if (!src.contains(v.base()))
    throw OutOfDomain("push_forward: " + format_point(v.base()) + " is outside the source carrier");
  Vector image = f(v.base());
  const auto idx = dst.chart_index_at(image);
  if (!idx) throw OutOfDomain("push_forward: image " + format_point(image) + " is outside the destination atlas");
  const Chart& c1 = v.chart();
  const Chart& c2 = dst.charts()[*idx];
  Vector comps = apply_jacobian(map_compose(c2.fwd(), map_compose(f, c1.inv())), c1(v.base()), v.comps());
  return TangentVector(c2, std::move(image), std::move(comps));
}

}  // namespace liekit
