#pragma once

#include <functional>
#include <memory>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "liekit/calculus/jet.hpp"
#include "liekit/common.hpp"

namespace liekit {

/// A map R^in -> R^out that can be evaluated at points and lifted through
/// jets. Lifting takes jet-valued inputs (all in one layout) and returns the
/// jets of the outputs in that same layout, which is what makes composition a
/// plain substitution.
///
/// Immutable; copies share the underlying callables.
class RealMap {
 public:
  using EvalFn = std::function<Vector(Point)>;
  using LiftFn = std::function<std::vector<Jet>(std::span<const Jet>)>;

  RealMap(std::size_t in_dim, std::size_t out_dim, EvalFn eval, LiftFn lift, std::string name = {});

  /// Builds a map from one generic expression. `f` is called with
  /// std::span<const double> and std::span<const Jet> and must return a
  /// std::vector of the matching scalar type.
  template <class F>
  static RealMap from_expr(std::size_t in_dim, std::size_t out_dim, F f, std::string name = {});

  /// A map defined only through its lift; plain evaluation lifts order-0 jets,
  /// so the two agree exactly.
  static RealMap from_lift(std::size_t in_dim, std::size_t out_dim, LiftFn lift, std::string name = {});

  std::size_t in_dim() const { return impl_->in_dim; }
  std::size_t out_dim() const { return impl_->out_dim; }
  const std::string& name() const { return impl_->name; }

  Vector operator()(Point p) const;
  double scalar(Point p) const;
  std::vector<Jet> lift(std::span<const Jet> inputs) const;

 private:
  struct Impl {
    std::size_t in_dim;
    std::size_t out_dim;
    EvalFn eval;
    LiftFn lift;
    std::string name;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Derivative tensors of f at p up to `order`, one Jet per output coordinate.
std::vector<Jet> jet_eval(const RealMap& f, Point p, std::size_t order, std::size_t max_order = kDefaultMaxOrder);

/// Jacobian of f at jet-valued x: result[i][j] is the jet of d_j f_i at x, in
/// x's layout. Internally expands f one order above x and substitutes.
std::vector<std::vector<Jet>> jacobian_lift(const RealMap& f, std::span<const Jet> x);
/// sum_j d_j f_i(x) * dir_j for every output i.
std::vector<Jet> directional_lift(const RealMap& f, std::span<const Jet> x, std::span<const Jet> dir);
/// Plain Jacobian at a point (out x in, row-major).
Vector jacobian(const RealMap& f, Point p);

RealMap map_identity(std::size_t n);
RealMap map_constant(std::size_t in_dim, Vector value);
/// x -> A x + b, A given row-major out x in.
RealMap map_affine(std::size_t in_dim, Vector a, Vector b);
/// i-th output of f as a scalar map.
RealMap map_component(const RealMap& f, std::size_t i);
/// x -> x_i.
RealMap map_coordinate(std::size_t n, std::size_t i);

/// g o f.
RealMap map_compose(const RealMap& g, const RealMap& f);
RealMap map_add(const RealMap& f, const RealMap& g);
RealMap map_sub(const RealMap& f, const RealMap& g);
RealMap map_scale(double a, const RealMap& f);
/// Pointwise (componentwise) product.
RealMap map_mul(const RealMap& f, const RealMap& g);
/// x -> (f(x), g(x)).
RealMap map_concat(const RealMap& f, const RealMap& g);
/// (x, y) -> (f(x), g(y)).
RealMap map_product(const RealMap& f, const RealMap& g);

// ---------------------------------------------------------------------------

template <class F>
RealMap RealMap::from_expr(std::size_t in_dim, std::size_t out_dim, F f, std::string name) {
  EvalFn eval = [f](Point x) -> Vector { return f(x); };
  LiftFn lift = [f](std::span<const Jet> x) -> std::vector<Jet> { return f(x); };
  return RealMap(in_dim, out_dim, std::move(eval), std::move(lift), std::move(name));
}

}  // namespace liekit
