#include "liekit/calculus/real_map.hpp"

#include <string>

namespace liekit {

namespace {

std::string label(const std::string& name) { return name.empty() ? std::string("map") : name; }

}  // namespace

RealMap::RealMap(std::size_t in_dim, std::size_t out_dim, EvalFn eval, LiftFn lift, std::string name)
    : impl_(std::make_shared<const Impl>(Impl{in_dim, out_dim, std::move(eval), std::move(lift), std::move(name)})) {
  require(in_dim > 0 && out_dim > 0, "RealMap: dimensions must be positive");
}

RealMap RealMap::from_lift(std::size_t in_dim, std::size_t out_dim, LiftFn lift, std::string name) {
  EvalFn eval = [lift](Point x) -> Vector { return values_of(lift(seed_variables(x, 0))); };
  return RealMap(in_dim, out_dim, std::move(eval), std::move(lift), std::move(name));
}

Vector RealMap::operator()(Point p) const {
  if (p.size() != impl_->in_dim)
    throw ContractViolation(label(impl_->name) + ": expected a point of dimension " + std::to_string(impl_->in_dim) +
                            ", got " + std::to_string(p.size()));
  Vector out = impl_->eval(p);
  if (out.size() != impl_->out_dim)
    throw ContractViolation(label(impl_->name) + ": produced " + std::to_string(out.size()) + " outputs, declared " +
                            std::to_string(impl_->out_dim));
  return out;
}

double RealMap::scalar(Point p) const {
  require(impl_->out_dim == 1, label(impl_->name) + ": scalar() on a vector-valued map");
  return (*this)(p)[0];
}

std::vector<Jet> RealMap::lift(std::span<const Jet> inputs) const {
  if (inputs.size() != impl_->in_dim)
    throw ContractViolation(label(impl_->name) + ": expected " + std::to_string(impl_->in_dim) + " jet inputs, got " +
                            std::to_string(inputs.size()));
  const auto& layout = inputs[0].layout();
  require(layout != nullptr, label(impl_->name) + ": jet inputs need a layout");
  for (const auto& j : inputs) require(j.layout() == layout, label(impl_->name) + ": jet inputs must share a layout");
  auto out = impl_->lift(inputs);
  if (out.size() != impl_->out_dim)
    throw ContractViolation(label(impl_->name) + ": lift produced " + std::to_string(out.size()) +
                            " outputs, declared " + std::to_string(impl_->out_dim));
  for (auto& j : out)
    if (j.layout() != layout) j = j.with_layout(layout);
  return out;
}

std::vector<Jet> jet_eval(const RealMap& f, Point p, std::size_t order, std::size_t max_order) {
  if (p.size() != f.in_dim())
    throw ContractViolation("jet_eval: point has dimension " + std::to_string(p.size()) + ", map expects " +
                            std::to_string(f.in_dim()));
  if (order > max_order)
    throw UnsupportedOrder("jet_eval: order " + std::to_string(order) + " exceeds the configured maximum " +
                           std::to_string(max_order));
  return f.lift(seed_variables(p, order));
}

std::vector<std::vector<Jet>> jacobian_lift(const RealMap& f, std::span<const Jet> x) {
  require(x.size() == f.in_dim(), "jacobian_lift: input size mismatch");
  const auto& layout = x[0].layout();
  require(layout != nullptr, "jacobian_lift: inputs need a layout");
  const Vector x0 = values_of(x);
  const auto expansion = f.lift(seed_variables(x0, layout->order() + 1));

  std::vector<Jet> delta;
  delta.reserve(x.size());
  for (const auto& xi : x) delta.push_back(xi.increment());

  std::vector<Jet> partials;
  partials.reserve(f.out_dim() * f.in_dim());
  for (const auto& fi : expansion)
    for (std::size_t j = 0; j < f.in_dim(); ++j) partials.push_back(fi.partial(j));
  auto flat = substitute(partials, delta);

  std::vector<std::vector<Jet>> out(f.out_dim());
  for (std::size_t i = 0; i < f.out_dim(); ++i)
    out[i].assign(flat.begin() + static_cast<std::ptrdiff_t>(i * f.in_dim()),
                  flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * f.in_dim()));
  return out;
}

std::vector<Jet> directional_lift(const RealMap& f, std::span<const Jet> x, std::span<const Jet> dir) {
  require(dir.size() == f.in_dim(), "directional_lift: direction size mismatch");
  const auto jac = jacobian_lift(f, x);
  std::vector<Jet> out;
  out.reserve(f.out_dim());
  for (const auto& row : jac) {
    Jet acc = Jet::constant(x[0].layout(), 0.0);
    for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * dir[j];
    out.push_back(std::move(acc));
  }
  return out;
}

Vector jacobian(const RealMap& f, Point p) {
  const auto jets = f.lift(seed_variables(p, 1));
  Vector out(f.out_dim() * f.in_dim());
  for (std::size_t i = 0; i < f.out_dim(); ++i) {
    const auto c = jets[i].coefficients();
    for (std::size_t j = 0; j < f.in_dim(); ++j) out[i * f.in_dim() + j] = c[1 + j];
  }
  return out;
}

// ---------------------------------------------------------------------------

RealMap map_identity(std::size_t n) {
  return RealMap(
      n, n, [](Point x) { return Vector(x.begin(), x.end()); },
      [](std::span<const Jet> x) { return std::vector<Jet>(x.begin(), x.end()); }, "identity");
}

RealMap map_constant(std::size_t in_dim, Vector value) {
  const std::size_t out = value.size();
  return RealMap(
      in_dim, out, [value](Point) { return value; },
      [value](std::span<const Jet> x) {
        std::vector<Jet> r;
        for (double v : value) r.push_back(Jet::constant(x[0].layout(), v));
        return r;
      },
      "constant");
}

RealMap map_affine(std::size_t in_dim, Vector a, Vector b) {
  const std::size_t out = b.size();
  require(a.size() == out * in_dim, "map_affine: matrix shape does not match offset and input dimension");
  auto apply = [a, b, in_dim, out](auto x) {
    using T = typename decltype(x)::value_type;
    std::vector<T> r;
    r.reserve(out);
    for (std::size_t i = 0; i < out; ++i) {
      T acc = T(b[i]);
      for (std::size_t j = 0; j < in_dim; ++j)
        if (a[i * in_dim + j] != 0.0) acc = acc + a[i * in_dim + j] * x[j];
      r.push_back(acc);
    }
    return r;
  };
  return RealMap::from_expr(in_dim, out, apply, "affine");
}

RealMap map_component(const RealMap& f, std::size_t i) {
  require(i < f.out_dim(), "map_component: component out of range");
  return RealMap(
      f.in_dim(), 1, [f, i](Point x) { return Vector{f(x)[i]}; },
      [f, i](std::span<const Jet> x) { return std::vector<Jet>{f.lift(x)[i]}; }, f.name() + "[" + std::to_string(i) + "]");
}

RealMap map_coordinate(std::size_t n, std::size_t i) {
  require(i < n, "map_coordinate: coordinate out of range");
  return RealMap(
      n, 1, [i](Point x) { return Vector{x[i]}; }, [i](std::span<const Jet> x) { return std::vector<Jet>{x[i]}; },
      "x" + std::to_string(i));
}

RealMap map_compose(const RealMap& g, const RealMap& f) {
  if (f.out_dim() != g.in_dim())
    throw ContractViolation("map_compose: inner map has " + std::to_string(f.out_dim()) + " outputs, outer expects " +
                            std::to_string(g.in_dim()));
  return RealMap(
      f.in_dim(), g.out_dim(), [g, f](Point x) { return g(f(x)); },
      [g, f](std::span<const Jet> x) { return g.lift(f.lift(x)); }, g.name() + " o " + f.name());
}

namespace {

void require_same_shape(const RealMap& f, const RealMap& g, const char* op) {
  if (f.in_dim() != g.in_dim() || f.out_dim() != g.out_dim())
    throw ContractViolation(std::string(op) + ": operands have different dimensions");
}

}  // namespace

RealMap map_add(const RealMap& f, const RealMap& g) {
  require_same_shape(f, g, "map_add");
  return RealMap(
      f.in_dim(), f.out_dim(),
      [f, g](Point x) {
        Vector a = f(x);
        const Vector b = g(x);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        return a;
      },
      [f, g](std::span<const Jet> x) {
        auto a = f.lift(x);
        const auto b = g.lift(x);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        return a;
      },
      "(" + f.name() + " + " + g.name() + ")");
}

RealMap map_sub(const RealMap& f, const RealMap& g) {
  require_same_shape(f, g, "map_sub");
  return RealMap(
      f.in_dim(), f.out_dim(),
      [f, g](Point x) {
        Vector a = f(x);
        const Vector b = g(x);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
        return a;
      },
      [f, g](std::span<const Jet> x) {
        auto a = f.lift(x);
        const auto b = g.lift(x);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
        return a;
      },
      "(" + f.name() + " - " + g.name() + ")");
}

RealMap map_scale(double a, const RealMap& f) {
  return RealMap(
      f.in_dim(), f.out_dim(),
      [a, f](Point x) {
        Vector v = f(x);
        for (auto& e : v) e *= a;
        return v;
      },
      [a, f](std::span<const Jet> x) {
        auto v = f.lift(x);
        for (auto& e : v) e = e * a;
        return v;
      },
      std::to_string(a) + "*" + f.name());
}

RealMap map_mul(const RealMap& f, const RealMap& g) {
  require_same_shape(f, g, "map_mul");
  return RealMap(
      f.in_dim(), f.out_dim(),
      [f, g](Point x) {
        Vector a = f(x);
        const Vector b = g(x);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
        return a;
      },
      [f, g](std::span<const Jet> x) {
        auto a = f.lift(x);
        const auto b = g.lift(x);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] * b[i];
        return a;
      },
      "(" + f.name() + " * " + g.name() + ")");
}

RealMap map_concat(const RealMap& f, const RealMap& g) {
  require(f.in_dim() == g.in_dim(), "map_concat: operands have different input dimensions");
  return RealMap(
      f.in_dim(), f.out_dim() + g.out_dim(),
      [f, g](Point x) {
        Vector a = f(x);
        const Vector b = g(x);
        a.insert(a.end(), b.begin(), b.end());
        return a;
      },
      [f, g](std::span<const Jet> x) {
        auto a = f.lift(x);
        const auto b = g.lift(x);
        a.insert(a.end(), b.begin(), b.end());
        return a;
      },
      "(" + f.name() + ", " + g.name() + ")");
}

RealMap map_product(const RealMap& f, const RealMap& g) {
  const std::size_t n = f.in_dim();
  return RealMap(
      f.in_dim() + g.in_dim(), f.out_dim() + g.out_dim(),
      [f, g, n](Point x) {
        Vector a = f(x.first(n));
        const Vector b = g(x.subspan(n));
        a.insert(a.end(), b.begin(), b.end());
        return a;
      },
      [f, g, n](std::span<const Jet> x) {
        auto a = f.lift(x.first(n));
        const auto b = g.lift(x.subspan(n));
        a.insert(a.end(), b.begin(), b.end());
        return a;
      },
      f.name() + " x " + g.name());
}

}  // namespace liekit
