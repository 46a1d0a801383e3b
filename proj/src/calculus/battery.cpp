#include "liekit/calculus/battery.hpp"

namespace liekit {

namespace {

template <class T>
T linear_form(std::span<const T> x) {
  T acc = T(0.0);
  const double d = static_cast<double>(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) acc = acc + ((static_cast<double>(k) + 1.0) / d) * x[k];
  return acc;
}

template <class F>
RealMap scalar_map(std::size_t dim, F f, const char* name) {
  return RealMap::from_expr(
      dim, 1,
      [f](auto x) {
        using T = typename decltype(x)::value_type;
        return std::vector<T>{f(x)};
      },
      name);
}

}  // namespace

std::vector<RealMap> function_battery(std::size_t dim) {
  require(dim > 0, "function_battery: dimension must be positive");
  const std::size_t last = dim - 1;
  const std::size_t second = dim > 1 ? 1 : 0;
  std::vector<RealMap> maps;
  maps.push_back(scalar_map(dim, [](auto x) { return x[0]; }, "x0"));
  maps.push_back(scalar_map(dim, [last](auto x) { return x[last]; }, "x_last"));
  maps.push_back(scalar_map(dim, [](auto x) { return x[0] * x[0]; }, "x0^2"));
  maps.push_back(scalar_map(
      dim, [second](auto x) { return x[0] * x[second] + linear_form(x); }, "x0*x1+L"));
  maps.push_back(scalar_map(
      dim, [second](auto x) { return ipow(x[0], 3) - 2.0 * x[second] + 1.0; }, "x0^3-2x1+1"));
  maps.push_back(scalar_map(
      dim, [second](auto x) { return 1.0 + x[0] * x[second] * linear_form(x); }, "1+x0*x1*L"));
  maps.push_back(scalar_map(
      dim,
      [](auto x) {
        auto l = linear_form(x);
        return l * l - x[0];
      },
      "L^2-x0"));
  maps.push_back(scalar_map(
      dim, [last](auto x) { return 0.5 * ipow(x[last], 3) + x[0] * x[0] * x[last]; }, "x_last^3/2+x0^2*x_last"));
  maps.push_back(scalar_map(
      dim,
      [second](auto x) {
        using std::cos;
        using std::sin;
        return sin(x[0]) * x[second] + cos(linear_form(x));
      },
      "sin(x0)*x1+cos(L)"));
  maps.push_back(scalar_map(
      dim,
      [last](auto x) {
        using std::exp;
        return exp(0.5 * x[0]) * (1.0 + x[last] * x[last]);
      },
      "exp(x0/2)*(1+x_last^2)"));
  return maps;
}

}  // namespace liekit
