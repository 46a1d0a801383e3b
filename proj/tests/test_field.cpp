#include <doctest.h>

#include <cmath>

#include "liekit/calculus/battery.hpp"
#include "liekit/field/derivation.hpp"
#include "liekit/models/fields.hpp"
#include "liekit/models/spaces.hpp"

using namespace liekit;

namespace {

// x0 * e_1 on R^2, i.e. x d/dy.
RealMap x_dy() {
  return RealMap::from_expr(2, 2, [](auto x) {
    using T = typename decltype(x)::value_type;
    return std::vector<T>{T(0.0), x[0]};
  }, "x*dy");
}

RealMap abs_field() {
  return RealMap::from_expr(1, 1, [](auto x) {
    using T = typename decltype(x)::value_type;
    using std::abs;
    return std::vector<T>{abs(x[0])};
  }, "|x|");
}

bool all_battery_sharp_smooth(const VectorField& x, const ProbeOptions& options) {
  const Region carrier = x.manifold().carrier_region();
  for (const auto& f : function_battery(x.manifold().ambient_dim()))
    if (!smooth_on_probe(carrier, vf_sharp(x, f), options).passed) return false;
  return true;
}

}  // namespace

TEST_CASE("vf_apply examples") {
  Manifold r2 = euclidean_manifold(2);
  VectorField ex = coordinate_field(r2, 0);
  for (const auto& p : r2.carrier_samples()) CHECK(vf_apply(ex, p).comps() == Vector{1.0, 0.0});
  VectorField xdy = VectorField::from_ambient(r2, x_dy());
  const double p[] = {2.0, 0.0};
  CHECK(vf_apply(xdy, p).comps() == Vector{0.0, 2.0});
  Manifold disk = disk_manifold();
  const double outside[] = {2.0, 0.0};
  CHECK_THROWS_AS(vf_apply(VectorField::from_ambient(disk, x_dy()), outside), OutOfDomain);
}

TEST_CASE("fields on a two-chart atlas are consistent across charts") {
  auto [id1, cubic] = nonlinear_chart_pair();
  Manifold m = manifold_new({id1, cubic});
  auto ambient = RealMap::from_expr(1, 1, [](auto x) {
    using T = typename decltype(x)::value_type;
    using std::sin;
    return std::vector<T>{1.0 + 0.5 * sin(x[0])};
  });
  VectorField x = VectorField::from_ambient(m, ambient);
  CHECK(transition_consistency(x) < 1e-8);
  CHECK(rough_field_check(x).empty());
  for (const auto& p : m.carrier_samples()) {
    const TangentVector v = vf_apply(x, p);
    const TangentVector w = change_chart(v, cubic);
    const Vector direct = x.comps("cubic")(cubic(p));
    CHECK(std::abs(w.comps()[0] - direct[0]) < 1e-8);
  }
}

TEST_CASE("vf_sharp examples") {
  Manifold r2 = euclidean_manifold(2);
  auto x2 = RealMap::from_expr(2, 1, [](auto x) {
    using T = typename decltype(x)::value_type;
    return std::vector<T>{x[0] * x[0]};
  });
  RealMap dx_f = vf_sharp(coordinate_field(r2, 0), x2);
  for (const auto& p : r2.carrier_samples()) CHECK(dx_f.scalar(p) == doctest::Approx(2 * p[0]).epsilon(1e-14));
  RealMap zero = vf_sharp(VectorField::zero(r2), x2);
  for (const auto& p : r2.carrier_samples()) CHECK(zero.scalar(p) == 0.0);

  Manifold r1 = euclidean_manifold(1);
  VectorField xdx = VectorField::from_ambient(r1, map_identity(1));
  auto sine = RealMap::from_expr(1, 1, [](auto x) {
    using T = typename decltype(x)::value_type;
    using std::sin;
    return std::vector<T>{sin(x[0])};
  });
  RealMap xs = vf_sharp(xdx, sine);
  const double one[] = {1.0};
  for (const auto& p : r1.carrier_samples()) {
    CHECK(std::abs(xs.scalar(p) - p[0] * std::cos(p[0])) < 1e-8);
    // FD oracle on sin, scaled by the component
    CHECK(std::abs(xs.scalar(p) - p[0] * fd_derivative(sine, p, one, 1e-5)[0]) < 1e-8);
  }
  Manifold unit = manifold_new({Chart::identity(Region::box({-1.0}, {1.0}, 8), "id")});
  const double outside[] = {3.0};
  CHECK_THROWS_AS(vf_sharp(VectorField::from_ambient(unit, map_identity(1)), sine)(outside), EvaluationError);
}

TEST_CASE("vf_sharp is jet-evaluable and matches finite differences") {
  Manifold r2 = euclidean_manifold(2);
  Rng rng(2);
  VectorField x = random_polynomial_field(r2, 2, rng);
  for (const auto& f : function_battery(2)) {
    auto report = smooth_on_probe(r2.carrier_region(), vf_sharp(x, f), {.order = 3});
    CHECK_MESSAGE(report.passed, describe(report));
  }
}

TEST_CASE("vf_restrict examples") {
  Manifold r2 = euclidean_manifold(2);
  VectorField xdy = VectorField::from_ambient(r2, x_dy());
  VectorField whole = vf_restrict(xdy, Region::box({-4.0, -4.0}, {4.0, 4.0}, 4));
  for (const auto& p : r2.carrier_samples()) CHECK(vf_apply(whole, p).comps() == vf_apply(xdy, p).comps());

  Region disk = Region::ball({0.0, 0.0}, 1.0, 24, 0, "disk");
  VectorField ex = coordinate_field(r2, 0);
  VectorField ex_disk = vf_restrict(ex, disk);
  for (const auto& p : ex_disk.manifold().carrier_samples()) CHECK(vf_apply(ex_disk, p).comps() == Vector{1.0, 0.0});

  VectorField xdy_disk = vf_restrict(xdy, disk);
  for (const auto& f : function_battery(2)) {
    const RealMap lhs = vf_sharp(xdy, f);
    const RealMap rhs = vf_sharp(xdy_disk, f);
    for (const auto& p : xdy_disk.manifold().carrier_samples()) CHECK(std::abs(lhs.scalar(p) - rhs.scalar(p)) <= 1e-10);
    // restricted field acting on functions of the open set stays smooth there
    CHECK(smooth_on_probe(xdy_disk.manifold().carrier_region(), rhs, {.order = 3}).passed);
  }
  VectorField on_disk = VectorField::from_ambient(disk_manifold(), x_dy());
  CHECK_THROWS_AS(vf_restrict(on_disk, Region::box({7.0, 7.0}, {8.0, 8.0}, 4)), EmptySubmanifold);
}

TEST_CASE("smooth_vf_check examples and the sharp characterization") {
  Manifold r2 = euclidean_manifold(2);
  Rng rng(4);
  VectorField poly = random_polynomial_field(r2, 3, rng);
  auto good = smooth_vf_check(poly, {.order = 3});
  CHECK(good.bundle.passed);
  CHECK(good.local.passed);
  CHECK(good.consistent);
  CHECK(good.passed);
  CHECK(all_battery_sharp_smooth(poly, {.order = 3}));

  Manifold r1 = euclidean_manifold(1);
  VectorField kink = VectorField::from_ambient(r1, abs_field());
  auto bad = smooth_vf_check(kink, {.order = 3});
  CHECK_FALSE(bad.bundle.passed);
  CHECK_FALSE(bad.local.passed);
  CHECK(bad.consistent);
  CHECK_FALSE(bad.passed);
  CHECK_FALSE(all_battery_sharp_smooth(kink, {.order = 3}));

  Manifold gl2 = gl_manifold(2);
  VectorField constant = VectorField::from_ambient(gl2, map_constant(4, {1.0, -2.0, 0.5, 0.0}));
  CHECK(smooth_vf_check(constant).passed);
}

TEST_CASE("smooth_vf_check on a nonlinear atlas") {
  auto [id1, cubic] = nonlinear_chart_pair();
  Manifold m = manifold_new({cubic, id1});
  auto ambient = RealMap::from_expr(1, 1, [](auto x) {
    using T = typename decltype(x)::value_type;
    return std::vector<T>{1.0 + x[0] * x[0]};
  });
  auto r = smooth_vf_check(VectorField::from_ambient(m, ambient), {.order = 3});
  CHECK_MESSAGE(r.passed, describe(r.bundle), describe(r.local));
}

TEST_CASE("lie_bracket examples") {
  Manifold r2 = euclidean_manifold(2);
  VectorField dx = coordinate_field(r2, 0);
  VectorField dy = coordinate_field(r2, 1);
  VectorField xdy = VectorField::from_ambient(r2, x_dy());
  CHECK(field_distance(lie_bracket(dx, dy), VectorField::zero(r2)) == 0.0);
  CHECK(field_distance(lie_bracket(dx, xdy), dy) < 1e-14);
  for (const auto& f : function_battery(2)) {
    const RealMap oracle = bracket_action(dx, xdy, f);
    const RealMap direct = vf_sharp(dy, f);
    for (const auto& p : r2.carrier_samples()) CHECK(std::abs(oracle.scalar(p) - direct.scalar(p)) < 1e-6);
  }
  Rng rng(6);
  VectorField x = random_polynomial_field(r2, 2, rng);
  CHECK(field_distance(lie_bracket(x, x), VectorField::zero(r2)) == 0.0);

  Manifold other = euclidean_manifold(2);
  CHECK_THROWS_AS(lie_bracket(dx, coordinate_field(other, 1)), ContractViolation);
}

TEST_CASE("bracket properties on random polynomial fields") {
  Manifold r2 = euclidean_manifold(2, 16);
  Rng rng(10);
  const auto battery = function_battery(2);
  for (int trial = 0; trial < 4; ++trial) {
    VectorField x = random_polynomial_field(r2, 2, rng);
    VectorField y = random_polynomial_field(r2, 2, rng);
    VectorField z = random_polynomial_field(r2, 2, rng);
    const VectorField xy = lie_bracket(x, y);
    const VectorField yx = lie_bracket(y, x);
    for (const auto& p : r2.carrier_samples()) {
      const Vector a = vf_apply(xy, p).comps();
      const Vector b = vf_apply(yx, p).comps();
      CHECK(std::abs(a[0] + b[0]) <= 1e-10);
      CHECK(std::abs(a[1] + b[1]) <= 1e-10);
    }
    // bilinearity
    CHECK(field_distance(lie_bracket(x * 2.0 + z, y), lie_bracket(x, y) * 2.0 + lie_bracket(z, y)) < 1e-9);
    // coordinate form against the derivation form
    for (const auto& f : battery) {
      const RealMap oracle = bracket_action(x, y, f);
      for (const auto& p : r2.carrier_samples()) {
        const double lhs = tangent_apply(vf_apply(xy, p), f);
        CHECK(std::abs(lhs - oracle.scalar(p)) < 1e-6 * (1 + std::abs(lhs)));
      }
    }
    // Leibniz for the bracket
    for (std::size_t i = 0; i < kBatteryPolynomials; ++i) {
      const RealMap& f = battery[i];
      const RealMap& g = battery[(i + 1) % kBatteryPolynomials];
      const RealMap fg = vf_sharp(xy, map_mul(f, g));
      const RealMap fx = vf_sharp(xy, f);
      const RealMap gx = vf_sharp(xy, g);
      for (const auto& p : r2.carrier_samples()) {
        const double lhs = fg.scalar(p);
        const double rhs = f.scalar(p) * gx.scalar(p) + g.scalar(p) * fx.scalar(p);
        CHECK(std::abs(lhs - rhs) < 1e-7 * (1 + std::abs(lhs)));
      }
    }
    // Jacobi
    const VectorField jac =
        lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) + lie_bracket(z, lie_bracket(x, y));
    CHECK(field_distance(jac, VectorField::zero(r2)) < 1e-5);
  }
}

TEST_CASE("is_derivation_check examples") {
  Manifold r2 = euclidean_manifold(2, 8);
  const auto battery = function_battery(2);
  const std::vector<RealMap> fs(battery.begin(), battery.begin() + 4);
  const std::vector<RealMap> gs(battery.begin() + 4, battery.end());
  Rng rng(1);
  auto good = is_derivation_check(derivation_of(random_polynomial_field(r2, 2, rng)), r2, fs, gs);
  CHECK(good.passed);
  CHECK(good.leibniz_residual < 1e-10);

  Derivation identity{[](const RealMap& f) { return f; }, "id"};
  auto bad = is_derivation_check(identity, r2, fs, gs);
  CHECK(bad.linear);
  CHECK_FALSE(bad.leibniz);
  CHECK_FALSE(bad.passed);
  CHECK_FALSE(bad.counterexample.empty());

  // the spec's counterexample: f = g = x at x = 1
  Manifold r1 = euclidean_manifold(1, 4);
  auto id_on_x = is_derivation_check(identity, r1, {map_coordinate(1, 0)}, {map_coordinate(1, 0)});
  CHECK_FALSE(id_on_x.leibniz);

  Derivation zero{[](const RealMap& f) { return map_constant(f.in_dim(), {0.0}); }, "0"};
  CHECK(is_derivation_check(zero, r2, fs, gs).passed);

  CHECK_THROWS_AS(is_derivation_check(zero, r2, {}, gs), ContractViolation);
}

TEST_CASE("vf_of_derivation round trips") {
  Manifold r2 = euclidean_manifold(2, 12);
  VectorField dx = coordinate_field(r2, 0);
  VectorField rec = vf_of_derivation(derivation_of(dx), r2);
  for (const auto& p : r2.carrier_samples()) CHECK(vf_apply(rec, p).comps() == Vector{1.0, 0.0});

  Rng rng(3);
  VectorField x = random_polynomial_field(r2, 2, rng);
  VectorField back = vf_of_derivation(derivation_of(x), r2);
  CHECK(field_distance(x, back) < 1e-8);

  const Derivation d = derivation_of(x);
  const Derivation d2 = derivation_of(back);
  for (const auto& f : function_battery(2)) {
    const RealMap a = d(f);
    const RealMap b = d2(f);
    for (const auto& p : r2.carrier_samples()) CHECK(std::abs(a.scalar(p) - b.scalar(p)) < 1e-6);
  }

  Derivation zero{[](const RealMap& f) { return map_constant(f.in_dim(), {0.0}); }, "0"};
  CHECK(field_distance(vf_of_derivation(zero, r2), VectorField::zero(r2)) == 0.0);

  auto [id1, cubic] = nonlinear_chart_pair();
  Manifold m = manifold_new({id1, cubic});
  auto ambient = RealMap::from_expr(1, 1, [](auto x) {
    using T = typename decltype(x)::value_type;
    return std::vector<T>{0.3 + x[0] * x[0]};
  });
  VectorField y = VectorField::from_ambient(m, ambient);
  VectorField yb = vf_of_derivation(derivation_of(y), m);
  for (const auto& p : m.carrier_samples())
    for (std::size_t k = 0; k < 2; ++k) {
      const Chart& c = m.charts()[k];
      if (!c.domain().contains(p)) continue;
      CHECK(max_abs_diff(y.comps(k)(c(p)), yb.comps(k)(c(p))) < 1e-8);
    }
}
