#include <doctest.h>

#include <cmath>

#include "liekit/calculus/battery.hpp"
#include "liekit/lie/lie_algebra.hpp"
#include "liekit/models/fields.hpp"
#include "liekit/models/lie_groups.hpp"
#include "liekit/models/matrix.hpp"
#include "liekit/models/spaces.hpp"

using namespace liekit;

namespace {

const LieGroup& gl2() {
  static const LieGroup g = gl_group(2);
  return g;
}

RealMap sum_map(std::size_t n) {
  Vector a(n * 2 * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) a[i * 2 * n + i] = a[i * 2 * n + n + i] = 1.0;
  return map_affine(2 * n, a, Vector(n, 0.0));
}

// Commutator of two matrix units, flattened.
Vector unit_commutator(std::size_t a, std::size_t b) {
  SquareMatrix ea = SquareMatrix::identity(2), eb = SquareMatrix::identity(2);
  ea.entries.assign(4, 0.0);
  eb.entries.assign(4, 0.0);
  ea.entries[a] = 1.0;
  eb.entries[b] = 1.0;
  return (ea * eb - eb * ea).entries;
}

}  // namespace

TEST_CASE("euclidean plane is a Lie group") {
  const LieGroup g = euclidean_lie_group(2);
  CHECK(g.axioms.passed);
  CHECK(g.mult_certificate.passed);
  CHECK(g.inv_certificate.passed);
  CHECK(g.group.op({1.0, 2.0}, {3.0, -1.0}) == Vector{4.0, 1.0});
}

TEST_CASE("GL(2) is a Lie group") {
  const LieGroup& g = gl2();
  CHECK(g.mult_certificate.passed);
  CHECK(g.inv_certificate.passed);
  CHECK(g.axioms.max_residual < 1e-9);
  const Vector a{2.0, 1.0, 0.0, 1.0};
  CHECK(max_abs_diff(g.group.op(a, g.group.inv(a)), g.unit) < 1e-12);
}

TEST_CASE("an inverse that is not smooth has no certificate") {
  const Manifold r = euclidean_manifold(1);
  RealMap fake = RealMap::from_expr(1, 1, [](auto x) {
    using T = typename decltype(x)::value_type;
    return std::vector<T>{-x[0] + 1e-12 * abs(x[0])};
  });
  try {
    lie_group_new(r, sum_map(1), {0.0}, fake);
    FAIL("expected NotALieGroup");
  } catch (const NotALieGroup& e) {
    CHECK(e.axioms().passed);
    CHECK(e.mult_certificate().passed);
    CHECK_FALSE(e.inv_certificate().passed);
  }
}

TEST_CASE("a multiplication that is not smooth has no certificate") {
  const Manifold r = euclidean_manifold(1);
  // conjugate of + by x -> x^3; a group, but cbrt kinks where a^3 + b^3 = 0
  RealMap times = RealMap::from_expr(2, 1, [](auto x) {
    using T = typename decltype(x)::value_type;
    return std::vector<T>{cbrt(x[0] * x[0] * x[0] + x[1] * x[1] * x[1])};
  });
  try {
    lie_group_new(r, times, {0.0}, map_affine(1, {-1.0}, {0.0}));
    FAIL("expected NotALieGroup");
  } catch (const NotALieGroup& e) {
    CHECK(e.axioms().passed);
    CHECK_FALSE(e.mult_certificate().passed);
  }
}

TEST_CASE("failing group axioms are reported before any certificate") {
  const Manifold r = euclidean_manifold(1);
  RealMap minus = map_affine(2, {1.0, -1.0}, {0.0});
  try {
    lie_group_new(r, minus, {0.0}, map_identity(1));
    FAIL("expected NotALieGroup");
  } catch (const NotALieGroup& e) {
    CHECK_FALSE(e.axioms().passed);
    CHECK(e.mult_certificate().records.empty());
  }
}

TEST_CASE("left multiplication") {
  const LieGroup& g = gl2();
  const Vector a{2.0, 1.0, 0.0, 1.0};
  const Vector b{1.0, 0.5, -1.0, 3.0};
  CHECK(max_abs_diff(left_mult(g, a)(b), (SquareMatrix::from_flat(2, a) * SquareMatrix::from_flat(2, b)).entries) <
        1e-14);
  CHECK(left_mult_certificate(g, a).passed);
  const Vector singular{1.0, 2.0, 2.0, 4.0};
  CHECK_THROWS_AS(left_mult(g, singular), OutOfDomain);
  const auto absent = left_action(g, a).apply(singular);
  CHECK_FALSE(absent);
}

TEST_CASE("left action is a smooth action") {
  const LieGroup& g = gl2();
  const auto elements = sample_group_elements(g, {{1.0, 1.0, 0.0, 1.0}, {0.0, -1.0, 1.0, 0.0}}, 2, 5);
  CHECK(elements.size() == 1 + 2 + 4 + 2);
  const ActionReport r = action_check(g, g.manifold, left_action_of(g), elements);
  CHECK(r.automorphisms);
  CHECK(r.homomorphism_residual < 1e-9);
  CHECK(r.joint.passed);
  CHECK(r.passed);
}

TEST_CASE("a constant map is not an action") {
  const LieGroup g = euclidean_lie_group(1, 16);
  const Region carrier = g.manifold.carrier_region();
  GroupAction constant{[carrier](const Vector&) { return PartialMap(map_constant(1, {1.0}), carrier); },
                       map_constant(2, {1.0})};
  const ActionReport r = action_check(g, g.manifold, constant, sample_group_elements(g, {{1.0}}, 2));
  CHECK_FALSE(r.automorphisms);
  CHECK_FALSE(r.passed);
}

TEST_CASE("left-invariant extension on GL(2) is A -> A B") {
  const LieGroup& g = gl2();
  const Vector b{0.3, -1.0, 2.0, 0.5};
  const TangentVector v(g.manifold.chart_at(g.unit), g.unit, b);
  const VectorField x = left_invariant_extend(g, v);
  for (const auto& a : g.manifold.carrier_samples()) {
    const Vector expected = (SquareMatrix::from_flat(2, a) * SquareMatrix::from_flat(2, b)).entries;
    CHECK(max_abs_diff(vf_apply(x, a).comps(), expected) < 1e-12);
  }
  const TangentVector off(g.manifold.chart_at(g.unit), {2.0, 0.0, 0.0, 1.0}, b);
  CHECK_THROWS_AS(left_invariant_extend(g, off), ContractViolation);
}

TEST_CASE("invariance under left translations") {
  const LieGroup g = euclidean_lie_group(1, 16);
  const auto battery = function_battery(1);
  const RealMap shift = left_mult(g, Vector{1.0});
  const VectorField inv = left_invariant_extend(g, coordinate_vector(g.manifold.charts()[0], g.unit, Vector{1.0}));
  CHECK(invariant_under_check(inv, shift, battery, 1e-6).passed);
  // x d/dx is not translation invariant
  const VectorField radial = VectorField::from_ambient(g.manifold, map_identity(1));
  const InvarianceReport r = invariant_under_check(radial, shift, battery, 1e-6);
  CHECK_FALSE(r.passed);
  CHECK(r.samples == 16);
}

TEST_CASE("Lie algebra of GL(2): structure constants are commutators") {
  const LieGroup& g = gl2();
  const LieAlgebraOf alg = lie_algebra_of(g);
  REQUIRE(alg.basis.size() == 4);
  CHECK(alg.invariance.passed);
  CHECK(alg.algebra.passed);
  CHECK(alg.closure.passed);
  for (const auto& s : alg.smoothness) CHECK(s.passed);
  CHECK(alg.passed);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(max_abs_diff(alg.closure.coefficients[i][j], unit_commutator(i, j)) < 1e-6);

  // brackets of left-invariant fields are left invariant
  const auto battery = function_battery(4);
  for (const auto& h : sample_group_elements(g, {}, 3, 1))
    CHECK(invariant_under_check(lie_bracket(alg.basis[0], alg.basis[1]), left_mult(g, h), battery, 1e-6).passed);
}

TEST_CASE("Lie algebra of GL(1) is spanned by x d/dx") {
  const LieGroup g = gl_group(1);
  const LieAlgebraOf alg = lie_algebra_of(g);
  REQUIRE(alg.basis.size() == 1);
  CHECK(alg.passed);
  for (const auto& a : g.manifold.carrier_samples()) CHECK(std::abs(vf_apply(alg.basis[0], a).comps()[0] - a[0]) < 1e-12);
}

TEST_CASE("lie_algebra_check on polynomial fields and a broken bracket") {
  const Manifold r2 = euclidean_manifold(2, 12);
  Rng rng(3);
  std::vector<VectorField> xs;
  for (int i = 0; i < 3; ++i) xs.push_back(random_polynomial_field(r2, 2, rng, 0.5));
  const LieAlgebraReport ok = lie_algebra_check(xs, default_bracket(), 1e-8);
  CHECK(ok.passed);

  const VectorField c(r2, {map_constant(2, {1.0, 0.0})}, "c");
  BracketFn broken = [c](const VectorField& a, const VectorField& b) { return lie_bracket(a, b) + c; };
  const LieAlgebraReport bad = lie_algebra_check(xs, broken, 1e-8);
  CHECK_FALSE(bad.alternates);
  CHECK_FALSE(bad.jacobi_holds);
  CHECK_FALSE(bad.passed);
}

TEST_CASE("lie_subalgebra_check") {
  const Manifold r2 = euclidean_manifold(2, 12);
  const VectorField dx = coordinate_field(r2, 0);
  const VectorField dy = coordinate_field(r2, 1);
  const VectorField xdy = VectorField::from_ambient(r2, map_affine(2, {0.0, 0.0, 1.0, 0.0}, {0.0, 0.0}), "x dy");
  // [dx, x dy] = dy: span{dx, dy, x dy} is closed
  const SubalgebraReport closed = lie_subalgebra_check({dx, dy, xdy}, {dx, dy, xdy}, default_bracket(), 1e-9);
  CHECK(closed.passed);
  CHECK(max_abs_diff(closed.coefficients[0][2], Vector{0.0, 1.0, 0.0}) < 1e-9);
  // span{dx, x dy} misses dy
  CHECK_FALSE(lie_subalgebra_check({dx, xdy}, {dx, dy, xdy}, default_bracket(), 1e-9).passed);
  CHECK_THROWS_AS(lie_subalgebra_check({dx, 2.0 * dx}, {dx}, default_bracket(), 1e-9), InconclusiveSpan);
}
