#include <doctest.h>

#include <cmath>
#include <numbers>

#include "liekit/groups/diff_group.hpp"
#include "liekit/models/spaces.hpp"

using namespace liekit;

namespace {

GroupOn<double> reals_additive() {
  return {[](const double&) { return true; }, [](const double& a, const double& b) { return a + b; }, 0.0,
          [](const double& a) { return -a; }, [](const double& a, const double& b) { return std::abs(a - b); }};
}

RealMap rotation_map(double angle) {
  return map_affine(2, {std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle)}, {0.0, 0.0});
}

}  // namespace

TEST_CASE("pmap_apply examples") {
  Region disk = Region::ball({0.0, 0.0}, 1.0, 8);
  PartialMap id = pmap_id_on(disk);
  const double origin[] = {0.0, 0.0};
  const double far[] = {2.0, 0.0};
  const auto inside = id.apply(origin);
  REQUIRE(inside);
  CHECK(*inside == Vector{0.0, 0.0});
  const auto absent = pmap_apply(id, far);
  CHECK_FALSE(absent);
  // absence tells us the point is outside the domain
  CHECK_FALSE(id.dom().contains(far));
  CHECK_THROWS_AS(the(absent), ContractViolation);
  CHECK(the(inside) == Vector{0.0, 0.0});
}

TEST_CASE("pmap_compose examples") {
  Manifold disk = disk_manifold();
  const Region carrier = disk.carrier_region();
  PartialMap rot(rotation_map(0.4), carrier);
  PartialMap id = pmap_id_on(carrier);
  const PartialMap left = pmap_compose(id, rot);
  const PartialMap right = pmap_compose(rot, id);
  CHECK(pmap_distance(disk, left, rot) == 0.0);
  CHECK(pmap_distance(disk, right, rot) == 0.0);

  const PartialMap twice = pmap_compose(rot, rot);
  CHECK(pmap_distance(disk, twice, PartialMap(rotation_map(0.8), carrier)) < 1e-12);
  for (const auto& x : disk.carrier_samples()) CHECK(twice.dom().contains(x));
  CHECK(twice.dom().samples().size() == carrier.samples().size());

  PartialMap away(map_affine(2, {1, 0, 0, 1}, {5.0, 0.0}), carrier);
  const PartialMap lost = pmap_compose(id, away);
  CHECK(lost.empty_domain());

  const PartialMap idid = pmap_compose(id, id);
  CHECK(pmap_distance(disk, idid, id) == 0.0);
  const double p[] = {0.3, 0.1};
  CHECK(the(idid.apply(p)) == Vector{0.3, 0.1});
}

TEST_CASE("automorphism_check examples") {
  Manifold disk = disk_manifold();
  const Region carrier = disk.carrier_region();
  CHECK(automorphism_check(disk, pmap_id_on(carrier), pmap_id_on(carrier)).passed);

  Manifold r2 = euclidean_manifold(2);
  const Region plane = r2.carrier_region();
  auto shift = automorphism_check(r2, PartialMap(map_affine(2, {1, 0, 0, 1}, {1.5, -0.5}), plane),
                                  PartialMap(map_affine(2, {1, 0, 0, 1}, {-1.5, 0.5}), plane));
  CHECK(shift.passed);

  Region half = Region::from_predicate(
      2, [](Point x) { return x[0] * x[0] + x[1] * x[1] < 1.0 && x[0] > 0.0; }, {}, {}, "half");
  std::vector<Vector> half_samples;
  for (const auto& x : disk.carrier_samples())
    if (x[0] > 0.01) half_samples.push_back(x);
  half = half.with_samples(half_samples);
  auto bad = automorphism_check(disk, PartialMap(map_identity(2), half), pmap_id_on(carrier));
  CHECK_FALSE(bad.domain_matches);
  CHECK_FALSE(bad.passed);
  CHECK_FALSE(bad.domain_mismatches.empty());

  // a map that does not return to the carrier fails the diffeomorphism part
  auto out = automorphism_check(disk, PartialMap(map_affine(2, {2, 0, 0, 2}, {0, 0}), carrier),
                                PartialMap(map_affine(2, {0.5, 0, 0, 0.5}, {0, 0}), carrier));
  CHECK(out.domain_matches);
  CHECK_FALSE(out.passed);
}

TEST_CASE("group_axioms_check examples") {
  Rng rng(1);
  std::vector<double> xs;
  for (int i = 0; i < 12; ++i) xs.push_back(std::round(rng.uniform(-100, 100)));  // integers: sums are exact
  const auto ok = group_axioms_check(reals_additive(), xs, 0.0);
  CHECK(ok.passed);
  CHECK(ok.max_residual == 0.0);

  GroupOn<double> minus = reals_additive();
  minus.op = [](const double& a, const double& b) { return a - b; };
  const auto bad = group_axioms_check(minus, {1.0}, 1e-12);
  CHECK_FALSE(bad.associativity);
  CHECK(bad.failed_axiom == "associativity");
  CHECK(bad.counterexample == std::vector<std::size_t>{0, 0, 0});
}

TEST_CASE("grp_on and group_on_with round trip") {
  GroupOn<double> g = reals_additive();
  std::vector<double> xs = {0.0, 1.0, 2.5, -4.0};
  CHECK(group_axioms_check(g, xs, 0.0).passed);
  std::vector<double> candidates = xs;
  for (double x : xs) candidates.push_back(g.inv(x));
  const auto existence = grp_on_check(forget_inverse(g), xs, candidates, 0.0);
  CHECK(existence.passed);
  for (const auto& w : existence.inverse_witness) CHECK(w.has_value());

  const GroupOn<double> rebuilt = group_on_with(forget_inverse(g), xs, candidates, existence, 0.0);
  CHECK(group_axioms_check(rebuilt, xs, 0.0).passed);
  CHECK_THROWS_AS(rebuilt.inv(17.0), ContractViolation);

  // without inverses among the candidates the existence form fails
  const auto missing = grp_on_check(forget_inverse(g), xs, xs, 0.0);
  CHECK_FALSE(missing.passed);
  CHECK(missing.failed_axiom == "inverse existence");
}

TEST_CASE("Diff(disk) on rotations") {
  Manifold disk = disk_manifold(24);
  const auto g = diff_group(disk);
  const double third = std::numbers::pi / 3;
  std::vector<DiffElement> xs = {g.unit, diff_element(disk, rotation_map(third), rotation_map(-third), "r"),
                                 diff_element(disk, rotation_map(-third), rotation_map(third), "r^-1")};
  const auto r = group_axioms_check(g, xs, 1e-9);
  CHECK_MESSAGE(r.passed, r.failed_axiom);
  CHECK(r.max_residual < 1e-12);
}

TEST_CASE("Diff(disk) on the six linear automorphisms") {
  Manifold disk = disk_manifold(16);
  const auto g = diff_group(disk);
  std::vector<DiffElement> xs;
  for (const auto& f : disk_automorphisms()) xs.push_back(diff_element(disk, f.map, f.inverse, f.name));
  for (const auto& x : xs) CHECK(g.contains(x));
  const auto r = group_axioms_check(g, xs, 1e-9);
  CHECK_MESSAGE(r.passed, r.failed_axiom);
}

TEST_CASE("inverses of Diff elements agree on the carrier") {
  Manifold disk = disk_manifold();
  const Region carrier = disk.carrier_region();
  const double step = std::numbers::pi / 3;
  PartialMap r(rotation_map(step), carrier);
  PartialMap direct(rotation_map(-step), carrier);
  // r^5 is another expression of the inverse
  PartialMap five = r;
  for (int i = 0; i < 4; ++i) five = pmap_compose(r, five);
  CHECK(automorphism_check(disk, r, direct).passed);
  CHECK(automorphism_check(disk, r, five).passed);
  CHECK(pmap_distance(disk, direct, five) < 1e-9);
}

TEST_CASE("Diff(R^2) laws on affine fixtures") {
  Manifold r2 = euclidean_manifold(2, 12);
  const auto g = diff_group(r2);
  std::vector<DiffElement> xs;
  for (const auto& f : test_diffeos(2)) xs.push_back(diff_element(r2, f.map, f.inverse, f.name));
  const auto r = group_axioms_check(g, xs, 1e-9);
  CHECK_MESSAGE(r.passed, r.failed_axiom);
}
