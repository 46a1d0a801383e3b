// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include <fmt/format.h>

#include "liekit/calculus/battery.hpp"
#include "liekit/calculus/smoothness.hpp"
#include "liekit/field/derivation.hpp"
#include "liekit/lie/lie_algebra.hpp"
#include "liekit/models/fields.hpp"
#include "liekit/models/lie_groups.hpp"
#include "liekit/models/matrix.hpp"
#include "liekit/models/spaces.hpp"
#include "liekit/tangent/bundle.hpp"

using namespace liekit;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

void raise(double& worst, double r) {
  if (!(r <= worst)) worst = r;
}

std::string sci(double v) { return fmt::format("{:.2e}", v); }

RealMap bend() {
  return RealMap::from_expr(2, 2, [](auto x) {
    using T = typename decltype(x)::value_type;
    using std::sin;
    return std::vector<T>{x[0] + 0.1 * x[1] * x[1], x[1] + 0.2 * sin(x[0])};
  }, "bend");
}

RealMap twist() {
  return RealMap::from_expr(2, 2, [](auto x) {
    using T = typename decltype(x)::value_type;
    using std::cos;
    return std::vector<T>{0.5 * x[0] - 0.3 * x[1], x[1] + 0.1 * x[0] * x[0] + 0.05 * cos(x[1])};
  }, "twist");
}

RealMap abs_field() {
  return RealMap::from_expr(1, 1, [](auto x) {
    using T = typename decltype(x)::value_type;
    using std::abs;
    return std::vector<T>{abs(x[0])};
  }, "|x|");
}

// 1. Jets against central differences.
Outcome ad_vs_fd() {
  double worst = 0.0;
  std::size_t failing = 0, maps = 0;
  for (std::size_t dim : {1, 2}) {
    const Region region = Region::box(Vector(dim, -2.0), Vector(dim, 2.0), 100, 0);
    for (const auto& f : function_battery(dim)) {
      const auto r = smooth_on_probe(region, f, 2, 100, 1e-5);
      ++maps;
      raise(worst, r.max_fd_residual);
      if (!r.passed || r.samples_checked != 100) ++failing;
    }
  }
  return {failing == 0, fmt::format("{} maps x 100 points, max scaled residual {} (tol 1e-5)", maps, sci(worst))};
}

// 2. Chart compatibility.
Outcome chart_compat() {
  const Chart id2 = Chart::identity(Region::box({-2.0, -2.0}, {2.0, 2.0}, 32));
  const auto flat = smooth_compat(id2, id2, {.order = 3});
  auto [id1, cubic] = nonlinear_chart_pair();
  const auto nl = smooth_compat(id1, cubic, {.order = 3});
  const Chart id_unit = Chart::identity(Region::box({-1.0}, {1.0}, 24), "id");
  const auto bad = smooth_compat(id_unit, cube_root_chart(), {.order = 3});
  double nearest = INFINITY;
  for (const auto& f : bad.failures) nearest = std::min(nearest, std::abs(f.point[0]));
  const bool ok = flat.passed && nl.passed && !bad.passed && nearest < 1e-2;
  return {ok, fmt::format("identity {} ({}), nonlinear pair {} ({}), cube root {} with failure at |x| = {}",
                          flat.passed ? "pass" : "FAIL", sci(flat.max_fd_residual), nl.passed ? "pass" : "FAIL",
                          sci(nl.max_fd_residual), bad.passed ? "PASSED" : "fails", sci(nearest))};
}

// 3. Coordinate basis reproduces the action.
Outcome coordinatization() {
  auto [id1, cubic] = nonlinear_chart_pair();
  const Manifold m = manifold_new({id1, cubic});
  const Manifold r2 = euclidean_manifold(2);
  Rng rng(3);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const Manifold& man = (k % 2 == 0) ? r2 : m;
    const auto& samples = man.carrier_samples();
    const Vector& p = samples[rng.index(samples.size())];
    const Chart& c = man.chart_at(p);
    Vector comps(c.dim());
    for (auto& x : comps) x = rng.uniform(-2, 2);
    const TangentVector v(c, p, comps);
    for (const auto& psi : man.charts()) {
      if (!psi.domain().contains(p)) continue;
      const Vector coeffs = component_function(v, psi);
      for (const auto& f : function_battery(man.ambient_dim())) {
        double sum = 0.0;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
          Vector e(coeffs.size(), 0.0);
          e[i] = 1.0;
          sum += coeffs[i] * tangent_apply(coordinate_vector(psi, p, e), f);
        }
        const double direct = tangent_apply(v, f);
        raise(worst, std::abs(sum - direct) / (1.0 + std::abs(direct)));
      }
    }
  }
  return {worst <= 1e-8, fmt::format("50 vectors, every covering chart, battery: max residual {} (tol 1e-8)", sci(worst))};
}

// 4. Bundle charts.
Outcome bundle_charts() {
  auto [id1, cubic] = nonlinear_chart_pair();
  Rng rng(9);
  double worst = 0.0;
  for (const Chart* c : {&id1, &cubic})
    for (int k = 0; k < 50; ++k) {
      const Vector p{rng.uniform(-1.95, 1.95)};
      const Vector x = (*c)(p);
      const Vector u{rng.uniform(-2, 2)};
      const TMCoords back = apply_chart_TM(*c, inv_chart_TM(*c, x, u));
      raise(worst, std::max(max_abs_diff(back.x, x), max_abs_diff(back.u, u)));
      const TangentVector v(*c, p, u);
      const TangentVector again = inv_chart_TM(*c, apply_chart_TM(*c, v).x, apply_chart_TM(*c, v).u);
      raise(worst, std::max(max_abs_diff(again.base(), p), max_abs_diff(again.comps(), u)));
    }
  const auto transition = atlas_TM_check(id1, cubic, {.order = 3});
  return {worst <= 1e-8 && transition.passed,
          fmt::format("round trips on 2 x 50 points: max {} (tol 1e-8); TM transition probe {} ({})", sci(worst),
                      transition.passed ? "pass" : "FAIL", sci(transition.max_fd_residual))};
}

// 5. Push-forward.
Outcome push_forward_law() {
  const Manifold r2 = euclidean_manifold(2);
  const std::vector<RealMap> maps{bend(), twist(), map_affine(2, {1.0, 2.0, -0.5, 3.0}, {0.1, 0.2})};
  const auto battery = function_battery(2);
  Rng rng(21);
  double defining = 0.0, functor = 0.0;
  for (int k = 0; k < 20; ++k) {
    const auto& samples = r2.carrier_samples();
    const Vector& p = samples[rng.index(samples.size())];
    const TangentVector v(r2.charts()[0], p, {rng.uniform(-1, 1), rng.uniform(-1, 1)});
    const RealMap& f = maps[k % maps.size()];
    const RealMap& h = battery[rng.index(battery.size())];
    raise(defining, std::abs(tangent_apply(push_forward(f, r2, r2, v), h) - tangent_apply(v, map_compose(h, f))));
    const TangentVector lhs = push_forward(map_compose(twist(), f), r2, r2, v);
    const TangentVector rhs = push_forward(twist(), r2, r2, push_forward(f, r2, r2, v));
    raise(functor, max_abs_diff(lhs.comps(), rhs.comps()));
  }
  return {defining <= 1e-7 && functor <= 1e-7,
          fmt::format("20 triples: defining equation {}, functoriality {} (tol 1e-7)", sci(defining), sci(functor))};
}

// 6. Both smoothness characterizations of a field.
Outcome field_smoothness() {
  const ProbeOptions opt{.order = 3};
  const Manifold r2 = euclidean_manifold(2);
  Rng rng(4);
  const VectorField poly = random_polynomial_field(r2, 3, rng);
  const auto good = smooth_vf_check(poly, opt);
  bool sharp_ok = true;
  for (const auto& f : function_battery(2))
    sharp_ok = sharp_ok && smooth_on_probe(r2.carrier_region(), vf_sharp(poly, f), opt).passed;

  auto [id1, cubic] = nonlinear_chart_pair();
  const Manifold m = manifold_new({cubic, id1});
  const auto curved = smooth_vf_check(VectorField::from_ambient(m, map_affine(1, {0.5}, {1.0})), opt);

  const Manifold r1 = euclidean_manifold(1);
  const auto bad = smooth_vf_check(VectorField::from_ambient(r1, abs_field()), opt);
  const bool agree = good.consistent && curved.consistent && bad.consistent;
  const bool ok = good.passed && sharp_ok && curved.passed && !bad.bundle.passed && !bad.local.passed && agree;
  return {ok, fmt::format("polynomial field {}, X#f probes {}, nonlinear atlas {}, |x| field {}, routes {}",
                          good.passed ? "passes" : "FAILS", sharp_ok ? "pass" : "FAIL",
                          curved.passed ? "passes" : "FAILS", bad.passed ? "PASSES" : "fails both",
                          agree ? "agree" : "DISAGREE")};
}

// 7. Bracket algebra.
Outcome bracket_algebra() {
  const Manifold r2 = euclidean_manifold(2, 16);
  const auto battery = function_battery(2);
  Rng rng(10);
  double anti = 0.0, routes = 0.0, leibniz = 0.0, jacobi = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const VectorField x = random_polynomial_field(r2, 2, rng);
    const VectorField y = random_polynomial_field(r2, 2, rng);
    const VectorField z = random_polynomial_field(r2, 2, rng);
    const VectorField xy = lie_bracket(x, y);
    const VectorField yx = lie_bracket(y, x);
    for (const auto& p : r2.carrier_samples()) {
      const Vector a = vf_apply(xy, p).comps();
      const Vector b = vf_apply(yx, p).comps();
      for (std::size_t i = 0; i < 2; ++i) raise(anti, std::abs(a[i] + b[i]));
    }
    for (const auto& f : battery) {
      const RealMap oracle = bracket_action(x, y, f);
      for (const auto& p : r2.carrier_samples()) {
        const double lhs = tangent_apply(vf_apply(xy, p), f);
        raise(routes, std::abs(lhs - oracle.scalar(p)) / (1.0 + std::abs(lhs)));
      }
    }
    for (std::size_t i = 0; i < kBatteryPolynomials; ++i) {
      const RealMap& f = battery[i];
      const RealMap& g = battery[(i + 1) % kBatteryPolynomials];
      const RealMap fg = vf_sharp(xy, map_mul(f, g));
      const RealMap xf = vf_sharp(xy, f);
      const RealMap xg = vf_sharp(xy, g);
      for (const auto& p : r2.carrier_samples()) {
        const double lhs = fg.scalar(p);
        raise(leibniz, std::abs(lhs - (f.scalar(p) * xg.scalar(p) + g.scalar(p) * xf.scalar(p))) / (1.0 + std::abs(lhs)));
      }
    }
    const VectorField sum =
        lie_bracket(x, lie_bracket(y, z)) + lie_bracket(y, lie_bracket(z, x)) + lie_bracket(z, lie_bracket(x, y));
    raise(jacobi, field_distance(sum, VectorField::zero(r2)));
  }
  const bool ok = anti <= 1e-10 && routes <= 1e-6 && leibniz <= 1e-7 && jacobi <= 1e-5;
  return {ok, fmt::format("10 triples: antisymmetry {} (1e-10), routes {} (1e-6), Leibniz {} (1e-7), Jacobi {} (1e-5)",
                          sci(anti), sci(routes), sci(leibniz), sci(jacobi))};
}

// 8. Fields and derivations.
Outcome derivation_round_trip() {
  const Manifold r2 = euclidean_manifold(2, 12);
  Rng rng(3);
  double fields = 0.0, actions = 0.0;
  for (int k = 0; k < 5; ++k) {
    const VectorField x = random_polynomial_field(r2, 2, rng);
    const VectorField back = vf_of_derivation(derivation_of(x), r2);
    raise(fields, field_distance(x, back));
    const Derivation d = derivation_of(x);
    const Derivation d2 = derivation_of(back);
    for (const auto& f : function_battery(2)) {
      const RealMap a = d(f);
      const RealMap b = d2(f);
      for (const auto& p : r2.carrier_samples()) raise(actions, std::abs(a.scalar(p) - b.scalar(p)));
    }
  }
  auto [id1, cubic] = nonlinear_chart_pair();
  const Manifold m = manifold_new({id1, cubic});
  const VectorField y = VectorField::from_ambient(m, RealMap::from_expr(1, 1, [](auto x) {
    using T = typename decltype(x)::value_type;
    return std::vector<T>{0.3 + x[0] * x[0]};
  }));
  const VectorField yb = vf_of_derivation(derivation_of(y), m);
  for (const auto& p : m.carrier_samples())
    for (std::size_t k = 0; k < m.charts().size(); ++k) {
      const Chart& c = m.charts()[k];
      if (c.domain().contains(p)) raise(fields, max_abs_diff(y.comps(k)(c(p)), yb.comps(k)(c(p))));
    }
  return {fields <= 1e-8 && actions <= 1e-6,
          fmt::format("X -> D -> X' {} (1e-8); D -> X -> D' {} (1e-6)", sci(fields), sci(actions))};
}

// 9. Diff group.
Outcome diff_group_laws() {
  const Manifold disk = disk_manifold(16);
  const auto g = diff_group(disk);
  std::vector<DiffElement> xs;
  for (const auto& f : disk_automorphisms()) xs.push_back(diff_element(disk, f.map, f.inverse, f.name));
  const auto r = group_axioms_check(g, xs, 1e-9);

  Region half = Region::from_predicate(
      2, [](Point x) { return x[0] * x[0] + x[1] * x[1] < 1.0 && x[0] > 0.0; }, {}, {}, "half");
  std::vector<Vector> half_samples;
  for (const auto& x : disk.carrier_samples())
    if (x[0] > 0.01) half_samples.push_back(x);
  half = half.with_samples(half_samples);
  const Region carrier = disk.carrier_region();
  const auto rejected = automorphism_check(disk, PartialMap(map_identity(2), half), pmap_id_on(carrier));
  return {r.passed && xs.size() == 6 && !rejected.passed,
          fmt::format("{} fixtures: axioms {} (max {}, tol 1e-9); half-domain map {}", xs.size(),
                      r.passed ? "hold" : "FAIL: " + r.failed_axiom, sci(r.max_residual),
                      rejected.passed ? "ACCEPTED" : "rejected")};
}

// 10. Lie group instances.
Outcome lie_groups() {
  const LieGroup e2 = euclidean_lie_group(2);
  const LieGroup gl2 = gl_group(2);
  Rng rng(17);
  double inverse = 0.0;
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 2);
    SquareMatrix a = SquareMatrix::identity(n);
    for (auto& x : a.entries) x += rng.uniform(-0.5, 0.5);
    if (std::abs(det(a)) < 0.2) {
      --k;
      continue;
    }
    raise(inverse, max_abs_diff((a * matrix_inv(a)).entries, SquareMatrix::identity(n).entries));
  }
  double trace_gap = 0.0;
  for (std::size_t n : {2, 3}) {
    const auto jets = jet_eval(det_map(n), SquareMatrix::identity(n).entries, 1);
    for (int k = 0; k < 5; ++k) {
      Vector b(n * n);
      for (auto& x : b) x = rng.uniform(-2, 2);
      double d = 0.0;
      for (std::size_t i = 0; i < n * n; ++i) {
        const std::size_t idx[1] = {i};
        d += jets[0].derivative(idx) * b[i];
      }
      raise(trace_gap, std::abs(d - trace(SquareMatrix::from_flat(n, b))));
    }
  }
  const bool certs = e2.mult_certificate.passed && e2.inv_certificate.passed && gl2.mult_certificate.passed &&
                     gl2.inv_certificate.passed;
  return {certs && inverse <= 1e-8 && trace_gap <= 1e-6,
          fmt::format("certificates {}; A inv(A) - I {} on 20 matrices (1e-8); d det(I)[B] - tr B {} (1e-6)",
                      certs ? "pass" : "FAIL", sci(inverse), sci(trace_gap))};
}

// 11. Left action.
Outcome left_action_law() {
  bool ok = true;
  double hom = 0.0, unit = 0.0;
  std::string probes;
  for (const LieGroup& g : {euclidean_lie_group(2, 16), gl_group(2)}) {
    const auto elements = sample_group_elements(g, {g.manifold.carrier_samples()[1]}, 4, 2);
    const ActionReport r = action_check(g, g.manifold, left_action_of(g), elements, {}, 1e-9);
    raise(hom, r.homomorphism_residual);
    const double u = pmap_distance(g.manifold, left_action(g, g.unit), pmap_id_on(g.manifold.carrier_region()));
    raise(unit, u);
    ok = ok && r.passed && u <= 1e-9;
    probes += r.joint.passed ? " pass" : " FAIL";
  }
  return {ok, fmt::format("L(gh) vs L(g)L(h) {}, L(unit) vs id {} (tol 1e-9); joint probes{}", sci(hom), sci(unit),
                          probes)};
}

// 12. Lie algebra of G.
Outcome lie_algebra() {
  const LieGroup e2 = euclidean_lie_group(2, 16);
  const LieAlgebraOf ae = lie_algebra_of(e2);
  double abelian = 0.0;
  for (const auto& x : ae.basis)
    for (const auto& y : ae.basis) raise(abelian, field_distance(lie_bracket(x, y), VectorField::zero(e2.manifold)));

  const LieGroup gl2 = gl_group(2);
  const LieAlgebraOf ag = lie_algebra_of(gl2);
  double constants = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      SquareMatrix a = SquareMatrix::from_flat(2, Vector(4, 0.0));
      SquareMatrix b = a;
      a.entries[i] = 1.0;
      b.entries[j] = 1.0;
      raise(constants, max_abs_diff(ag.closure.coefficients[i][j], (a * b - b * a).entries));
    }
  const bool ok = ae.passed && abelian < 1e-10 && ag.passed && constants <= 1e-6 &&
                  ag.closure.span_residual < 1e-6 && ag.algebra.jacobi < 1e-5;
  return {ok, fmt::format("R^2 brackets {} (1e-10); GL(2) structure constants {} (1e-6), span {} (1e-6), Jacobi {} (1e-5)",
                          sci(abelian), sci(constants), sci(ag.closure.span_residual), sci(ag.algebra.jacobi))};
}

// 13. CLI determinism and exit codes.
struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(LIEKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Outcome cli_contract() {
  const Run a = run_cli("verify --model gl:2 --seed 7 --format json");
  const Run b = run_cli("verify --model gl:2 --seed 7 --format json");
  const bool same = a.code == 0 && !a.out.empty() && a.out == b.out;
  const int pass = run_cli("verify --model euclidean:2").code;
  const int fail = run_cli("verify --model gl:2 --tol 1e-30").code;
  const int usage = run_cli("verify --model klein:2").code;
  return {same && pass == 0 && fail == 1 && usage == 2,
          fmt::format("JSON runs {} ({} bytes); exit codes pass/fail/usage = {}/{}/{}", same ? "identical" : "DIFFER",
                      a.out.size(), pass, fail, usage)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AD-vs-FD oracle", ad_vs_fd},
      {"chart compatibility", chart_compat},
      {"tangent coordinatization", coordinatization},
      {"bundle charts", bundle_charts},
      {"push-forward", push_forward_law},
      {"field smoothness routes", field_smoothness},
      {"bracket algebra", bracket_algebra},
      {"derivation round trip", derivation_round_trip},
      {"Diff group", diff_group_laws},
      {"Lie group instances", lie_groups},
      {"left action", left_action_law},
      {"Lie algebra of G", lie_algebra},
      {"CLI determinism and exit codes", cli_contract},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    if (!o.passed) ++failures;
    std::cout << fmt::format("AC{:<2} {}  {:<32} {}", i + 1, o.passed ? "PASS" : "FAIL", criteria[i].first, o.detail)
              << std::endl;
  }
  std::cout << fmt::format("{} of {} criteria passed", criteria.size() - failures, criteria.size()) << std::endl;
  return failures == 0 ? 0 : 1;
}
