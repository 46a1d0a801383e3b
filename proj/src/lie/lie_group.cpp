#include "liekit/lie/lie_group.hpp"

#include <cmath>
#include <limits>

namespace liekit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Vector concat(Point a, Point b) {
  Vector out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string axioms_summary(const GroupAxiomsReport& r) {
  return r.failed_axiom.empty() ? "ok" : r.failed_axiom + " (residual " + std::to_string(r.max_residual) + ")";
}

}  // namespace

NotALieGroup::NotALieGroup(const std::string& what, GroupAxiomsReport axioms, DiffReport mult, DiffReport inv)
    : Error(what), axioms_(std::move(axioms)), mult_(std::move(mult)), inv_(std::move(inv)) {}

GroupOn<Vector> point_group(const Manifold& m, const RealMap& times, Vector unit, const RealMap& inverse) {
  return GroupOn<Vector>{[m](const Vector& x) { return m.contains(x); },
                         [times](const Vector& a, const Vector& b) { return times(concat(a, b)); },
                         std::move(unit),
                         [inverse](const Vector& a) { return inverse(a); },
                         [](const Vector& a, const Vector& b) { return max_abs_diff(a, b); }};
}

LieGroup lie_group_new(const Manifold& m, const RealMap& times, Vector unit, const RealMap& inverse,
                       const ProbeOptions& options) {
  const std::size_t a = m.ambient_dim();
  require(times.in_dim() == 2 * a && times.out_dim() == a, "lie_group_new: multiplication must map R^2a -> R^a");
  require(inverse.in_dim() == a && inverse.out_dim() == a, "lie_group_new: inversion must map R^a -> R^a");
  require(unit.size() == a, "lie_group_new: unit has the wrong dimension");

  GroupOn<Vector> group = point_group(m, times, unit, inverse);
  GroupAxiomsReport axioms = group_axioms_check(group, m.carrier_samples(), kGroupAxiomTol);
  if (!axioms.passed)
    throw NotALieGroup("lie_group_new: group axioms fail on the carrier: " + axioms_summary(axioms), axioms, {}, {});

  Manifold product = prod_charts(m, m);
  DiffReport mult = diff_check(product, m, times, options);
  DiffReport inv = diff_check(m, m, inverse, options);
  if (!mult.passed || !inv.passed) {
    std::string what = "lie_group_new:";
    if (!mult.passed) what += " multiplication is not smooth (" + std::to_string(mult.failures()) + " samples)";
    if (!inv.passed) what += " inversion is not smooth (" + std::to_string(inv.failures()) + " samples)";
    throw NotALieGroup(what, std::move(axioms), std::move(mult), std::move(inv));
  }
  return LieGroup{m,    std::move(product),  times,          inverse,       std::move(unit),
                  std::move(group), std::move(axioms), std::move(mult), std::move(inv)};
}

RealMap left_mult(const LieGroup& g, Point element) {
  if (!g.manifold.contains(element))
    throw OutOfDomain("left_mult: " + format_point(element) + " is outside the group carrier");
  const std::size_t a = g.manifold.ambient_dim();
  RealMap embed = map_concat(map_constant(a, Vector(element.begin(), element.end())), map_identity(a));
  return map_compose(g.times, embed);
}

DiffReport left_mult_certificate(const LieGroup& g, Point element, const ProbeOptions& options) {
  return diff_check(g.manifold, g.manifold, left_mult(g, element), options);
}

PartialMap left_action(const LieGroup& g, Point element) {
  return PartialMap(left_mult(g, element), g.manifold.carrier_region());
}

std::vector<Vector> sample_group_elements(const LieGroup& g, const std::vector<Vector>& generators,
                                          std::size_t n_random, std::uint64_t seed) {
  std::vector<Vector> out{g.unit};
  for (const auto& x : generators) {
    require(g.manifold.contains(x), "sample_group_elements: generator outside the carrier");
    out.push_back(x);
  }
  for (const auto& x : generators)
    for (const auto& y : generators) out.push_back(g.group.op(x, y));
  const auto& carrier = g.manifold.carrier_samples();
  Rng rng(seed);
  for (std::size_t i = 0; i < n_random && !carrier.empty(); ++i) out.push_back(carrier[rng.index(carrier.size())]);
  return out;
}

GroupAction left_action_of(const LieGroup& g) {
  return GroupAction{[g](const Vector& x) { return left_action(g, x); }, g.times};
}

ActionReport action_check(const LieGroup& g, const Manifold& m2, const GroupAction& action,
                          const std::vector<Vector>& elements, const ProbeOptions& options, double hom_tol) {
  const std::size_t a = g.manifold.ambient_dim();
  require(action.joint.in_dim() == a + m2.ambient_dim() && action.joint.out_dim() == m2.ambient_dim(),
          "action_check: joint map must send (g, m) to a point of M");
  ActionReport report;

  std::vector<PartialMap> rho;
  for (const auto& x : elements) rho.push_back(action.rho(x));

  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto r = automorphism_check(m2, rho[i], action.rho(g.group.inv(elements[i])), options);
    if (!r.passed) {
      report.automorphisms = false;
      report.problems.push_back("rho(" + format_point(elements[i]) + ") is not an automorphism");
    }
  }

  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j) {
      const PartialMap lhs = action.rho(g.group.op(elements[i], elements[j]));
      const double d = pmap_distance(m2, lhs, pmap_compose(rho[i], rho[j]));
      if (!(d <= report.homomorphism_residual)) report.homomorphism_residual = d;
    }
  report.homomorphism = report.homomorphism_residual <= hom_tol;
  if (!report.homomorphism) report.problems.push_back("rho(gh) differs from rho(g) o rho(h)");

  // The joint map has to agree with rho before its smoothness says anything.
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (const auto& x : m2.carrier_samples()) {
      const auto expected = rho[i].apply(x);
      if (!expected) continue;
      if (!(max_abs_diff(*expected, action.joint(concat(elements[i], x))) <= hom_tol)) {
        report.problems.push_back("joint map disagrees with rho at " + format_point(x));
        report.homomorphism = false;
        break;
      }
    }

  report.joint = diff_check(prod_charts(g.manifold, m2), m2, action.joint, options);
  if (!report.joint.passed) report.problems.push_back("joint map is not smooth");
  report.passed = report.automorphisms && report.homomorphism && report.joint.passed;
  return report;
}

InvarianceReport invariant_under_check(const VectorField& x, const RealMap& f, const std::vector<RealMap>& battery,
                                       double tol) {
  const Manifold& m = x.manifold();
  require(f.in_dim() == m.ambient_dim() && f.out_dim() == m.ambient_dim(),
          "invariant_under_check: F must be a self-map of the ambient space");
  InvarianceReport report;
  for (const auto& p : m.carrier_samples()) {
    ++report.samples;
    double worst = 0.0;
    try {
      const Vector q = f(p);
      if (!m.contains(q)) throw OutOfDomain("invariant_under_check: F leaves the carrier");
      const TangentVector at_q = vf_apply(x, q);
      const TangentVector pushed = push_forward(f, m, m, vf_apply(x, p));
      for (const auto& h : battery) {
        const double lhs = tangent_apply(at_q, h);
        const double r = std::abs(lhs - tangent_apply(pushed, h)) / (1.0 + std::abs(lhs));
        if (!(r <= worst)) worst = r;
      }
    } catch (const Error&) {
      worst = kInf;
    }
    if (!(worst <= report.max_residual)) report.max_residual = worst;
  }
  report.passed = report.max_residual <= tol;
  return report;
}

VectorField left_invariant_extend(const LieGroup& g, const TangentVector& v) {
  require(max_abs_diff(v.base(), g.unit) <= kGroupAxiomTol, "left_invariant_extend: vector is not based at the unit");
  const Manifold& m = g.manifold;
  const std::size_t e = m.dim();
  const Chart cv = v.chart();
  const Vector w0 = cv(g.unit);
  const Vector dir = v.comps();
  const RealMap times = g.times;

  std::vector<RealMap> comps;
  for (const auto& c : m.charts()) {
    // H(u, w) = c(c^-1(u) . cv^-1(w)); the field is d_w H at w0 applied to v.
    RealMap h = RealMap::from_lift(2 * e, e, [c, cv, times, e](std::span<const Jet> uw) {
      auto args = c.inv().lift(uw.first(e));
      const auto y = cv.inv().lift(uw.subspan(e));
      args.insert(args.end(), y.begin(), y.end());
      return c.fwd().lift(times.lift(args));
    });
    comps.push_back(RealMap::from_lift(
        e, e,
        [h, w0, dir, e](std::span<const Jet> u) {
          std::vector<Jet> at(u.begin(), u.end());
          std::vector<Jet> d(e, Jet::constant(u[0].layout(), 0.0));
          for (std::size_t i = 0; i < e; ++i) {
            at.push_back(Jet::constant(u[0].layout(), w0[i]));
            d.push_back(Jet::constant(u[0].layout(), dir[i]));
          }
          return directional_lift(h, at, d);
        },
        "L*v@" + c.id()));
  }
  return VectorField(m, std::move(comps), "L*" + format_point(dir));
}

}  // namespace liekit
