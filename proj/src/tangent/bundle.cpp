#include "liekit/tangent/bundle.hpp"

#include <algorithm>

namespace liekit {

TMCoords apply_chart_TM(const Chart& c, const TangentVector& v) {
  if (!domain_TM(c, v))
    throw OutOfDomain("apply_chart_TM: " + format_point(v.base()) + " is outside chart '" + c.id() + "'");
  return {c(v.base()), component_function(v, c)};
}

TangentVector inv_chart_TM(const Chart& c, Point x, Point u) {
  if (!codomain_TM(c, x, u))
    throw OutOfDomain("inv_chart_TM: " + format_point(x) + " is outside the codomain of chart '" + c.id() + "'");
  const Vector p = c.inverse(x);
  Vector e(c.dim(), 0.0);
  e[0] = 1.0;
  TangentVector sum = u[0] * coordinate_vector(c, p, e);
  for (std::size_t i = 1; i < c.dim(); ++i) {
    e[i - 1] = 0.0;
    e[i] = 1.0;
    sum = sum + u[i] * coordinate_vector(c, p, e);
  }
  return sum;
}

bool domain_TM(const Chart& c, const TangentVector& v) { return c.domain().contains(v.base()); }

bool codomain_TM(const Chart& c, Point x, Point u) { return u.size() == c.dim() && c.codomain().contains(x); }

RealMap tm_transition(const Chart& c1, const Chart& c2) {
  require(c1.ambient_dim() == c2.ambient_dim() && c1.dim() == c2.dim(), "tm_transition: chart dimensions differ");
  const std::size_t e = c1.dim();
  const RealMap g = map_compose(c2.fwd(), c1.inv());
  return RealMap::from_lift(
      2 * e, 2 * e,
      [g, e](std::span<const Jet> xu) {
        auto x = xu.subspan(0, e);
        auto u = xu.subspan(e, e);
        std::vector<Jet> out = g.lift(x);
        const auto du = directional_lift(g, x, u);
        out.insert(out.end(), du.begin(), du.end());
        return out;
      },
      "T(" + c2.id() + "o" + c1.id() + "^-1)");
}

SmoothnessReport atlas_TM_check(const Chart& c1, const Chart& c2, const ProbeOptions& options,
                                std::size_t directions_per_point) {
  const std::size_t e = c1.dim();
  std::vector<Vector> overlap;
  for (const auto* c : {&c1, &c2})
    for (const auto& s : c->domain().samples())
      if (c1.domain().contains(s.point) && c2.domain().contains(s.point) &&
          std::find(overlap.begin(), overlap.end(), s.point) == overlap.end())
        overlap.push_back(s.point);

  SmoothnessReport report;
  report.order_probed = options.order;
  report.seed = options.seed;
  if (overlap.empty()) return report;

  Rng rng(options.seed);
  std::vector<Vector> candidates;
  for (const auto& p : overlap) {
    const Vector x = c1(p);
    for (std::size_t k = 0; k < directions_per_point; ++k) {
      Vector xu = x;
      for (std::size_t i = 0; i < e; ++i) xu.push_back(rng.uniform(-1.0, 1.0));
      candidates.push_back(std::move(xu));
    }
  }
  auto cod1 = c1.codomain().predicate();
  auto inv1 = c1.inv();
  auto dom2 = c2.domain().predicate();
  Region::Predicate member = guarded([cod1, inv1, dom2, e](Point xu) {
    auto x = xu.subspan(0, e);
    return cod1(x) && dom2(inv1(x));
  });
  Region region = Region::from_predicate(2 * e, std::move(member), candidates, {}, "TM " + c1.id() + "->" + c2.id());
  if (region.degenerate())
    throw DegenerateRegion("atlas_TM_check: no overlap sample of '" + c1.id() + "' and '" + c2.id() +
                           "' admits the probe stencil");
  report.merge(smooth_on_probe(region, tm_transition(c1, c2), options));
  return report;
}

}  // namespace liekit
