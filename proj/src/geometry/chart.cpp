#include "liekit/geometry/chart.hpp"

#include <cmath>

namespace liekit {

Region::Predicate guarded(Region::Predicate pred) {
  return [pred = std::move(pred)](Point p) {
    try {
      return pred(p);
    } catch (const Error&) {
      return false;
    }
  };
}

std::vector<std::string> validate_chart(const Region& domain, const Region& codomain, const RealMap& fwd,
                                        const RealMap& inv) {
  std::vector<std::string> problems;
  for (const auto& s : domain.samples()) {
    const Vector u = fwd(s.point);
    if (!codomain.contains(u)) problems.push_back("image of " + format_point(s.point) + " is outside the codomain");
    const double err = max_abs_diff(inv(u), s.point);
    if (!(err <= kChartRoundTripTol))
      problems.push_back("inv(fwd(x)) != x at " + format_point(s.point) + " (error " + std::to_string(err) + ")");
  }
  for (const auto& s : codomain.samples()) {
    const double err = max_abs_diff(fwd(inv(s.point)), s.point);
    if (!(err <= kChartRoundTripTol))
      problems.push_back("fwd(inv(u)) != u at " + format_point(s.point) + " (error " + std::to_string(err) + ")");
  }
  return problems;
}

Chart::Chart(std::string id, Region domain, Region codomain, RealMap fwd, RealMap inv) {
  require(fwd.in_dim() == domain.dim() && fwd.out_dim() == codomain.dim(),
          "Chart '" + id + "': forward map does not match domain/codomain dimensions");
  require(inv.in_dim() == codomain.dim() && inv.out_dim() == domain.dim(),
          "Chart '" + id + "': inverse map does not match domain/codomain dimensions");
  const auto problems = validate_chart(domain, codomain, fwd, inv);
  if (!problems.empty()) throw ContractViolation("Chart '" + id + "': " + problems.front());
  impl_ = std::make_shared<const Impl>(
      Impl{std::move(id), std::move(domain), std::move(codomain), std::move(fwd), std::move(inv)});
}

Chart Chart::identity(Region domain, std::string id) {
  const std::size_t n = domain.dim();
  Region codomain = domain;
  return Chart(std::move(id), std::move(domain), std::move(codomain), map_identity(n), map_identity(n));
}

Chart Chart::restrict(const Region& u) const {
  Region dom = domain().intersect(u, domain().name() + "|" + u.name());
  auto cod_pred = codomain().predicate();
  auto inv_map = inv();
  auto dom_pred = dom.predicate();
  Region::Predicate image = guarded([cod_pred, inv_map, dom_pred](Point y) {
    if (!cod_pred(y)) return false;
    const Vector x = inv_map(y);
    return dom_pred(x);
  });
  std::vector<Vector> candidates;
  for (const auto& s : dom.samples()) candidates.push_back(fwd()(s.point));
  Region cod = Region::from_predicate(dim(), std::move(image), candidates, codomain().bounds(),
                                      codomain().name() + "|" + u.name());
  return Chart(id(), std::move(dom), std::move(cod), fwd(), inv());
}

namespace {

// c2 o c1^-1 on the c1-image of the given overlap points.
SmoothnessReport transition_probe(const Chart& c1, const Chart& c2, const std::vector<Vector>& overlap,
                                  const ProbeOptions& options) {
  auto cod1 = c1.codomain().predicate();
  auto inv1 = c1.inv();
  auto dom2 = c2.domain().predicate();
  Region::Predicate member = guarded([cod1, inv1, dom2](Point y) { return cod1(y) && dom2(inv1(y)); });
  std::vector<Vector> images;
  for (const auto& x : overlap) {
    try {
      images.push_back(c1(x));
    } catch (const Error&) {
    }
  }
  Region image = Region::from_predicate(c1.dim(), std::move(member), images, c1.codomain().bounds(),
                                        c1.id() + "->" + c2.id());
  if (image.degenerate())
    throw DegenerateRegion("smooth_compat: the overlap of '" + c1.id() + "' and '" + c2.id() +
                           "' has samples but none admits the probe stencil");
  return smooth_on_probe(image, map_compose(c2.fwd(), c1.inv()), options);
}

}  // namespace

SmoothnessReport smooth_compat(const Chart& c1, const Chart& c2, const ProbeOptions& options) {
  require(c1.ambient_dim() == c2.ambient_dim() && c1.dim() == c2.dim(),
          "smooth_compat: charts '" + c1.id() + "' and '" + c2.id() + "' have different dimensions");
  std::vector<Vector> overlap;
  auto consider = [&](const Vector& x) {
    if (!c1.domain().contains(x) || !c2.domain().contains(x)) return;
    for (const auto& y : overlap)
      if (y == x) return;
    overlap.push_back(x);
  };
  for (const auto& s : c1.domain().samples()) consider(s.point);
  for (const auto& s : c2.domain().samples()) consider(s.point);

  SmoothnessReport report;
  report.order_probed = options.order;
  report.seed = options.seed;
  if (overlap.empty()) return report;
  report.merge(transition_probe(c1, c2, overlap, options));
  report.merge(transition_probe(c2, c1, overlap, options));
  return report;
}

}  // namespace liekit
