#include "liekit/geometry/manifold.hpp"

#include <set>

namespace liekit {

IncompatibleCharts::IncompatibleCharts(std::string first, std::string second, SmoothnessReport report)
    : Error("charts '" + first + "' and '" + second + "' are not smoothly compatible: " + describe(report)),
      first_(std::move(first)),
      second_(std::move(second)),
      report_(std::move(report)) {}

Manifold Manifold::unchecked(std::vector<Chart> charts, const ProbeOptions& options) {
  require(!charts.empty(), "Manifold: at least one chart is required");
  std::set<std::string> ids;
  for (const auto& c : charts) {
    require(c.ambient_dim() == charts.front().ambient_dim() && c.dim() == charts.front().dim(),
            "Manifold: chart '" + c.id() + "' has different dimensions from '" + charts.front().id() + "'");
    require(ids.insert(c.id()).second, "Manifold: duplicate chart id '" + c.id() + "'");
  }
  std::vector<Vector> carrier;
  for (const auto& c : charts)
    for (const auto& s : c.domain().samples()) {
      bool seen = false;
      for (const auto& x : carrier)
        if (x == s.point) {
          seen = true;
          break;
        }
      if (!seen) carrier.push_back(s.point);
    }
  return Manifold(std::make_shared<const Impl>(Impl{std::move(charts), options, std::move(carrier)}));
}

Manifold Manifold::create(std::vector<Chart> charts, const ProbeOptions& options) {
  Manifold m = unchecked(std::move(charts), options);
  const auto& cs = m.charts();
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i; j < cs.size(); ++j) {
      SmoothnessReport r = smooth_compat(cs[i], cs[j], options);
      if (!r.passed) throw IncompatibleCharts(cs[i].id(), cs[j].id(), std::move(r));
    }
  return m;
}

bool Manifold::contains(Point p) const { return chart_index_at(p).has_value(); }

std::optional<std::size_t> Manifold::chart_index_at(Point p) const {
  for (std::size_t i = 0; i < impl_->charts.size(); ++i)
    if (impl_->charts[i].domain().contains(p)) return i;
  return std::nullopt;
}

const Chart& Manifold::chart_at(Point p) const {
  const auto idx = chart_index_at(p);
  if (!idx) throw OutOfDomain("point " + format_point(p) + " is outside the carrier");
  return impl_->charts[*idx];
}

const Chart& Manifold::chart(const std::string& id) const {
  for (const auto& c : impl_->charts)
    if (c.id() == id) return c;
  throw ContractViolation("Manifold: no chart with id '" + id + "'");
}

Region Manifold::carrier_region() const {
  std::vector<Region::Predicate> preds;
  for (const auto& c : impl_->charts) preds.push_back(c.domain().predicate());
  Region::Predicate any = [preds](Point p) {
    for (const auto& pred : preds)
      if (pred(p)) return true;
    return false;
  };
  return Region::from_predicate(ambient_dim(), std::move(any), impl_->carrier, impl_->charts.front().domain().bounds(),
                                "carrier");
}

std::vector<std::pair<std::string, SmoothnessReport>> Manifold::compatibility_reports() const {
  std::vector<std::pair<std::string, SmoothnessReport>> out;
  const auto& cs = impl_->charts;
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i; j < cs.size(); ++j)
      out.emplace_back(cs[i].id() + "/" + cs[j].id(), smooth_compat(cs[i], cs[j], impl_->options));
  return out;
}

Manifold charts_submanifold(const Manifold& m, const Region& u) {
  require(u.dim() == m.ambient_dim(), "charts_submanifold: region dimension does not match the ambient space");
  std::vector<Chart> kept;
  for (const auto& c : m.charts()) {
    Chart r = c.restrict(u);
    if (!r.domain().degenerate()) kept.push_back(std::move(r));
  }
  if (kept.empty()) throw EmptySubmanifold("charts_submanifold: no chart domain keeps a sample inside '" + u.name() + "'");
  return Manifold::unchecked(std::move(kept), m.probe_options());
}

Manifold prod_charts(const Manifold& m1, const Manifold& m2) {
  std::vector<Chart> charts;
  for (const auto& a : m1.charts())
    for (const auto& b : m2.charts())
      charts.emplace_back(a.id() + "*" + b.id(), product_region(a.domain(), b.domain()),
                          product_region(a.codomain(), b.codomain()), map_product(a.fwd(), b.fwd()),
                          map_product(a.inv(), b.inv()));
  return Manifold::unchecked(std::move(charts), m1.probe_options());
}

}  // namespace liekit
