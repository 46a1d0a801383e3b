#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liekit/geometry/chart.hpp"

namespace liekit {

/// A chart pair failed the compatibility probe.
class IncompatibleCharts : public Error {
 public:
  IncompatibleCharts(std::string first, std::string second, SmoothnessReport report);
  const std::string& first() const { return first_; }
  const std::string& second() const { return second_; }
  const SmoothnessReport& report() const { return report_; }

 private:
  std::string first_;
  std::string second_;
  SmoothnessReport report_;
};

/// An embedded smooth manifold: a non-empty list of pairwise compatible charts
/// sharing one ambient and one chart dimension. The carrier is the union of
/// the chart domains; points outside it are refused, not extended by zero.
class Manifold {
 public:
  /// Builds the manifold only after every chart pair (self pairs included)
  /// passes smooth_compat. Throws IncompatibleCharts naming the first failing
  /// pair in declaration order.
  static Manifold create(std::vector<Chart> charts, const ProbeOptions& options = {});
  /// Skips the pairwise probes; for constructions that preserve compatibility
  /// (restriction, products). Dimensions are still checked.
  static Manifold unchecked(std::vector<Chart> charts, const ProbeOptions& options = {});

  const std::vector<Chart>& charts() const { return impl_->charts; }
  const ProbeOptions& probe_options() const { return impl_->options; }
  std::size_t ambient_dim() const { return impl_->charts.front().ambient_dim(); }
  std::size_t dim() const { return impl_->charts.front().dim(); }

  bool contains(Point p) const;
  /// First chart (declaration order) whose domain contains p.
  std::optional<std::size_t> chart_index_at(Point p) const;
  /// Like chart_index_at but throws OutOfDomain when p is outside the carrier.
  const Chart& chart_at(Point p) const;
  /// Chart by id; throws ContractViolation for an unknown id.
  const Chart& chart(const std::string& id) const;

  /// Union of the chart-domain samples, in chart order, without duplicates.
  const std::vector<Vector>& carrier_samples() const { return impl_->carrier; }
  /// The carrier as a Region (membership in any domain).
  Region carrier_region() const;

  bool same_as(const Manifold& other) const { return impl_ == other.impl_; }

  /// Every chart pair's compatibility report, in declaration order.
  std::vector<std::pair<std::string, SmoothnessReport>> compatibility_reports() const;

 private:
  struct Impl {
    std::vector<Chart> charts;
    ProbeOptions options;
    std::vector<Vector> carrier;
  };
  explicit Manifold(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

inline Manifold manifold_new(std::vector<Chart> charts, const ProbeOptions& options = {}) {
  return Manifold::create(std::move(charts), options);
}

/// Restricts every chart to domain & U and drops charts left without samples.
/// Throws EmptySubmanifold when nothing remains.
Manifold charts_submanifold(const Manifold& m, const Region& u);

/// Product manifold with one chart per chart pair, ids "a*b".
Manifold prod_charts(const Manifold& m1, const Manifold& m2);

}  // namespace liekit
