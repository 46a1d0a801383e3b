#pragma once

#include <memory>
#include <string>

#include "liekit/calculus/real_map.hpp"
#include "liekit/calculus/smoothness.hpp"
#include "liekit/geometry/region.hpp"

namespace liekit {

/// Round-trip tolerance enforced when a chart is built.
inline constexpr double kChartRoundTripTol = 1e-8;

/// A local homeomorphism from an open region of the ambient space R^a onto an
/// open region of R^e, given by a forward map and its inverse.
class Chart {
 public:
  /// Validates the round trips on both sample sets and that domain samples
  /// land in the codomain. Throws ContractViolation otherwise.
  Chart(std::string id, Region domain, Region codomain, RealMap fwd, RealMap inv);

  /// Identity chart on an ambient region.
  static Chart identity(Region domain, std::string id = "id");

  const std::string& id() const { return impl_->id; }
  const Region& domain() const { return impl_->domain; }
  const Region& codomain() const { return impl_->codomain; }
  const RealMap& fwd() const { return impl_->fwd; }
  const RealMap& inv() const { return impl_->inv; }
  std::size_t ambient_dim() const { return impl_->domain.dim(); }
  std::size_t dim() const { return impl_->codomain.dim(); }

  Vector operator()(Point x) const { return impl_->fwd(x); }
  Vector inverse(Point u) const { return impl_->inv(u); }

  /// Same chart on domain & U. The codomain shrinks to the image, and its
  /// samples are the images of the surviving domain samples. Keeps the id.
  Chart restrict(const Region& u) const;

  /// True when both handles refer to the same constructed chart.
  bool same_as(const Chart& other) const { return impl_ == other.impl_; }

 private:
  struct Impl {
    std::string id;
    Region domain;
    Region codomain;
    RealMap fwd;
    RealMap inv;
  };
  Chart(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Problems with a chart's invariants at its samples (empty when valid).
std::vector<std::string> validate_chart(const Region& domain, const Region& codomain, const RealMap& fwd,
                                        const RealMap& inv);

/// Probes c2 o c1^-1 on c1(domain c1 & domain c2) and c1 o c2^-1 on the mirror
/// image, merging both reports. Disjoint domains pass without probing.
SmoothnessReport smooth_compat(const Chart& c1, const Chart& c2, const ProbeOptions& options = {});

/// Predicate wrapper treating evaluation failures as non-membership.
Region::Predicate guarded(Region::Predicate pred);

}  // namespace liekit
