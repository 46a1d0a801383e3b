#pragma once

#include <optional>

#include "liekit/geometry/diff.hpp"

namespace liekit {

/// A map that is only defined on `dom`. Applying it elsewhere yields an
/// absent value rather than a number.
class PartialMap {
 public:
  PartialMap(RealMap fn, Region dom);

  const RealMap& fn() const { return fn_; }
  const Region& dom() const { return dom_; }
  /// True when the domain kept no samples (e.g. after a composition whose
  /// inner map leaves the outer domain); nothing about it can be checked.
  bool empty_domain() const { return dom_.degenerate(); }

  std::optional<Vector> apply(Point x) const;

 private:
  RealMap fn_;
  Region dom_;
};

inline std::optional<Vector> pmap_apply(const PartialMap& f, Point x) { return f.apply(x); }

/// Unwraps a present value; throws ContractViolation on an absent one.
Vector the(const std::optional<Vector>& value);

/// g o f on {x in dom f : f(x) in dom g}, with the samples of dom f that
/// survive the filter.
PartialMap pmap_compose(const PartialMap& g, const PartialMap& f);
/// The identity with domain U.
PartialMap pmap_id_on(const Region& u);

struct AutomorphismReport {
  bool domain_matches = false;  // dom f and dom f_inv agree with the carrier at samples
  std::vector<Vector> domain_mismatches;
  DiffeomorphismReport diffeo;
  bool passed = false;
};

/// Domain equality with the carrier at carrier and domain samples (for f and
/// f_inv), plus diffeomorphism_check of the underlying total maps.
AutomorphismReport automorphism_check(const Manifold& m, const PartialMap& f, const PartialMap& f_inv,
                                      const ProbeOptions& options = {});

}  // namespace liekit
