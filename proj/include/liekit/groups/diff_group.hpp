#pragma once

#include <string>
#include <vector>

#include "liekit/groups/group.hpp"
#include "liekit/groups/partial_map.hpp"

namespace liekit {

/// An element of Diff(M): a partial self-map on the carrier together with
/// its inverse.
struct DiffElement {
  PartialMap map;
  PartialMap inverse;
  std::string name;
};

/// Both maps of a total bijection restricted to the carrier.
DiffElement diff_element(const Manifold& m, const RealMap& f, const RealMap& f_inv, std::string name = {});

/// Diff(M) as a GroupOn. Membership is automorphism_check; the operation is
/// domain-respecting composition; the unit is the identity on the carrier.
/// Distances are the largest disagreement at carrier samples, infinite when
/// one side is absent and the other present.
GroupOn<DiffElement> diff_group(const Manifold& m, const ProbeOptions& options = {});

/// Largest |f(x) - g(x)| over carrier samples (absent on both sides counts as
/// equal; absent on one side as infinitely far).
double pmap_distance(const Manifold& m, const PartialMap& f, const PartialMap& g);

}  // namespace liekit
