#include "liekit/groups/partial_map.hpp"

#include <algorithm>

namespace liekit {

PartialMap::PartialMap(RealMap fn, Region dom) : fn_(std::move(fn)), dom_(std::move(dom)) {
  require(fn_.in_dim() == dom_.dim(), "PartialMap: domain dimension does not match the map");
}

std::optional<Vector> PartialMap::apply(Point x) const {
  if (!dom_.contains(x)) return std::nullopt;
  return fn_(x);
}

Vector the(const std::optional<Vector>& value) {
  if (!value) throw ContractViolation("the: value is absent (point outside the domain)");
  return *value;
}

PartialMap pmap_compose(const PartialMap& g, const PartialMap& f) {
  require(f.fn().out_dim() == g.dom().dim(), "pmap_compose: dimensions do not chain");
  auto fdom = f.dom().predicate();
  auto gdom = g.dom().predicate();
  auto ffn = f.fn();
  Region::Predicate both = guarded([fdom, gdom, ffn](Point x) { return fdom(x) && gdom(ffn(x)); });
  std::vector<Vector> candidates;
  for (const auto& s : f.dom().samples()) candidates.push_back(s.point);
  Region dom = Region::from_predicate(f.dom().dim(), std::move(both), candidates, f.dom().bounds(),
                                      g.dom().name() + "o" + f.dom().name());
  return PartialMap(map_compose(g.fn(), f.fn()), std::move(dom));
}

PartialMap pmap_id_on(const Region& u) { return PartialMap(map_identity(u.dim()), u); }

AutomorphismReport automorphism_check(const Manifold& m, const PartialMap& f, const PartialMap& f_inv,
                                      const ProbeOptions& options) {
  require(f.fn().in_dim() == m.ambient_dim() && f.fn().out_dim() == m.ambient_dim() &&
              f_inv.fn().in_dim() == m.ambient_dim() && f_inv.fn().out_dim() == m.ambient_dim(),
          "automorphism_check: maps must be self-maps of the ambient space");
  AutomorphismReport out;
  auto mismatch = [&](const Vector& x) {
    if (std::find(out.domain_mismatches.begin(), out.domain_mismatches.end(), x) == out.domain_mismatches.end())
      out.domain_mismatches.push_back(x);
  };
  for (const PartialMap* p : {&f, &f_inv}) {
    for (const auto& x : m.carrier_samples())
      if (!p->dom().contains(x)) mismatch(x);
    for (const auto& s : p->dom().samples())
      if (!m.contains(s.point)) mismatch(s.point);
  }
  out.domain_matches = out.domain_mismatches.empty();
  out.diffeo = diffeomorphism_check(m, m, f.fn(), f_inv.fn(), options);
  out.passed = out.domain_matches && out.diffeo.passed;
  return out;
}

}  // namespace liekit
