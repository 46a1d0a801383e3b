#include "liekit/groups/diff_group.hpp"

#include <cmath>

namespace liekit {

DiffElement diff_element(const Manifold& m, const RealMap& f, const RealMap& f_inv, std::string name) {
  const Region carrier = m.carrier_region();
  return {PartialMap(f, carrier), PartialMap(f_inv, carrier), name.empty() ? f.name() : std::move(name)};
}

double pmap_distance(const Manifold& m, const PartialMap& f, const PartialMap& g) {
  double worst = 0.0;
  for (const auto& x : m.carrier_samples()) {
    const auto a = f.apply(x);
    const auto b = g.apply(x);
    if (!a && !b) continue;
    const double d = (a && b) ? max_abs_diff(*a, *b) : INFINITY;
    if (!(d <= worst)) worst = d;
  }
  return worst;
}

GroupOn<DiffElement> diff_group(const Manifold& m, const ProbeOptions& options) {
  const Region carrier = m.carrier_region();
  return GroupOn<DiffElement>{
      [m, options](const DiffElement& e) { return automorphism_check(m, e.map, e.inverse, options).passed; },
      [](const DiffElement& a, const DiffElement& b) {
        return DiffElement{pmap_compose(a.map, b.map), pmap_compose(b.inverse, a.inverse), a.name + "o" + b.name};
      },
      DiffElement{pmap_id_on(carrier), pmap_id_on(carrier), "id"},
      [](const DiffElement& a) { return DiffElement{a.inverse, a.map, a.name + "^-1"}; },
      [m](const DiffElement& a, const DiffElement& b) { return pmap_distance(m, a.map, b.map); }};
}

}  // namespace liekit
