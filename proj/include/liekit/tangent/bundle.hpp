#pragma once

#include <utility>

#include "liekit/tangent/tangent.hpp"

namespace liekit {

/// Coordinates of a tangent-bundle point in a bundle chart: (c(p), comps).
struct TMCoords {
  Vector x;
  Vector u;
};

/// (p, v) -> (c(p), component_function(v, c)). Throws OutOfDomain when the
/// base is outside domain c.
TMCoords apply_chart_TM(const Chart& c, const TangentVector& v);
/// (x, u) -> (c^-1(x), sum_i u_i coordinate_vector(c, c^-1(x), e_i)).
/// Throws OutOfDomain when x is outside codomain c.
TangentVector inv_chart_TM(const Chart& c, Point x, Point u);

bool domain_TM(const Chart& c, const TangentVector& v);
bool codomain_TM(const Chart& c, Point x, Point u);

/// The bundle transition (x, u) -> (g(x), Dg(x) u) with g = c2 o c1^-1, as a
/// jet-evaluable map on R^(2e).
RealMap tm_transition(const Chart& c1, const Chart& c2);

/// Probes tm_transition on (x, u) samples: x runs over c1-images of the
/// overlap samples, u over seeded directions. Vacuous on an empty overlap.
SmoothnessReport atlas_TM_check(const Chart& c1, const Chart& c2, const ProbeOptions& options = {},
                                std::size_t directions_per_point = 2);

}  // namespace liekit
