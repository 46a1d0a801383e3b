#include "liekit/field/derivation.hpp"

#include <cmath>

namespace liekit {

Derivation derivation_of(const VectorField& x) {
  return {[x](const RealMap& f) { return vf_sharp(x, f); }, x.name() + "#"};
}

namespace {

double scaled_gap(double lhs, double rhs) {
  const double r = std::abs(lhs - rhs) / (1.0 + std::abs(rhs));
  return std::isfinite(r) ? r : INFINITY;
}

}  // namespace

DerivationReport is_derivation_check(const Derivation& d, const Manifold& m, const std::vector<RealMap>& fs,
                                     const std::vector<RealMap>& gs, const ProbeOptions& options, double tol) {
  require(!fs.empty() && !gs.empty(), "is_derivation_check: batteries must be non-empty");
  DerivationReport out;
  out.smoothness.order_probed = options.order;
  out.smoothness.seed = options.seed;
  const auto& samples = m.carrier_samples();
  auto note = [&](const std::string& what) {
    if (out.counterexample.empty()) out.counterexample = what;
  };

  for (const auto& f : fs)
    for (const auto& g : gs) {
      const RealMap df = d(f);
      const RealMap dg = d(g);
      const RealMap dsum = d(map_add(f, g));
      const RealMap dscaled = d(map_scale(-0.75, f));
      const RealMap dprod = d(map_mul(f, g));
      for (const auto& p : samples) {
        const double a = df.scalar(p);
        const double b = dg.scalar(p);
        const double lin = std::max(scaled_gap(dsum.scalar(p), a + b), scaled_gap(dscaled.scalar(p), -0.75 * a));
        if (!(lin <= out.linearity_residual)) out.linearity_residual = lin;
        if (!(lin <= tol)) note("linearity fails for " + f.name() + ", " + g.name() + " at " + format_point(p));
        const double lei = scaled_gap(dprod.scalar(p), f.scalar(p) * b + g.scalar(p) * a);
        if (!(lei <= out.leibniz_residual)) out.leibniz_residual = lei;
        if (!(lei <= tol)) note("Leibniz fails for " + f.name() + ", " + g.name() + " at " + format_point(p));
      }
    }
  const Region carrier = m.carrier_region();
  for (const auto& f : fs) out.smoothness.merge(smooth_on_probe(carrier, d(f), options));
  if (!out.smoothness.passed) note("D f is not smooth: " + describe(out.smoothness));

  out.linear = out.linearity_residual <= tol;
  out.leibniz = out.leibniz_residual <= tol;
  out.passed = out.linear && out.leibniz && out.smoothness.passed;
  return out;
}

VectorField vf_of_derivation(const Derivation& d, const Manifold& m) {
  std::vector<RealMap> comps;
  for (const auto& c : m.charts()) {
    RealMap acc = map_compose(d(map_component(c.fwd(), 0)), c.inv());
    for (std::size_t i = 1; i < c.dim(); ++i)
      acc = map_concat(acc, map_compose(d(map_component(c.fwd(), i)), c.inv()));
    comps.push_back(acc);
  }
  return VectorField(m, std::move(comps), "field(" + d.name + ")");
}

}  // namespace liekit
