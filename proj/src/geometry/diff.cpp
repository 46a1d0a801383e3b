#include "liekit/geometry/diff.hpp"

#include <cmath>

namespace liekit {

double DiffReport::max_residual() const {
  double worst = 0.0;
  for (const auto& r : records)
    if (!(r.report.max_fd_residual <= worst)) worst = r.report.max_fd_residual;
  return worst;
}

std::size_t DiffReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : records) n += r.found ? 0 : 1;
  return n;
}

namespace {

constexpr double kInf = INFINITY;

// One probe of c2 o F o c1^-1 at c1(x). The probed region is the part of
// c1's codomain that F sends into domain c2, so a sample is only accepted when
// F maps its whole stencil neighbourhood into c2.
std::optional<SmoothnessReport> probe_pair(const Chart& c1, const Chart& c2, const RealMap& f, Point x,
                                           const ProbeOptions& options) {
  auto cod1 = c1.codomain().predicate();
  auto inv1 = c1.inv();
  auto dom2 = c2.domain().predicate();
  Region::Predicate member = guarded([cod1, inv1, dom2, f](Point u) { return cod1(u) && dom2(f(inv1(u))); });
  const Vector u = c1(x);
  Region local = Region::from_predicate(c1.dim(), std::move(member), std::span<const Vector>(&u, 1), {},
                                        c1.id() + "->" + c2.id());
  if (local.degenerate()) return std::nullopt;
  ProbeOptions one = options;
  one.n_samples = 1;
  return smooth_on_probe(local, map_compose(c2.fwd(), map_compose(f, c1.inv())), one);
}

}  // namespace

DiffReport diff_check(const Manifold& src, const Manifold& dst, const RealMap& f, const ProbeOptions& options) {
  require(f.in_dim() == src.ambient_dim() && f.out_dim() == dst.ambient_dim(),
          "diff_check: map dimensions do not match the manifolds");
  DiffReport out;
  for (const auto& x : src.carrier_samples()) {
    DiffWitness w;
    w.sample = x;
    Vector y;
    try {
      y = f(x);
    } catch (const Error&) {
    }
    bool attempted = false;
    if (!y.empty()) {
      for (const auto& c1 : src.charts()) {
        if (!c1.domain().contains(x)) continue;
        for (const auto& c2 : dst.charts()) {
          if (!c2.domain().contains(y)) continue;
          auto r = probe_pair(c1, c2, f, x, options);
          if (!r) continue;
          if (!attempted || r->passed) {
            w.src_chart = c1.id();
            w.dst_chart = c2.id();
            w.report = *r;
            attempted = true;
          }
          if (r->passed) {
            w.found = true;
            break;
          }
        }
        if (w.found) break;
      }
    }
    if (!attempted) {
      w.report.order_probed = options.order;
      w.report.seed = options.seed;
      w.report.samples_checked = 1;
      w.report.max_fd_residual = kInf;
      w.report.failures.push_back({x, 0, kInf});
      w.report.passed = false;
    }
    out.passed = out.passed && w.found;
    out.records.push_back(std::move(w));
  }
  return out;
}

DiffeomorphismReport diffeomorphism_check(const Manifold& m1, const Manifold& m2, const RealMap& f,
                                          const RealMap& f_inv, const ProbeOptions& options) {
  DiffeomorphismReport out;
  out.forward = diff_check(m1, m2, f, options);
  out.backward = diff_check(m2, m1, f_inv, options);
  auto round_trip = [&](const Manifold& m, const RealMap& there, const RealMap& back) {
    for (const auto& x : m.carrier_samples()) {
      double err = kInf;
      try {
        err = max_abs_diff(back(there(x)), x);
      } catch (const Error&) {
      }
      if (!(err <= out.inverse_residual)) out.inverse_residual = err;
    }
  };
  round_trip(m1, f, f_inv);
  round_trip(m2, f_inv, f);
  out.passed = out.forward.passed && out.backward.passed && out.inverse_residual <= kInverseTol;
  return out;
}

}  // namespace liekit
