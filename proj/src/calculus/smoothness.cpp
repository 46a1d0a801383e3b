#include "liekit/calculus/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace liekit {

Vector fd_derivative(const RealMap& f, Point p, Point direction, double h) {
  require(p.size() == f.in_dim() && direction.size() == f.in_dim(), "fd_derivative: dimension mismatch");
  require(h > 0.0, "fd_derivative: step must be positive");
  Vector plus(p.begin(), p.end());
  Vector minus(p.begin(), p.end());
  for (std::size_t i = 0; i < p.size(); ++i) {
    plus[i] += h * direction[i];
    minus[i] -= h * direction[i];
  }
  const Vector fp = f(plus);
  const Vector fm = f(minus);
  Vector out(fp.size());
  for (std::size_t k = 0; k < fp.size(); ++k) out[k] = (fp[k] - fm[k]) / (2.0 * h);
  return out;
}

Vector fd_second_derivative(const RealMap& f, Point p, std::size_t i, std::size_t j, double h) {
  require(p.size() == f.in_dim() && i < p.size() && j < p.size(), "fd_second_derivative: dimension mismatch");
  Vector q(p.begin(), p.end());
  auto at = [&](double si, double sj) {
    q[i] += si * h;
    q[j] += sj * h;
    Vector v = f(q);
    q[i] = p[i];
    q[j] = p[j];
    return v;
  };
  if (i == j) {
    const Vector fp = at(1.0, 0.0);
    const Vector fm = at(-1.0, 0.0);
    const Vector f0 = f(p);
    Vector out(f0.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = (fp[k] - 2.0 * f0[k] + fm[k]) / (h * h);
    return out;
  }
  const Vector pp = at(1.0, 1.0);
  const Vector pm = at(1.0, -1.0);
  const Vector mp = at(-1.0, 1.0);
  const Vector mm = at(-1.0, -1.0);
  Vector out(pp.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = (pp[k] - pm[k] - mp[k] + mm[k]) / (4.0 * h * h);
  return out;
}

void SmoothnessReport::merge(const SmoothnessReport& other) {
  order_probed = std::max(order_probed, other.order_probed);
  samples_checked += other.samples_checked;
  if (std::isnan(other.max_fd_residual) || other.max_fd_residual > max_fd_residual)
    max_fd_residual = other.max_fd_residual;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  passed = failures.empty();
}

namespace {

std::vector<std::size_t> choose_samples(const Region& region, std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < region.samples().size(); ++i)
    if (region.samples()[i].clearance >= kStencilReach) eligible.push_back(i);
  if (eligible.size() <= n) return eligible;
  // Partial Fisher-Yates, then restore index order for deterministic reports.
  Rng rng(seed);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t pick = k + rng.index(eligible.size() - k);
    std::swap(eligible[k], eligible[pick]);
  }
  eligible.resize(n);
  std::sort(eligible.begin(), eligible.end());
  return eligible;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

SmoothnessReport smooth_on_probe(const Region& region, const RealMap& f, const ProbeOptions& options) {
  require(region.dim() == f.in_dim(), "smooth_on_probe: region dimension does not match the map");
  require(options.tol > 0.0, "smooth_on_probe: tolerance must be positive");
  SmoothnessReport report;
  report.order_probed = options.order;
  report.seed = options.seed;

  const auto picks = choose_samples(region, options.n_samples, options.seed);
  if (picks.empty() || options.n_samples == 0)
    throw DegenerateRegion("smooth_on_probe: region '" + region.name() + "' has no probe-able samples");

  const std::size_t n = f.in_dim();
  const std::size_t fd_order = std::min<std::size_t>(options.order, 2);
  for (std::size_t idx : picks) {
    const Vector& p = region.samples()[idx].point;
    ++report.samples_checked;
    double worst = 0.0;
    std::size_t worst_order = 0;

    std::vector<Jet> jets;
    bool evaluable = true;
    try {
      jets = f.lift(seed_variables(p, options.order));
    } catch (const EvaluationError&) {
      evaluable = false;
    } catch (const OutOfDomain&) {
      evaluable = false;
    }
    if (evaluable) {
      std::size_t bad_rank = std::numeric_limits<std::size_t>::max();
      for (const auto& j : jets) bad_rank = std::min(bad_rank, j.first_nonfinite_rank());
      if (bad_rank != std::numeric_limits<std::size_t>::max()) {
        evaluable = false;
        worst_order = bad_rank;
      }
    }
    if (!evaluable) {
      report.failures.push_back({p, worst_order, kInf});
      report.max_fd_residual = kInf;
      continue;
    }

    auto scaled = [&](double jet_entry, double fd, double value) {
      const double r = std::abs(jet_entry - fd) / (1.0 + std::max(std::abs(value), std::abs(jet_entry)));
      return std::isfinite(r) ? r : kInf;
    };

    try {
    if (fd_order >= 1) {
      Vector dir(n, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        dir[i] = 1.0;
        const Vector fd = fd_derivative(f, p, dir, kFdStep1);
        dir[i] = 0.0;
        for (std::size_t k = 0; k < jets.size(); ++k) {
          const std::size_t ii[1] = {i};
          const double r = scaled(jets[k].derivative(ii), fd[k], jets[k].value());
          if (!(r <= worst)) {
            worst = r;
            worst_order = 1;
          }
        }
      }
    }
    if (fd_order >= 2) {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          const Vector fd = fd_second_derivative(f, p, i, j, kFdStep2);
          for (std::size_t k = 0; k < jets.size(); ++k) {
            const std::size_t ij[2] = {i, j};
            const double r = scaled(jets[k].derivative(ij), fd[k], jets[k].value());
            if (!(r <= worst)) {
              worst = r;
              worst_order = 2;
            }
          }
        }
    }
    } catch (const EvaluationError&) {
      worst = kInf;
    } catch (const OutOfDomain&) {
      worst = kInf;
    }
    if (!(worst <= report.max_fd_residual)) report.max_fd_residual = worst;
    if (!(worst <= options.tol)) report.failures.push_back({p, worst_order, worst});
  }
  report.passed = report.failures.empty();
  return report;
}

SmoothnessReport smooth_on_probe(const Region& region, const RealMap& f, std::size_t order, std::size_t n_samples,
                                 double tol, std::uint64_t seed) {
  return smooth_on_probe(region, f, ProbeOptions{order, n_samples, tol, seed});
}

std::string describe(const SmoothnessReport& report) {
  std::ostringstream out;
  out << (report.passed ? "passed" : "FAILED") << " order=" << report.order_probed
      << " samples=" << report.samples_checked << " max_residual=" << report.max_fd_residual;
  const std::size_t shown = std::min<std::size_t>(report.failures.size(), 3);
  for (std::size_t i = 0; i < shown; ++i)
    out << "\n  at " << format_point(report.failures[i].point) << " rank " << report.failures[i].order
        << " residual " << report.failures[i].residual;
  if (report.failures.size() > shown) out << "\n  ... " << report.failures.size() - shown << " more";
  return out.str();
}

}  // namespace liekit
