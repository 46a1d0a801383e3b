#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "liekit/calculus/real_map.hpp"
#include "liekit/geometry/region.hpp"

namespace liekit {

/// Central difference (f(p + h d) - f(p - h d)) / 2h, per output coordinate.
Vector fd_derivative(const RealMap& f, Point p, Point direction, double h);
/// Central second difference for d_i d_j f, per output coordinate.
Vector fd_second_derivative(const RealMap& f, Point p, std::size_t i, std::size_t j, double h);

inline constexpr double kDefaultProbeTol = 1e-5;
inline constexpr std::size_t kDefaultProbeOrder = 3;

struct ProbeFailure {
  Vector point;
  std::size_t order;  // derivative rank that failed
  double residual;    // +inf for non-finite jets
};

struct SmoothnessReport {
  std::size_t order_probed = 0;
  std::size_t samples_checked = 0;
  double max_fd_residual = 0.0;
  bool passed = true;
  std::vector<ProbeFailure> failures;
  std::uint64_t seed = 0;

  /// Folds another report in (sample counts add, residual maxima combine).
  void merge(const SmoothnessReport& other);
};

struct ProbeOptions {
  std::size_t order = kDefaultProbeOrder;
  std::size_t n_samples = 64;
  double tol = kDefaultProbeTol;
  std::uint64_t seed = 0;
};

/// Finite-order smoothness surrogate on a region. At each probed sample the
/// jet up to `order` must be finite, and its first- and second-order entries
/// must match central differences within tol * (1 + max(|f(p)|, |entry|)).
/// Throws DegenerateRegion when no sample can be probed.
SmoothnessReport smooth_on_probe(const Region& region, const RealMap& f, const ProbeOptions& options);
SmoothnessReport smooth_on_probe(const Region& region, const RealMap& f, std::size_t order, std::size_t n_samples,
                                 double tol, std::uint64_t seed = 0);

std::string describe(const SmoothnessReport& report);

}  // namespace liekit
