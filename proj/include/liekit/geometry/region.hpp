#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liekit/common.hpp"

namespace liekit {

/// Central-difference step for first derivatives.
inline constexpr double kFdStep1 = 1e-5;
/// Central-difference step for second derivatives.
inline constexpr double kFdStep2 = 1e-4;
/// Minimum clearance a sample needs before it may be probed: every stencil
/// point lies within this distance of the sample.
inline constexpr double kStencilReach = 2e-4;

/// Every point the finite-difference probe visits around p (p itself excluded).
std::vector<Vector> probe_stencil(Point p);

struct RegionSample {
  Vector point;
  double clearance;  // radius around point known to stay inside the region
};

struct Box {
  Vector lo;
  Vector hi;
  bool contains(Point p) const;  // open box
};

/// An open subset of an ambient Euclidean space, described by a membership
/// predicate and a finite list of interior samples with clearance radii.
/// Every "for all x in the open set" statement is checked at the samples.
class Region {
 public:
  using Predicate = std::function<bool(Point)>;

  Region(std::size_t dim, Predicate contains, std::vector<RegionSample> samples, std::optional<Box> bounds = {},
         std::string name = {});

  /// Open axis-aligned box; samples are the center plus seeded interior points.
  static Region box(Vector lo, Vector hi, std::size_t n_samples, std::uint64_t seed = 0, std::string name = {});
  static Region ball(Vector center, double radius, std::size_t n_samples, std::uint64_t seed = 0,
                     std::string name = {});
  /// Region given by a predicate. Candidates that are members and admit at
  /// least the probe stencil become samples; clearance is the largest radius in
  /// {1e-1, 1e-2, 1e-3, kStencilReach} whose test stencil stays inside.
  static Region from_predicate(std::size_t dim, Predicate contains, std::span<const Vector> candidates,
                               std::optional<Box> bounds = {}, std::string name = {});

  std::size_t dim() const { return impl_->dim; }
  bool contains(Point p) const;
  const std::vector<RegionSample>& samples() const { return impl_->samples; }
  const std::optional<Box>& bounds() const { return impl_->bounds; }
  const std::string& name() const { return impl_->name; }
  const Predicate& predicate() const { return impl_->contains; }
  /// No samples: nothing about this region can be probed.
  bool degenerate() const { return impl_->samples.empty(); }

  bool admits_stencil(Point p) const;
  /// Conjunction of both predicates; samples of either region that lie in both.
  Region intersect(const Region& other, std::string name = {}) const;
  /// Same predicate, samples replaced (re-validated against the stencil).
  Region with_samples(std::span<const Vector> candidates) const;

  /// Invariant violations (empty when the region is well formed).
  std::vector<std::string> validate() const;

 private:
  struct Impl {
    std::size_t dim;
    Predicate contains;
    std::vector<RegionSample> samples;
    std::optional<Box> bounds;
    std::string name;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Cartesian product a x b in R^(da + db). Samples are all pairs when there
/// are at most `max_pairs` of them, otherwise a deterministic diagonal subset
/// that still uses every sample of both factors.
Region product_region(const Region& a, const Region& b, std::size_t max_pairs = 256);

/// Largest radius from the fixed ladder whose test stencil around p stays in
/// `contains`; 0 when even the probe stencil leaves it.
double estimate_clearance(const Region::Predicate& contains, Point p, double cap = 1e-1);

}  // namespace liekit
