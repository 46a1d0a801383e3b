#include "liekit/geometry/region.hpp"

#include <algorithm>
#include <cmath>

namespace liekit {

using Predicate = Region::Predicate;

std::vector<Vector> probe_stencil(Point p) {
  const std::size_t n = p.size();
  std::vector<Vector> pts;
  Vector q(p.begin(), p.end());
  for (double h : {kFdStep1, kFdStep2}) {
    for (std::size_t i = 0; i < n; ++i)
      for (double s : {1.0, -1.0}) {
        q[i] = p[i] + s * h;
        pts.push_back(q);
        q[i] = p[i];
      }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (double si : {1.0, -1.0})
        for (double sj : {1.0, -1.0}) {
          q[i] = p[i] + si * kFdStep2;
          q[j] = p[j] + sj * kFdStep2;
          pts.push_back(q);
          q[i] = p[i];
          q[j] = p[j];
        }
  return pts;
}

bool Box::contains(Point p) const {
  if (p.size() != lo.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!(p[i] > lo[i] && p[i] < hi[i])) return false;
  return true;
}

namespace {

// Points at distance r around p along axes and axis-plane diagonals.
bool ring_inside(const Region::Predicate& contains, Point p, double r) {
  const std::size_t n = p.size();
  Vector q(p.begin(), p.end());
  for (std::size_t i = 0; i < n; ++i)
    for (double s : {1.0, -1.0}) {
      q[i] = p[i] + s * r;
      if (!contains(q)) return false;
      q[i] = p[i];
    }
  const double d = r / std::sqrt(2.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (double si : {1.0, -1.0})
        for (double sj : {1.0, -1.0}) {
          q[i] = p[i] + si * d;
          q[j] = p[j] + sj * d;
          const bool ok = contains(q);
          q[i] = p[i];
          q[j] = p[j];
          if (!ok) return false;
        }
  return true;
}

bool stencil_inside(const Region::Predicate& contains, Point p) {
  for (const auto& q : probe_stencil(p))
    if (!contains(q)) return false;
  return true;
}

}  // namespace

double estimate_clearance(const Region::Predicate& contains, Point p, double cap) {
  if (!contains(p) || !stencil_inside(contains, p)) return 0.0;
  for (double r : {1e-1, 1e-2, 1e-3})
    if (r <= cap && ring_inside(contains, p, r)) return r;
  return std::min(cap, kStencilReach);
}

Region::Region(std::size_t dim, Predicate contains, std::vector<RegionSample> samples, std::optional<Box> bounds,
               std::string name)
    : impl_(std::make_shared<const Impl>(
          Impl{dim, std::move(contains), std::move(samples), std::move(bounds), std::move(name)})) {
  require(dim > 0, "Region: dimension must be positive");
  for (const auto& s : impl_->samples) {
    require(s.point.size() == dim, "Region: sample has wrong dimension");
    require(s.clearance > 0.0, "Region: sample clearance must be positive");
  }
}

Region Region::box(Vector lo, Vector hi, std::size_t n_samples, std::uint64_t seed, std::string name) {
  require(lo.size() == hi.size() && !lo.empty(), "Region::box: bound size mismatch");
  for (std::size_t i = 0; i < lo.size(); ++i) require(hi[i] - lo[i] > 1e-2, "Region::box: box too thin");
  Box bounds{lo, hi};
  auto clearance = [&](Point p) {
    double c = INFINITY;
    for (std::size_t i = 0; i < p.size(); ++i) c = std::min({c, p[i] - lo[i], hi[i] - p[i]});
    return c;
  };
  std::vector<RegionSample> samples;
  Vector center(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) center[i] = 0.5 * (lo[i] + hi[i]);
  samples.push_back({center, clearance(center)});
  Rng rng(seed);
  for (std::size_t k = 1; k < n_samples; ++k) {
    Vector p(lo.size());
    for (std::size_t i = 0; i < lo.size(); ++i) {
      const double margin = 0.02 * (hi[i] - lo[i]);
      p[i] = rng.uniform(lo[i] + margin, hi[i] - margin);
    }
    const double c = clearance(p);
    samples.push_back({std::move(p), c});
  }
  Predicate pred = [bounds](Point p) { return bounds.contains(p); };
  return Region(lo.size(), std::move(pred), std::move(samples), bounds, std::move(name));
}

Region Region::ball(Vector center, double radius, std::size_t n_samples, std::uint64_t seed, std::string name) {
  require(radius > 1e-2, "Region::ball: radius too small");
  const std::size_t n = center.size();
  auto dist = [center](Point p) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) s += (p[i] - center[i]) * (p[i] - center[i]);
    return std::sqrt(s);
  };
  std::vector<RegionSample> samples;
  samples.push_back({center, radius});
  Rng rng(seed);
  while (samples.size() < n_samples) {
    Vector p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = center[i] + rng.uniform(-radius, radius);
    const double r = dist(p);
    if (r >= 0.95 * radius) continue;
    samples.push_back({std::move(p), radius - r});
  }
  Box bounds{center, center};
  for (std::size_t i = 0; i < n; ++i) {
    bounds.lo[i] -= radius;
    bounds.hi[i] += radius;
  }
  Predicate pred = [dist, radius](Point p) { return dist(p) < radius; };
  return Region(n, std::move(pred), std::move(samples), bounds, std::move(name));
}

Region Region::from_predicate(std::size_t dim, Predicate contains, std::span<const Vector> candidates,
                              std::optional<Box> bounds, std::string name) {
  std::vector<RegionSample> samples;
  for (const auto& c : candidates) {
    require(c.size() == dim, "Region::from_predicate: candidate has wrong dimension");
    const double r = estimate_clearance(contains, c);
    if (r > 0.0) samples.push_back({c, r});
  }
  return Region(dim, std::move(contains), std::move(samples), std::move(bounds), std::move(name));
}

bool Region::contains(Point p) const { return p.size() == impl_->dim && impl_->contains(p); }

bool Region::admits_stencil(Point p) const { return contains(p) && stencil_inside(impl_->contains, p); }

Region Region::intersect(const Region& other, std::string name) const {
  require(dim() == other.dim(), "Region::intersect: dimension mismatch");
  auto a = impl_->contains;
  auto b = other.impl_->contains;
  Predicate both = [a, b](Point p) { return a(p) && b(p); };
  std::vector<RegionSample> samples;
  auto consider = [&](const RegionSample& s) {
    for (const auto& t : samples)
      if (t.point == s.point) return;
    const double r = estimate_clearance(both, s.point, s.clearance);
    if (r > 0.0) samples.push_back({s.point, r});
  };
  for (const auto& s : impl_->samples) consider(s);
  for (const auto& s : other.impl_->samples) consider(s);
  std::optional<Box> bounds = impl_->bounds ? impl_->bounds : other.impl_->bounds;
  if (impl_->bounds && other.impl_->bounds) {
    bounds = impl_->bounds;
    for (std::size_t i = 0; i < dim(); ++i) {
      bounds->lo[i] = std::max(bounds->lo[i], other.impl_->bounds->lo[i]);
      bounds->hi[i] = std::min(bounds->hi[i], other.impl_->bounds->hi[i]);
    }
  }
  if (name.empty()) name = impl_->name + "&" + other.impl_->name;
  return Region(dim(), std::move(both), std::move(samples), std::move(bounds), std::move(name));
}

Region Region::with_samples(std::span<const Vector> candidates) const {
  return from_predicate(dim(), impl_->contains, candidates, impl_->bounds, impl_->name);
}

std::vector<std::string> Region::validate() const {
  std::vector<std::string> problems;
  for (const auto& s : impl_->samples) {
    if (!impl_->contains(s.point)) {
      problems.push_back("sample " + format_point(s.point) + " is not a member");
      continue;
    }
    if (s.clearance >= kStencilReach && !stencil_inside(impl_->contains, s.point))
      problems.push_back("probe stencil around " + format_point(s.point) + " leaves the region");
    if (!ring_inside(impl_->contains, s.point, 0.999 * s.clearance))
      problems.push_back("clearance ball around " + format_point(s.point) + " leaves the region");
  }
  return problems;
}

Region product_region(const Region& a, const Region& b, std::size_t max_pairs) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  auto pa = a.predicate();
  auto pb = b.predicate();
  Predicate both = [pa, pb, da, db](Point p) { return pa(p.subspan(0, da)) && pb(p.subspan(da, db)); };

  const auto& sa = a.samples();
  const auto& sb = b.samples();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (sa.size() * sb.size() <= max_pairs) {
    for (std::size_t i = 0; i < sa.size(); ++i)
      for (std::size_t j = 0; j < sb.size(); ++j) pairs.emplace_back(i, j);
  } else if (!sa.empty() && !sb.empty()) {
    const std::size_t m = std::max(sa.size(), sb.size());
    for (std::size_t k = 0; k < m; ++k) pairs.emplace_back(k % sa.size(), k % sb.size());
    for (std::size_t k = 0; k < m; ++k) pairs.emplace_back(k % sa.size(), (k + sb.size() / 2 + 1) % sb.size());
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  }
  std::vector<RegionSample> samples;
  for (auto [i, j] : pairs) {
    Vector p = sa[i].point;
    p.insert(p.end(), sb[j].point.begin(), sb[j].point.end());
    samples.push_back({std::move(p), std::min(sa[i].clearance, sb[j].clearance)});
  }
  std::optional<Box> bounds;
  if (a.bounds() && b.bounds()) {
    bounds = *a.bounds();
    bounds->lo.insert(bounds->lo.end(), b.bounds()->lo.begin(), b.bounds()->lo.end());
    bounds->hi.insert(bounds->hi.end(), b.bounds()->hi.begin(), b.bounds()->hi.end());
  }
  return Region(da + db, std::move(both), std::move(samples), std::move(bounds), a.name() + "x" + b.name());
}

}  // namespace liekit
