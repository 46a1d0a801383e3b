#include "liekit/models/spaces.hpp"

#include <cmath>
#include <numbers>

namespace liekit {

Region euclidean_region(std::size_t n, std::size_t n_samples, std::uint64_t seed) {
  require(n >= 1, "euclidean_region: n must be positive");
  Region box = Region::box(Vector(n, -kEuclideanHalfWidth), Vector(n, kEuclideanHalfWidth), n_samples, seed);
  std::vector<RegionSample> samples = box.samples();
  for (auto& s : samples) s.clearance = 1.0;
  return Region(n, [](Point) { return true; }, std::move(samples), {}, "R" + std::to_string(n));
}

Manifold euclidean_manifold(std::size_t n, std::size_t n_samples, std::uint64_t seed, const ProbeOptions& options) {
  return Manifold::create({Chart::identity(euclidean_region(n, n_samples, seed), "id")}, options);
}

Region gl_region(std::size_t n, std::size_t n_samples, std::uint64_t seed) {
  require(n >= 1 && n <= kMaxCofactorDim, "gl_region: n must be between 1 and 4");
  Region::Predicate pred = [n](Point a) { return std::abs(det_cofactor<double>(a, n)) > kGlDetMargin; };
  std::vector<Vector> candidates;
  Rng rng(seed);
  if (n == 1) {
    candidates.push_back({1.0});
    while (candidates.size() < n_samples) {
      const double x = rng.uniform(0.5, 2.0);
      candidates.push_back({candidates.size() % 2 == 0 ? x : -x});
    }
  } else {
    candidates.push_back(SquareMatrix::identity(n).entries);
    std::size_t attempts = 0;
    while (candidates.size() < n_samples && attempts++ < 100 * n_samples) {
      SquareMatrix a = SquareMatrix::identity(n);
      for (auto& x : a.entries) x += 0.4 * rng.uniform(-1.0, 1.0);
      // Every other candidate gets its first row negated, flipping det's sign.
      if (candidates.size() % 2 == 0)
        for (std::size_t j = 0; j < n; ++j) a(0, j) = -a(0, j);
      if (std::abs(det(a)) > 0.1) candidates.push_back(a.entries);
    }
  }
  return Region::from_predicate(n * n, std::move(pred), candidates, {}, "GL" + std::to_string(n));
}

Manifold gl_manifold(std::size_t n, std::size_t n_samples, std::uint64_t seed, const ProbeOptions& options) {
  return Manifold::create({Chart::identity(gl_region(n, n_samples, seed), "id")}, options);
}

Manifold disk_manifold(std::size_t n_samples, std::uint64_t seed, const ProbeOptions& options) {
  return Manifold::create({Chart::identity(Region::ball({0.0, 0.0}, 1.0, n_samples, seed, "disk"), "id")}, options);
}

namespace {

DiffeoFixture affine_fixture(std::string name, const SquareMatrix& a, const Vector& b) {
  const std::size_t n = a.n;
  const SquareMatrix ai = matrix_inv(a);
  Vector bi(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) bi[i] -= ai(i, j) * b[j];
  return {name, map_affine(n, a.entries, b), map_affine(n, ai.entries, bi)};
}

SquareMatrix rotation(double angle) {
  return SquareMatrix::from_rows({{std::cos(angle), -std::sin(angle)}, {std::sin(angle), std::cos(angle)}});
}

}  // namespace

std::vector<DiffeoFixture> test_diffeos(std::size_t n) {
  require(n >= 1 && n <= kMaxCofactorDim, "test_diffeos: n must be between 1 and 4");
  std::vector<DiffeoFixture> out;
  const SquareMatrix id = SquareMatrix::identity(n);
  out.push_back({"identity", map_identity(n), map_identity(n)});
  Vector shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = 0.5 - 0.25 * static_cast<double>(i);
  out.push_back(affine_fixture("translation", id, shift));
  out.push_back(affine_fixture("scaling", 2.0 * id, Vector(n, 0.0)));
  SquareMatrix shear = id;
  for (std::size_t i = 0; i + 1 < n; ++i) shear(i, i + 1) = 0.5;
  out.push_back(affine_fixture("shear", shear, Vector(n, 0.0)));
  SquareMatrix mixed = id;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mixed(i, j) += 0.1 * static_cast<double>((i + 2 * j) % 3) - 0.1;
  out.push_back(affine_fixture("affine", mixed, shift));
  return out;
}

std::vector<DiffeoFixture> disk_automorphisms() {
  const double pi = std::numbers::pi;
  std::vector<DiffeoFixture> out;
  out.push_back({"identity", map_identity(2), map_identity(2)});
  out.push_back(affine_fixture("rotation(pi/3)", rotation(pi / 3), {0.0, 0.0}));
  out.push_back(affine_fixture("rotation(-pi/3)", rotation(-pi / 3), {0.0, 0.0}));
  out.push_back(affine_fixture("rotation(pi/2)", rotation(pi / 2), {0.0, 0.0}));
  out.push_back(affine_fixture("reflection(x)", SquareMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}), {0.0, 0.0}));
  out.push_back(affine_fixture("reflection(diag)", SquareMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}), {0.0, 0.0}));
  return out;
}

std::pair<Chart, Chart> nonlinear_chart_pair() {
  Region interval = Region::box({-2.0}, {2.0}, 24, 0, "(-2,2)");
  Chart identity = Chart::identity(interval, "id");
  RealMap cubic = RealMap::from_expr(
      1, 1,
      [](auto x) {
        using T = typename decltype(x)::value_type;
        return std::vector<T>{x[0] * x[0] * x[0] + x[0]};
      },
      "x^3+x");
  // Real root of t^3 + t - y = 0. The second radicand is always negative, so
  // neither cube root is evaluated at 0.
  RealMap cardano = RealMap::from_expr(
      1, 1,
      [](auto y) {
        using T = typename decltype(y)::value_type;
        using std::cbrt;
        using std::sqrt;
        const T half = y[0] * 0.5;
        const T s = sqrt(half * half + 1.0 / 27.0);
        return std::vector<T>{cbrt(half + s) + cbrt(half - s)};
      },
      "cardano");
  Region image = Region::box({-10.0}, {10.0}, 24, 1, "(-10,10)");
  return {identity, Chart("cubic", interval, image, cubic, cardano)};
}

Chart cube_root_chart() {
  Region interval = Region::box({-1.0}, {1.0}, 24, 0, "(-1,1)");
  RealMap root = RealMap::from_expr(
      1, 1,
      [](auto x) {
        using T = typename decltype(x)::value_type;
        using std::cbrt;
        return std::vector<T>{cbrt(x[0])};
      },
      "cbrt");
  RealMap cube = RealMap::from_expr(
      1, 1,
      [](auto u) {
        using T = typename decltype(u)::value_type;
        return std::vector<T>{u[0] * u[0] * u[0]};
      },
      "u^3");
  return Chart("cbrt", interval, interval, root, cube);
}

}  // namespace liekit
