#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liekit/geometry/manifold.hpp"
#include "liekit/models/matrix.hpp"

namespace liekit {

/// Half-width of the box the Euclidean models draw their samples from.
inline constexpr double kEuclideanHalfWidth = 4.0;
/// GL(n) region margin: |det A| must exceed this.
inline constexpr double kGlDetMargin = 1e-6;

/// All of R^n, sampled in the box (-4, 4)^n.
Region euclidean_region(std::size_t n, std::size_t n_samples = 32, std::uint64_t seed = 0);
/// R^n with the identity chart.
Manifold euclidean_manifold(std::size_t n, std::size_t n_samples = 32, std::uint64_t seed = 0,
                            const ProbeOptions& options = {});

/// {A : |det A| > kGlDetMargin} in R^(n*n) with the identity chart. Samples
/// are I and seeded perturbations of I (both determinant signs).
Manifold gl_manifold(std::size_t n, std::size_t n_samples = 16, std::uint64_t seed = 0,
                     const ProbeOptions& options = {});
Region gl_region(std::size_t n, std::size_t n_samples = 16, std::uint64_t seed = 0);

/// The open unit disk in R^2 with the identity chart.
Manifold disk_manifold(std::size_t n_samples = 32, std::uint64_t seed = 0, const ProbeOptions& options = {});

struct DiffeoFixture {
  std::string name;
  RealMap map;
  RealMap inverse;
};

/// Affine bijections x -> A x + b of R^n with exact inverses; the first
/// entry is the identity.
std::vector<DiffeoFixture> test_diffeos(std::size_t n);
/// Six linear automorphisms of the unit disk: identity, rotations, reflections.
std::vector<DiffeoFixture> disk_automorphisms();

/// Two charts on (-2, 2): the identity and x -> x^3 + x (inverse by Cardano's
/// formula, smooth everywhere).
std::pair<Chart, Chart> nonlinear_chart_pair();
/// x -> cbrt(x) on (-1, 1): a homeomorphism whose inverse direction is smooth
/// but whose forward direction is not differentiable at 0.
Chart cube_root_chart();

}  // namespace liekit
