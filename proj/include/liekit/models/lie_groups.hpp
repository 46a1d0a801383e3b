#pragma once

#include "liekit/lie/lie_group.hpp"

namespace liekit {

/// (R^n, +) with negation as inverse.
LieGroup euclidean_lie_group(std::size_t n, std::size_t n_samples = 32, std::uint64_t seed = 0,
                             const ProbeOptions& options = {});

/// GL(n) for n <= kMaxCofactorDim: matrix product on row-major flattenings,
/// inverse adj(A) / det(A).
LieGroup gl_group(std::size_t n, std::size_t n_samples = 16, std::uint64_t seed = 0, const ProbeOptions& options = {});

/// The flattened matrix unit E_ij as a tangent vector at the identity of GL(n).
TangentVector gl_unit_vector(const LieGroup& gl, std::size_t n, std::size_t i, std::size_t j);

}  // namespace liekit
