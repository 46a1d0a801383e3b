#include "liekit/models/lie_groups.hpp"

#include "liekit/models/matrix.hpp"
#include "liekit/models/spaces.hpp"

namespace liekit {

LieGroup euclidean_lie_group(std::size_t n, std::size_t n_samples, std::uint64_t seed, const ProbeOptions& options) {
  const Manifold m = euclidean_manifold(n, n_samples, seed, options);
  Vector sum(n * 2 * n, 0.0);
  Vector neg(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    sum[i * 2 * n + i] = 1.0;
    sum[i * 2 * n + n + i] = 1.0;
    neg[i * n + i] = -1.0;
  }
  return lie_group_new(m, map_affine(2 * n, sum, Vector(n, 0.0)), Vector(n, 0.0),
                       map_affine(n, neg, Vector(n, 0.0)), options);
}

LieGroup gl_group(std::size_t n, std::size_t n_samples, std::uint64_t seed, const ProbeOptions& options) {
  require(n >= 1 && n <= kMaxCofactorDim, "gl_group: supported for 1 <= n <= " + std::to_string(kMaxCofactorDim));
  const Manifold m = gl_manifold(n, n_samples, seed, options);
  return lie_group_new(m, matmul_map(n), SquareMatrix::identity(n).entries, matrix_inverse_map(n), options);
}

TangentVector gl_unit_vector(const LieGroup& gl, std::size_t n, std::size_t i, std::size_t j) {
  require(i < n && j < n && gl.manifold.ambient_dim() == n * n, "gl_unit_vector: index out of range");
  Vector b(n * n, 0.0);
  b[i * n + j] = 1.0;
  return coordinate_vector(gl.manifold.chart_at(gl.unit), gl.unit, b);
}

}  // namespace liekit
