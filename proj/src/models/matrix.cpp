#include "liekit/models/matrix.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace liekit {

SquareMatrix SquareMatrix::identity(std::size_t n) {
  SquareMatrix m{n, Vector(n * n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

SquareMatrix SquareMatrix::from_flat(std::size_t n, Point flat) {
  require(flat.size() == n * n, "SquareMatrix: expected " + std::to_string(n * n) + " entries");
  return SquareMatrix{n, Vector(flat.begin(), flat.end())};
}

SquareMatrix SquareMatrix::from_rows(const std::vector<Vector>& rows) {
  const std::size_t n = rows.size();
  SquareMatrix m{n, {}};
  for (const auto& r : rows) {
    require(r.size() == n, "SquareMatrix: rows must have length n");
    m.entries.insert(m.entries.end(), r.begin(), r.end());
  }
  return m;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  require(a.n == b.n, "matrix product: size mismatch");
  SquareMatrix c{a.n, Vector(a.n * a.n, 0.0)};
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t k = 0; k < a.n; ++k)
      for (std::size_t j = 0; j < a.n; ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
  require(a.n == b.n, "matrix sum: size mismatch");
  SquareMatrix c = a;
  for (std::size_t i = 0; i < c.entries.size(); ++i) c.entries[i] += b.entries[i];
  return c;
}

SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) { return a + (-1.0) * b; }

SquareMatrix operator*(double s, const SquareMatrix& a) {
  SquareMatrix c = a;
  for (auto& x : c.entries) x *= s;
  return c;
}

double trace(const SquareMatrix& a) {
  double t = 0.0;
  for (std::size_t i = 0; i < a.n; ++i) t += a(i, i);
  return t;
}

namespace {

double det_lu(Point a, std::size_t n) {
  Eigen::MatrixXd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a[i * n + j];
  return m.partialPivLu().determinant();
}

void require_cofactor_dim(std::size_t n, const char* what) {
  if (n > kMaxCofactorDim)
    throw UnsupportedOrder(std::string(what) + ": jet evaluation is only available for n <= " +
                           std::to_string(kMaxCofactorDim));
}

}  // namespace

double det(const SquareMatrix& a) {
  if (a.n <= kMaxCofactorDim) return det_cofactor<double>(a.entries, a.n);
  return det_lu(a.entries, a.n);
}

SquareMatrix adjugate(const SquareMatrix& a) {
  require_cofactor_dim(a.n, "adjugate");
  return SquareMatrix{a.n, adjugate_cofactor<double>(a.entries, a.n)};
}

SquareMatrix matrix_inv(const SquareMatrix& a) {
  const double d = det(a);
  if (!(std::abs(d) > kSingularDetTol))
    throw SingularMatrix("matrix_inv: |det| = " + std::to_string(std::abs(d)) + " is too small");
  return (1.0 / d) * adjugate(a);
}

RealMap det_map(std::size_t n) {
  require(n >= 1, "det_map: n must be positive");
  RealMap::EvalFn eval = [n](Point a) -> Vector {
    return {n <= kMaxCofactorDim ? det_cofactor<double>(a, n) : det_lu(a, n)};
  };
  RealMap::LiftFn lift = [n](std::span<const Jet> a) -> std::vector<Jet> {
    require_cofactor_dim(n, "det");
    return {det_cofactor<Jet>(a, n)};
  };
  return RealMap(n * n, 1, std::move(eval), std::move(lift), "det");
}

RealMap adjugate_map(std::size_t n) {
  require(n >= 1, "adjugate_map: n must be positive");
  require_cofactor_dim(n, "adjugate");
  return RealMap::from_expr(
      n * n, n * n, [n](auto a) { return adjugate_cofactor(a, n); }, "adj");
}

RealMap matrix_inverse_map(std::size_t n) {
  require(n >= 1, "matrix_inverse_map: n must be positive");
  require_cofactor_dim(n, "matrix inverse");
  return RealMap::from_expr(
      n * n, n * n,
      [n](auto a) {
        using T = typename decltype(a)::value_type;
        auto adj = adjugate_cofactor(a, n);
        const T d = det_cofactor(a, n);
        for (auto& x : adj) x = x / d;
        return adj;
      },
      "inv");
}

RealMap matmul_map(std::size_t n) {
  require(n >= 1, "matmul_map: n must be positive");
  return RealMap::from_expr(
      2 * n * n, n * n,
      [n](auto ab) {
        using T = typename decltype(ab)::value_type;
        std::vector<T> c(n * n, T(0.0));
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            T s = ab[i * n] * ab[n * n + j];
            for (std::size_t k = 1; k < n; ++k) s = s + ab[i * n + k] * ab[n * n + k * n + j];
            c[i * n + j] = s;
          }
        return c;
      },
      "matmul");
}

}  // namespace liekit
