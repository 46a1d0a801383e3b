#pragma once

#include <span>
#include <vector>

#include "liekit/calculus/real_map.hpp"

namespace liekit {

/// Largest n with a jet-evaluable (cofactor) determinant.
inline constexpr std::size_t kMaxCofactorDim = 4;
/// matrix_inv refuses matrices with |det| at or below this.
inline constexpr double kSingularDetTol = 1e-12;

/// n x n matrix stored row-major, which is also its point in R^(n*n).
struct SquareMatrix {
  std::size_t n = 0;
  Vector entries;

  static SquareMatrix identity(std::size_t n);
  static SquareMatrix from_flat(std::size_t n, Point flat);
  static SquareMatrix from_rows(const std::vector<Vector>& rows);

  double operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  double& operator()(std::size_t i, std::size_t j) { return entries[i * n + j]; }
  const Vector& flat() const { return entries; }
};

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix operator*(double s, const SquareMatrix& a);
double trace(const SquareMatrix& a);

/// Determinant by cofactor expansion along the first row, for any scalar type
/// supporting +, -, *. Used for plain values and for jets alike.
template <class T>
T det_cofactor(std::span<const T> a, std::size_t n) {
  if (n == 1) return a[0];
  if (n == 2) return a[0] * a[3] - a[1] * a[2];
  std::vector<T> minor((n - 1) * (n - 1));
  T sum(0.0);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) minor[k++] = a[i * n + j];
    const T term = a[col] * det_cofactor<T>(minor, n - 1);
    sum = col % 2 == 0 ? sum + term : sum - term;
  }
  return sum;
}

/// Transposed cofactor matrix, row-major.
template <class T>
std::vector<T> adjugate_cofactor(std::span<const T> a, std::size_t n) {
  std::vector<T> adj(n * n);
  if (n == 1) {
    adj[0] = T(1.0);
    return adj;
  }
  std::vector<T> minor((n - 1) * (n - 1));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t k = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != r && j != c) minor[k++] = a[i * n + j];
      const T m = det_cofactor<T>(minor, n - 1);
      adj[c * n + r] = (r + c) % 2 == 0 ? m : T(0.0) - m;
    }
  return adj;
}

double det(const SquareMatrix& a);
SquareMatrix adjugate(const SquareMatrix& a);
/// adjugate / det; throws SingularMatrix when |det| <= kSingularDetTol.
SquareMatrix matrix_inv(const SquareMatrix& a);

/// det on R^(n*n). For n > kMaxCofactorDim the value path uses an LU
/// factorization and lifting throws UnsupportedOrder.
RealMap det_map(std::size_t n);
RealMap adjugate_map(std::size_t n);
/// A -> adj(A) / det(A), jet-evaluable for n <= kMaxCofactorDim.
RealMap matrix_inverse_map(std::size_t n);
/// (A, B) in R^(2 n n) -> A B.
RealMap matmul_map(std::size_t n);

}  // namespace liekit
