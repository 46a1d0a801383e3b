#pragma once

/**
 * @file jet.hpp
 * @brief Truncated multivariate Taylor arithmetic (jets).
 *
 * A Jet of order K in `dim` variables stores the Taylor polynomial
 *
 *     f(p + t) ~ sum_{|a| <= K} c_a t^a
 *
 * in a graded monomial basis. Derivative tensors are recovered as
 * d^a f(p) = a! c_a, so every mixed partial is read from a single
 * coefficient and the tensors are symmetric by construction.
 *
 * Arithmetic propagates the polynomial through an expression, which is
 * forward-mode differentiation to all orders up to K at once. A Jet without a
 * layout is a plain constant that adopts the layout of whatever it meets.
 */

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "liekit/common.hpp"

namespace liekit {

/// Hard ceiling on internal jet orders. Public evaluation entry points enforce
/// the configurable (smaller) maximum; nested constructions such as the Lie
/// bracket request a few orders more internally.
inline constexpr std::size_t kHardMaxJetOrder = 8;
inline constexpr std::size_t kDefaultMaxOrder = 4;

/// Monomial bookkeeping shared by all jets of one (dim, order). Obtained
/// through get(), which caches layouts for the lifetime of the process.
class JetLayout {
 public:
  struct MulTerm {
    std::uint32_t lhs;
    std::uint32_t rhs;
    std::uint32_t out;
  };
  struct PartialTerm {
    std::uint32_t src;
    std::uint32_t dst;  // index in the (dim, order - 1) layout
    double factor;
  };
  struct Parent {
    std::uint32_t parent;
    std::uint32_t var;
  };

  static std::shared_ptr<const JetLayout> get(std::size_t dim, std::size_t order);

  std::size_t dim() const { return dim_; }
  std::size_t order() const { return order_; }
  std::size_t size() const { return degree_offset_.back(); }

  std::span<const std::uint8_t> exponents(std::size_t idx) const {
    return {exponents_.data() + idx * dim_, dim_};
  }
  std::size_t degree(std::size_t idx) const { return degree_[idx]; }
  /// First index of the monomials of total degree d (graded, contiguous).
  std::size_t degree_begin(std::size_t d) const { return degree_offset_[d]; }

  /// Index of the monomial with the given exponents, or size() when its
  /// degree exceeds the layout order.
  std::size_t index_of(std::span<const std::uint8_t> exps) const;

  /// a! for the monomial at idx (product of factorials of the exponents).
  double factorial_weight(std::size_t idx) const { return weight_[idx]; }

  const std::vector<MulTerm>& mul_terms() const { return mul_; }
  /// parent(idx) * x_var = idx, for idx >= 1.
  const Parent& parent(std::size_t idx) const { return parent_[idx]; }
  const std::vector<PartialTerm>& partial_terms(std::size_t var) const { return partial_[var]; }

  JetLayout(std::size_t dim, std::size_t order);

 private:
  std::size_t dim_;
  std::size_t order_;
  std::vector<std::uint8_t> exponents_;
  std::unordered_map<std::string, std::size_t> lookup_;
  std::vector<std::uint8_t> degree_;
  std::vector<std::size_t> degree_offset_;
  std::vector<double> weight_;
  std::vector<MulTerm> mul_;
  std::vector<Parent> parent_;
  std::vector<std::vector<PartialTerm>> partial_;
};

class Jet {
 public:
  using LayoutPtr = std::shared_ptr<const JetLayout>;

  /// Layout-free constant.
  Jet(double constant = 0.0);  // NOLINT(google-explicit-constructor)

  static Jet constant(LayoutPtr layout, double value);
  /// The coordinate function x_var expanded at `value`.
  static Jet variable(LayoutPtr layout, double value, std::size_t var);
  static Jet from_coefficients(LayoutPtr layout, std::vector<double> coeffs);

  bool has_layout() const { return layout_ != nullptr; }
  const LayoutPtr& layout() const { return layout_; }
  std::size_t dim() const;
  std::size_t order() const;

  double value() const { return coeffs_[0]; }
  /// Raw Taylor coefficients in layout order.
  std::span<const double> coefficients() const { return coeffs_; }

  /// Mixed partial d_{i1} ... d_{ir} f at the expansion point.
  double derivative(std::span<const std::size_t> indices) const;
  /// Full rank-r derivative tensor, row-major with dim^r entries.
  std::vector<double> tensor(std::size_t rank) const;
  Vector gradient() const { return tensor(1); }

  /// d/dx_var, one order lower.
  Jet partial(std::size_t var) const;
  /// Same jet with the constant term removed.
  Jet increment() const;
  /// Re-express in `layout` (same dim, any order): truncates or zero-pads.
  Jet with_layout(const LayoutPtr& layout) const;

  bool all_finite() const;
  /// Smallest derivative rank containing a non-finite coefficient, if any.
  std::size_t first_nonfinite_rank() const;

  Jet operator-() const;
  Jet& operator+=(const Jet& rhs);
  Jet& operator-=(const Jet& rhs);
  Jet& operator*=(const Jet& rhs);
  Jet& operator/=(const Jet& rhs);

  friend Jet operator+(Jet lhs, const Jet& rhs) { return lhs += rhs; }
  friend Jet operator-(Jet lhs, const Jet& rhs) { return lhs -= rhs; }
  friend Jet operator*(const Jet& lhs, const Jet& rhs);
  friend Jet operator/(const Jet& lhs, const Jet& rhs);
  friend Jet operator+(Jet lhs, double rhs) { return lhs += Jet(rhs); }
  friend Jet operator+(double lhs, Jet rhs) { return rhs += Jet(lhs); }
  friend Jet operator-(Jet lhs, double rhs) { return lhs -= Jet(rhs); }
  friend Jet operator-(double lhs, const Jet& rhs) { return Jet(lhs) - rhs; }
  friend Jet operator*(Jet lhs, double rhs);
  friend Jet operator*(double lhs, Jet rhs) { return std::move(rhs) * lhs; }
  friend Jet operator/(Jet lhs, double rhs) { return std::move(lhs) * (1.0 / rhs); }
  friend Jet operator/(double lhs, const Jet& rhs) { return Jet(lhs) / rhs; }

 private:
  Jet(LayoutPtr layout, std::vector<double> coeffs);

  LayoutPtr layout_;
  std::vector<double> coeffs_;
};

/// g(u) for a univariate g given by its Taylor coefficients at u.value():
/// taylor[k] = g^{(k)}(u0) / k!. The value slot is set to taylor[0] exactly.
Jet compose_univariate(const Jet& u, std::span<const double> taylor);

Jet exp(const Jet& u);
Jet log(const Jet& u);
Jet sin(const Jet& u);
Jet cos(const Jet& u);
Jet sqrt(const Jet& u);
Jet cbrt(const Jet& u);
Jet pow(const Jet& u, double exponent);
/// |u|; derivatives are NaN at u == 0, the kink.
Jet abs(const Jet& u);

inline double value_of(double x) { return x; }
inline double value_of(const Jet& x) { return x.value(); }

/// x^n by repeated multiplication. Used for both doubles and jets so that
/// order-0 jet values agree bit-for-bit with plain evaluation.
template <class T>
T ipow(const T& x, unsigned n) {
  if (n == 0) return T(1.0);
  T result = x;
  for (unsigned i = 1; i < n; ++i) result = result * x;
  return result;
}

/// Independent coordinate jets of `order` expanded at p.
std::vector<Jet> seed_variables(Point p, std::size_t order);

Vector values_of(std::span<const Jet> jets);

/// Evaluates the truncated polynomials `polys` (all in one layout, dim = e)
/// at `delta` (e jets with zero constant term sharing a layout L). The result
/// lives in L. This is the composition primitive behind every derived map
/// whose jets need derivatives of another map.
std::vector<Jet> substitute(std::span<const Jet> polys, std::span<const Jet> delta);

}  // namespace liekit
