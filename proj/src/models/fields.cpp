#include "liekit/models/fields.hpp"

namespace liekit {

std::size_t monomial_count(std::size_t n, std::size_t degree) { return JetLayout::get(n, degree)->size(); }

RealMap polynomial_map(std::size_t n, std::size_t m, std::size_t degree, Vector coeffs, std::string name) {
  const auto layout = JetLayout::get(n, degree);
  const std::size_t terms = layout->size();
  require(coeffs.size() == m * terms, "polynomial_map: expected " + std::to_string(m * terms) + " coefficients");
  std::vector<std::vector<std::uint8_t>> exps;
  for (std::size_t k = 0; k < terms; ++k) {
    auto e = layout->exponents(k);
    exps.emplace_back(e.begin(), e.end());
  }
  return RealMap::from_expr(
      n, m,
      [exps, coeffs, m, terms](auto x) {
        using T = typename decltype(x)::value_type;
        std::vector<T> monomials;
        monomials.reserve(terms);
        for (const auto& e : exps) {
          T term(1.0);
          for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v] > 0) term = term * ipow(x[v], e[v]);
          monomials.push_back(term);
        }
        std::vector<T> out;
        for (std::size_t i = 0; i < m; ++i) {
          T s(0.0);
          for (std::size_t k = 0; k < terms; ++k)
            if (coeffs[i * terms + k] != 0.0) s = s + coeffs[i * terms + k] * monomials[k];
          out.push_back(s);
        }
        return out;
      },
      std::move(name));
}

VectorField random_polynomial_field(const Manifold& m, std::size_t degree, Rng& rng, double scale) {
  const std::size_t n = m.ambient_dim();
  Vector coeffs(n * monomial_count(n, degree));
  for (auto& c : coeffs) c = rng.uniform(-scale, scale);
  return VectorField::from_ambient(m, polynomial_map(n, n, degree, std::move(coeffs), "poly"));
}

VectorField coordinate_field(const Manifold& m, std::size_t i) {
  Vector e(m.ambient_dim(), 0.0);
  e.at(i) = 1.0;
  return VectorField::from_ambient(m, map_constant(m.ambient_dim(), e), "e" + std::to_string(i));
}

}  // namespace liekit
