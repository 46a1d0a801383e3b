#pragma once

#include "liekit/common.hpp"
#include "liekit/field/vector_field.hpp"

namespace liekit {

/// Dense polynomial map R^n -> R^m of total degree <= degree. coeffs holds,
/// per output, one coefficient per monomial in graded order (the jet layout
/// order of (n, degree)).
RealMap polynomial_map(std::size_t n, std::size_t m, std::size_t degree, Vector coeffs, std::string name = {});

/// Number of monomials of degree <= degree in n variables.
std::size_t monomial_count(std::size_t n, std::size_t degree);

/// Ambient field with seeded polynomial components, coefficients uniform in
/// [-scale, scale].
VectorField random_polynomial_field(const Manifold& m, std::size_t degree, Rng& rng, double scale = 1.0);

/// The constant field e_i.
VectorField coordinate_field(const Manifold& m, std::size_t i);

}  // namespace liekit
