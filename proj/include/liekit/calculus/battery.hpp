#pragma once

#include <vector>

#include "liekit/calculus/real_map.hpp"

namespace liekit {

/// Fixed test-function battery on R^dim: eight polynomials of degree <= 3 in
/// the coordinates followed by two transcendental maps. Deterministic, so
/// every property check that quantifies over "smooth functions" uses the same
/// ten functions.
std::vector<RealMap> function_battery(std::size_t dim);

inline constexpr std::size_t kBatteryPolynomials = 8;
inline constexpr std::size_t kBatterySize = 10;

}  // namespace liekit
