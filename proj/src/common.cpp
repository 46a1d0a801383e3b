#include "liekit/common.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace liekit {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

double Rng::uniform(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

std::size_t Rng::index(std::size_t n) {
  require(n > 0, "Rng::index: empty range");
  return static_cast<std::size_t>(engine_() % n);
}

double max_abs_diff(Point a, Point b) {
  require(a.size() == b.size(), "max_abs_diff: size mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    if (std::isnan(d)) return d;
    worst = std::max(worst, d);
  }
  return worst;
}

double max_abs(Point a) {
  double worst = 0.0;
  for (double v : a) {
    if (std::isnan(v)) return v;
    worst = std::max(worst, std::abs(v));
  }
  return worst;
}

std::string format_point(Point p) {
  std::ostringstream out;
  out.precision(6);
  out << '(';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out << ", ";
    out << p[i];
  }
  out << ')';
  return out.str();
}

}  // namespace liekit
