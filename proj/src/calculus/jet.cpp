#include "liekit/calculus/jet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>

namespace liekit {

namespace {

void enumerate_degree(std::size_t dim, std::size_t degree, std::size_t var, std::vector<std::uint8_t>& current,
                      std::vector<std::uint8_t>& out) {
  if (var + 1 == dim) {
    current[var] = static_cast<std::uint8_t>(degree);
    out.insert(out.end(), current.begin(), current.end());
    current[var] = 0;
    return;
  }
  for (std::size_t k = degree + 1; k-- > 0;) {
    current[var] = static_cast<std::uint8_t>(k);
    enumerate_degree(dim, degree - k, var + 1, current, out);
  }
  current[var] = 0;
}

double factorial(std::size_t n) {
  double r = 1.0;
  for (std::size_t i = 2; i <= n; ++i) r *= static_cast<double>(i);
  return r;
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

JetLayout::JetLayout(std::size_t dim, std::size_t order) : dim_(dim), order_(order) {
  std::vector<std::uint8_t> current(dim, 0);
  degree_offset_.push_back(0);
  for (std::size_t d = 0; d <= order; ++d) {
    enumerate_degree(dim, d, 0, current, exponents_);
    degree_offset_.push_back(exponents_.size() / dim);
  }
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    auto e = exponents(i);
    lookup_.emplace(std::string(e.begin(), e.end()), i);
  }
  degree_.resize(n);
  weight_.resize(n);
  for (std::size_t d = 0; d <= order; ++d)
    for (std::size_t i = degree_offset_[d]; i < degree_offset_[d + 1]; ++i) degree_[i] = static_cast<std::uint8_t>(d);
  for (std::size_t i = 0; i < n; ++i) {
    double w = 1.0;
    for (std::uint8_t e : exponents(i)) w *= factorial(e);
    weight_[i] = w;
  }

  std::vector<std::uint8_t> scratch(dim);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t room = order - degree_[a];
    const std::size_t end = degree_offset_[room + 1];
    for (std::size_t b = 0; b < end; ++b) {
      for (std::size_t v = 0; v < dim; ++v) scratch[v] = static_cast<std::uint8_t>(exponents(a)[v] + exponents(b)[v]);
      mul_.push_back({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                      static_cast<std::uint32_t>(index_of(scratch))});
    }
  }

  parent_.resize(n, Parent{0, 0});
  for (std::size_t i = 1; i < n; ++i) {
    auto e = exponents(i);
    std::copy(e.begin(), e.end(), scratch.begin());
    std::size_t var = 0;
    while (scratch[var] == 0) ++var;
    --scratch[var];
    parent_[i] = {static_cast<std::uint32_t>(index_of(scratch)), static_cast<std::uint32_t>(var)};
  }

  partial_.resize(dim);
  if (order > 0) {
    auto lower = JetLayout::get(dim, order - 1);
    for (std::size_t var = 0; var < dim; ++var) {
      for (std::size_t i = 0; i < n; ++i) {
        auto e = exponents(i);
        if (e[var] == 0) continue;
        std::copy(e.begin(), e.end(), scratch.begin());
        --scratch[var];
        partial_[var].push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(lower->index_of(scratch)),
                                 static_cast<double>(e[var])});
      }
    }
  }
}

std::size_t JetLayout::index_of(std::span<const std::uint8_t> exps) const {
  require(exps.size() == dim_, "JetLayout::index_of: exponent length mismatch");
  std::size_t degree = 0;
  for (auto e : exps) degree += e;
  if (degree > order_) return size();
  auto it = lookup_.find(std::string(exps.begin(), exps.end()));
  return it == lookup_.end() ? size() : it->second;
}

std::shared_ptr<const JetLayout> JetLayout::get(std::size_t dim, std::size_t order) {
  if (dim == 0) throw ContractViolation("JetLayout: dimension must be positive");
  if (order > kHardMaxJetOrder)
    throw UnsupportedOrder("jet order " + std::to_string(order) + " exceeds hard limit " +
                           std::to_string(kHardMaxJetOrder));
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const JetLayout>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({dim, order});
    if (it != cache.end()) return it->second;
  }
  // Built outside the lock: construction recursively requests the lower order.
  auto layout = std::make_shared<const JetLayout>(dim, order);
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(std::make_pair(dim, order), layout);
  return it->second;
}

// ---------------------------------------------------------------------------

Jet::Jet(double constant) : coeffs_{constant} {}

Jet::Jet(LayoutPtr layout, std::vector<double> coeffs) : layout_(std::move(layout)), coeffs_(std::move(coeffs)) {}

Jet Jet::constant(LayoutPtr layout, double value) {
  require(layout != nullptr, "Jet::constant: null layout");
  std::vector<double> c(layout->size(), 0.0);
  c[0] = value;
  return Jet(std::move(layout), std::move(c));
}

Jet Jet::variable(LayoutPtr layout, double value, std::size_t var) {
  require(layout != nullptr && var < layout->dim(), "Jet::variable: variable index out of range");
  Jet j = constant(layout, value);
  if (layout->order() >= 1) j.coeffs_[1 + var] = 1.0;
  return j;
}

Jet Jet::from_coefficients(LayoutPtr layout, std::vector<double> coeffs) {
  require(layout != nullptr && coeffs.size() == layout->size(), "Jet::from_coefficients: size mismatch");
  return Jet(std::move(layout), std::move(coeffs));
}

std::size_t Jet::dim() const { return layout_ ? layout_->dim() : 0; }
std::size_t Jet::order() const { return layout_ ? layout_->order() : 0; }

double Jet::derivative(std::span<const std::size_t> indices) const {
  if (indices.empty()) return coeffs_[0];
  if (!layout_) return 0.0;
  if (indices.size() > layout_->order())
    throw UnsupportedOrder("Jet::derivative: rank " + std::to_string(indices.size()) + " above jet order");
  std::vector<std::uint8_t> exps(layout_->dim(), 0);
  for (auto i : indices) {
    require(i < layout_->dim(), "Jet::derivative: index out of range");
    ++exps[i];
  }
  const auto idx = layout_->index_of(exps);
  return layout_->factorial_weight(idx) * coeffs_[idx];
}

std::vector<double> Jet::tensor(std::size_t rank) const {
  const std::size_t d = dim();
  if (rank == 0) return {coeffs_[0]};
  require(d > 0, "Jet::tensor: constant jet has no variables");
  std::size_t total = 1;
  for (std::size_t r = 0; r < rank; ++r) total *= d;
  std::vector<double> out(total);
  std::vector<std::size_t> idx(rank, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    for (std::size_t r = rank; r-- > 0;) {
      idx[r] = rem % d;
      rem /= d;
    }
    out[flat] = derivative(idx);
  }
  return out;
}

Jet Jet::partial(std::size_t var) const {
  if (!layout_) return Jet(0.0);
  require(var < layout_->dim(), "Jet::partial: variable out of range");
  if (layout_->order() == 0) throw UnsupportedOrder("Jet::partial: order-0 jet has no derivative data");
  auto lower = JetLayout::get(layout_->dim(), layout_->order() - 1);
  std::vector<double> c(lower->size(), 0.0);
  for (const auto& t : layout_->partial_terms(var)) c[t.dst] += t.factor * coeffs_[t.src];
  return Jet(std::move(lower), std::move(c));
}

Jet Jet::increment() const {
  Jet r = *this;
  r.coeffs_[0] = 0.0;
  return r;
}

Jet Jet::with_layout(const LayoutPtr& layout) const {
  if (!layout_) return constant(layout, coeffs_[0]);
  require(layout->dim() == layout_->dim(), "Jet::with_layout: dimension mismatch");
  if (layout == layout_) return *this;
  std::vector<double> c(layout->size(), 0.0);
  const std::size_t n = std::min(c.size(), coeffs_.size());
  // Graded layouts of equal dim share their common prefix.
  std::copy_n(coeffs_.begin(), n, c.begin());
  return Jet(layout, std::move(c));
}

bool Jet::all_finite() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return std::isfinite(c); });
}

std::size_t Jet::first_nonfinite_rank() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!std::isfinite(coeffs_[i])) return layout_ ? layout_->degree(i) : 0;
  return std::numeric_limits<std::size_t>::max();
}

namespace {

// Brings a pair to a common layout. Layout-free constants broadcast.
void unify(Jet& lhs, Jet& rhs) {
  if (lhs.layout() == rhs.layout()) return;
  if (!lhs.has_layout()) {
    lhs = lhs.with_layout(rhs.layout());
    return;
  }
  if (!rhs.has_layout()) {
    rhs = rhs.with_layout(lhs.layout());
    return;
  }
  throw ContractViolation("Jet arithmetic: operands have different layouts (dim " + std::to_string(lhs.dim()) +
                          "/order " + std::to_string(lhs.order()) + " vs dim " + std::to_string(rhs.dim()) +
                          "/order " + std::to_string(rhs.order()) + ")");
}

}  // namespace

Jet Jet::operator-() const {
  Jet r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Jet& Jet::operator+=(const Jet& rhs) {
  if (!rhs.layout_) {
    coeffs_[0] += rhs.coeffs_[0];
    return *this;
  }
  Jet other = rhs;
  unify(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
  if (!rhs.layout_) {
    coeffs_[0] -= rhs.coeffs_[0];
    return *this;
  }
  Jet other = rhs;
  unify(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Jet& Jet::operator*=(const Jet& rhs) { return *this = *this * rhs; }
Jet& Jet::operator/=(const Jet& rhs) { return *this = *this / rhs; }

Jet operator*(Jet lhs, double rhs) {
  for (auto& c : lhs.coeffs_) c *= rhs;
  return lhs;
}

Jet operator*(const Jet& lhs, const Jet& rhs) {
  if (!lhs.layout_) return rhs * lhs.coeffs_[0];
  if (!rhs.layout_) return lhs * rhs.coeffs_[0];
  Jet a = lhs;
  Jet b = rhs;
  unify(a, b);
  std::vector<double> out(a.coeffs_.size(), 0.0);
  for (const auto& t : a.layout_->mul_terms()) out[t.out] += a.coeffs_[t.lhs] * b.coeffs_[t.rhs];
  return Jet(a.layout_, std::move(out));
}

Jet operator/(const Jet& lhs, const Jet& rhs) {
  if (!rhs.layout_) {
    Jet r = lhs;
    for (auto& c : r.coeffs_) c /= rhs.coeffs_[0];
    return r;
  }
  Jet a = lhs;
  Jet b = rhs;
  unify(a, b);
  // q solves q*b = a; each pass fixes one more degree of q.
  const double b0 = b.coeffs_[0];
  const Jet tail = b.increment();
  Jet q = a / Jet(b0);
  for (std::size_t k = 0; k < a.order(); ++k) q = (a - tail * q) / Jet(b0);
  q.coeffs_[0] = a.coeffs_[0] / b0;
  return q;
}

Jet compose_univariate(const Jet& u, std::span<const double> taylor) {
  require(!taylor.empty(), "compose_univariate: empty Taylor data");
  if (!u.has_layout() || u.order() == 0) {
    if (!u.has_layout()) return Jet(taylor[0]);
    return Jet::constant(u.layout(), taylor[0]);
  }
  const std::size_t k_max = std::min(u.order(), taylor.size() - 1);
  const Jet delta = u.increment();
  Jet r = Jet::constant(u.layout(), taylor[k_max]);
  for (std::size_t k = k_max; k-- > 1;) r = r * delta + taylor[k];
  r = r * delta;
  std::vector<double> c(r.coefficients().begin(), r.coefficients().end());
  c[0] = taylor[0];
  return Jet::from_coefficients(u.layout(), std::move(c));
}

namespace {

std::size_t taylor_length(const Jet& u) { return u.has_layout() ? u.order() + 1 : 1; }

}  // namespace

Jet exp(const Jet& u) {
  const double e = std::exp(u.value());
  std::vector<double> t(taylor_length(u));
  double inv_fact = 1.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k > 0) inv_fact /= static_cast<double>(k);
    t[k] = e * inv_fact;
  }
  return compose_univariate(u, t);
}

Jet log(const Jet& u) {
  const double x = u.value();
  std::vector<double> t(taylor_length(u));
  t[0] = std::log(x);
  double xk = 1.0;
  for (std::size_t k = 1; k < t.size(); ++k) {
    xk *= x;
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    t[k] = x > 0.0 ? sign / (static_cast<double>(k) * xk) : kNaN;
  }
  return compose_univariate(u, t);
}

Jet sin(const Jet& u) {
  const double s = std::sin(u.value());
  const double c = std::cos(u.value());
  const double cycle[4] = {s, c, -s, -c};
  std::vector<double> t(taylor_length(u));
  double inv_fact = 1.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k > 0) inv_fact /= static_cast<double>(k);
    t[k] = cycle[k % 4] * inv_fact;
  }
  return compose_univariate(u, t);
}

Jet cos(const Jet& u) {
  const double s = std::sin(u.value());
  const double c = std::cos(u.value());
  const double cycle[4] = {c, -s, -c, s};
  std::vector<double> t(taylor_length(u));
  double inv_fact = 1.0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k > 0) inv_fact /= static_cast<double>(k);
    t[k] = cycle[k % 4] * inv_fact;
  }
  return compose_univariate(u, t);
}

namespace {

// Taylor data of x^r at x0 given the value x0^r: binom(r, k) * x0^r / x0^k.
std::vector<double> power_taylor(double x0, double r, double value, std::size_t n) {
  std::vector<double> t(n);
  t[0] = value;
  double binom = 1.0;
  double xk = 1.0;
  for (std::size_t k = 1; k < n; ++k) {
    binom *= (r - static_cast<double>(k - 1)) / static_cast<double>(k);
    xk *= x0;
    t[k] = binom * value / xk;
  }
  return t;
}

}  // namespace

Jet sqrt(const Jet& u) {
  const double x = u.value();
  auto t = power_taylor(x, 0.5, std::sqrt(x), taylor_length(u));
  if (x <= 0.0)
    for (std::size_t k = 1; k < t.size(); ++k) t[k] = kNaN;
  return compose_univariate(u, t);
}

Jet cbrt(const Jet& u) {
  const double x = u.value();
  auto t = power_taylor(x, 1.0 / 3.0, std::cbrt(x), taylor_length(u));
  if (x == 0.0)
    for (std::size_t k = 1; k < t.size(); ++k) t[k] = kNaN;
  return compose_univariate(u, t);
}

Jet pow(const Jet& u, double exponent) {
  const double x = u.value();
  const double v = std::pow(x, exponent);
  std::vector<double> t(taylor_length(u));
  t[0] = v;
  // Coefficients via x^(r-k) directly so that x0 == 0 with integral r works.
  double binom = 1.0;
  for (std::size_t k = 1; k < t.size(); ++k) {
    binom *= (exponent - static_cast<double>(k - 1)) / static_cast<double>(k);
    t[k] = binom == 0.0 ? 0.0 : binom * std::pow(x, exponent - static_cast<double>(k));
  }
  return compose_univariate(u, t);
}

Jet abs(const Jet& u) {
  const double x = u.value();
  if (x > 0.0) return u;
  if (x < 0.0) return -u;
  std::vector<double> t(taylor_length(u), kNaN);
  t[0] = 0.0;
  return compose_univariate(u, t);
}

std::vector<Jet> seed_variables(Point p, std::size_t order) {
  auto layout = JetLayout::get(p.size(), order);
  std::vector<Jet> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back(Jet::variable(layout, p[i], i));
  return out;
}

Vector values_of(std::span<const Jet> jets) {
  Vector v(jets.size());
  for (std::size_t i = 0; i < jets.size(); ++i) v[i] = jets[i].value();
  return v;
}

std::vector<Jet> substitute(std::span<const Jet> polys, std::span<const Jet> delta) {
  if (polys.empty()) return {};
  require(!delta.empty(), "substitute: no substitution variables");
  const auto& target = delta[0].layout();
  require(target != nullptr, "substitute: substitution jets need a layout");
  for (const auto& d : delta) require(d.layout() == target, "substitute: substitution jets must share a layout");

  Jet::LayoutPtr source;
  for (const auto& p : polys)
    if (p.has_layout()) {
      source = p.layout();
      break;
    }
  if (!source) {
    std::vector<Jet> out;
    for (const auto& p : polys) out.push_back(Jet::constant(target, p.value()));
    return out;
  }
  require(source->dim() == delta.size(), "substitute: polynomial dimension does not match substitution size");

  // delta^a for every monomial a, built from parent * x_var.
  const std::size_t max_degree = std::min(source->order(), target->order());
  const std::size_t n = source->degree_begin(max_degree + 1);
  std::vector<Jet> powers;
  powers.reserve(n);
  powers.push_back(Jet::constant(target, 1.0));
  for (std::size_t i = 1; i < n; ++i) {
    const auto& par = source->parent(i);
    powers.push_back(powers[par.parent] * delta[par.var]);
  }

  std::vector<Jet> out;
  out.reserve(polys.size());
  for (const auto& p : polys) {
    const Jet poly = p.with_layout(source);
    std::vector<double> c(target->size(), 0.0);
    auto pc = poly.coefficients();
    for (std::size_t i = 0; i < n; ++i) {
      if (pc[i] == 0.0) continue;
      auto pw = powers[i].coefficients();
      for (std::size_t j = 0; j < c.size(); ++j) c[j] += pc[i] * pw[j];
    }
    // The constant term passes through untouched (delta has none).
    c[0] = pc[0];
    out.push_back(Jet::from_coefficients(target, std::move(c)));
  }
  return out;
}

}  // namespace liekit
