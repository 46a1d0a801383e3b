#include "liekit/field/vector_field.hpp"

#include <cmath>

namespace liekit {

VectorField::VectorField(Manifold m, std::vector<RealMap> comps, std::string name)
    : manifold_(std::move(m)), comps_(std::move(comps)), name_(std::move(name)) {
  require(comps_.size() == manifold_.charts().size(), "VectorField: need one component map per chart");
  for (const auto& c : comps_)
    require(c.in_dim() == manifold_.dim() && c.out_dim() == manifold_.dim(),
            "VectorField: component maps must be R^e -> R^e");
}

VectorField VectorField::from_ambient(const Manifold& m, const RealMap& ambient, std::string name) {
  require(ambient.in_dim() == m.ambient_dim() && ambient.out_dim() == m.ambient_dim(),
          "VectorField::from_ambient: expected a map R^a -> R^a");
  std::vector<RealMap> comps;
  for (const auto& c : m.charts()) {
    comps.push_back(RealMap::from_lift(
        c.dim(), c.dim(),
        [c, ambient](std::span<const Jet> u) {
          const auto x = c.inv().lift(u);
          const auto dir = ambient.lift(x);
          return directional_lift(c.fwd(), x, dir);
        },
        ambient.name() + "@" + c.id()));
  }
  return VectorField(m, std::move(comps), name.empty() ? ambient.name() : std::move(name));
}

VectorField VectorField::zero(const Manifold& m) {
  std::vector<RealMap> comps(m.charts().size(), map_constant(m.dim(), Vector(m.dim(), 0.0)));
  return VectorField(m, std::move(comps), "0");
}

const RealMap& VectorField::comps(const std::string& chart_id) const {
  for (std::size_t i = 0; i < comps_.size(); ++i)
    if (manifold_.charts()[i].id() == chart_id) return comps_[i];
  throw ContractViolation("VectorField: no chart with id '" + chart_id + "'");
}

namespace {

void require_same_manifold(const VectorField& a, const VectorField& b, const char* what) {
  if (!a.manifold().same_as(b.manifold()))
    throw ContractViolation(std::string(what) + ": the fields live on different manifolds");
}

}  // namespace

VectorField VectorField::operator+(const VectorField& other) const {
  require_same_manifold(*this, other, "VectorField::operator+");
  std::vector<RealMap> c;
  for (std::size_t i = 0; i < comps_.size(); ++i) c.push_back(map_add(comps_[i], other.comps_[i]));
  return VectorField(manifold_, std::move(c), "(" + name_ + "+" + other.name_ + ")");
}

VectorField VectorField::operator-(const VectorField& other) const {
  require_same_manifold(*this, other, "VectorField::operator-");
  std::vector<RealMap> c;
  for (std::size_t i = 0; i < comps_.size(); ++i) c.push_back(map_sub(comps_[i], other.comps_[i]));
  return VectorField(manifold_, std::move(c), "(" + name_ + "-" + other.name_ + ")");
}

VectorField VectorField::operator*(double s) const {
  std::vector<RealMap> c;
  for (const auto& m : comps_) c.push_back(map_scale(s, m));
  return VectorField(manifold_, std::move(c), std::to_string(s) + name_);
}

TangentVector vf_apply(const VectorField& x, Point p) {
  const auto idx = x.manifold().chart_index_at(p);
  if (!idx) throw OutOfDomain("vf_apply: " + format_point(p) + " is outside the carrier");
  const Chart& c = x.manifold().charts()[*idx];
  return TangentVector(c, Vector(p.begin(), p.end()), x.comps(*idx)(c(p)));
}

std::vector<Jet> field_in_chart(const VectorField& x, const Chart& c, std::span<const Jet> u) {
  const auto q = c.inv().lift(u);
  const Vector qv = values_of(q);
  const auto idx = x.manifold().chart_index_at(qv);
  if (!idx) throw EvaluationError("field_in_chart: " + format_point(qv) + " is outside the carrier");
  const Chart& own = x.manifold().charts()[*idx];
  if (own.id() == c.id()) return x.comps(*idx).lift(u);
  const auto w = own.fwd().lift(q);
  const auto comps = x.comps(*idx).lift(w);
  return directional_lift(map_compose(c.fwd(), own.inv()), w, comps);
}

RealMap vf_sharp(const VectorField& x, const RealMap& f) {
  require(f.out_dim() == 1 && f.in_dim() == x.manifold().ambient_dim(),
          "vf_sharp: expected a scalar function on the ambient space");
  return RealMap::from_lift(
      f.in_dim(), 1,
      [x, f](std::span<const Jet> p) {
        const Vector pv = values_of(p);
        const auto idx = x.manifold().chart_index_at(pv);
        if (!idx) throw EvaluationError("vf_sharp: " + format_point(pv) + " is outside the carrier");
        const Chart& c = x.manifold().charts()[*idx];
        const auto u = c.fwd().lift(p);
        const auto comps = x.comps(*idx).lift(u);
        return directional_lift(map_compose(f, c.inv()), u, comps);
      },
      x.name() + "#" + f.name());
}

VectorField vf_restrict(const VectorField& x, const Region& u) {
  Manifold sub = charts_submanifold(x.manifold(), u);
  std::vector<RealMap> comps;
  for (const auto& c : sub.charts()) comps.push_back(x.comps(c.id()));
  return VectorField(std::move(sub), std::move(comps), x.name() + "|" + u.name());
}

std::vector<std::string> rough_field_check(const VectorField& x) {
  std::vector<std::string> problems;
  for (const auto& p : x.manifold().carrier_samples()) {
    try {
      const TangentVector v = vf_apply(x, p);
      if (v.base() != p) problems.push_back("X_p is not based at " + format_point(p));
      for (double c : v.comps())
        if (!std::isfinite(c)) {
          problems.push_back("non-finite component at " + format_point(p));
          break;
        }
    } catch (const Error& e) {
      problems.push_back(e.what());
    }
  }
  return problems;
}

double transition_consistency(const VectorField& x) {
  double worst = 0.0;
  const auto& charts = x.manifold().charts();
  for (const auto& p : x.manifold().carrier_samples()) {
    const TangentVector v = vf_apply(x, p);
    for (std::size_t j = 0; j < charts.size(); ++j) {
      if (charts[j].id() == v.chart_id() || !charts[j].domain().contains(p)) continue;
      const Vector moved = change_chart(v, charts[j]).comps();
      const Vector own = x.comps(j)(charts[j](p));
      worst = std::max(worst, max_abs_diff(moved, own));
    }
  }
  return worst;
}

namespace {

SmoothnessReport empty_report(const ProbeOptions& options) {
  SmoothnessReport r;
  r.order_probed = options.order;
  r.seed = options.seed;
  return r;
}

}  // namespace

FieldSmoothnessReport smooth_vf_check(const VectorField& x, const ProbeOptions& options) {
  FieldSmoothnessReport out;
  out.bundle = empty_report(options);
  out.local = empty_report(options);
  const Manifold& m = x.manifold();
  const std::size_t e = m.dim();
  for (std::size_t k = 0; k < m.charts().size(); ++k) {
    const Chart& c = m.charts()[k];
    std::vector<Vector> owned;
    std::vector<Vector> covered;
    for (const auto& p : m.carrier_samples()) {
      if (!c.domain().contains(p)) continue;
      covered.push_back(c(p));
      if (m.chart_index_at(p) == k) owned.push_back(c(p));
    }
    if (!owned.empty()) {
      // u -> apply_chart_TM(c, (c^-1 u, X at c^-1 u)), with X read in its own chart
      RealMap section = RealMap::from_lift(
          e, 2 * e,
          [x, c](std::span<const Jet> u) {
            auto out = c.fwd().lift(c.inv().lift(u));
            const auto comps = field_in_chart(x, c, u);
            out.insert(out.end(), comps.begin(), comps.end());
            return out;
          },
          "section");
      out.bundle.merge(smooth_on_probe(c.codomain().with_samples(owned), section, options));
    }
    if (!covered.empty()) out.local.merge(smooth_on_probe(c.codomain().with_samples(covered), x.comps(k), options));
  }
  out.consistent = out.bundle.passed == out.local.passed;
  out.passed = out.consistent && out.bundle.passed && out.local.passed;
  return out;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  require_same_manifold(x, y, "lie_bracket");
  std::vector<RealMap> comps;
  const std::size_t e = x.manifold().dim();
  for (std::size_t k = 0; k < x.all_comps().size(); ++k) {
    const RealMap& xk = x.comps(k);
    const RealMap& yk = y.comps(k);
    comps.push_back(RealMap::from_lift(
        e, e,
        [xk, yk](std::span<const Jet> u) {
          const auto xu = xk.lift(u);
          const auto yu = yk.lift(u);
          auto out = directional_lift(yk, u, xu);
          const auto back = directional_lift(xk, u, yu);
          for (std::size_t i = 0; i < out.size(); ++i) out[i] -= back[i];
          return out;
        },
        "[" + x.name() + "," + y.name() + "]"));
  }
  return VectorField(x.manifold(), std::move(comps), "[" + x.name() + "," + y.name() + "]");
}

RealMap bracket_action(const VectorField& x, const VectorField& y, const RealMap& f) {
  require_same_manifold(x, y, "bracket_action");
  return map_sub(vf_sharp(x, vf_sharp(y, f)), vf_sharp(y, vf_sharp(x, f)));
}

double field_distance(const VectorField& a, const VectorField& b) {
  require_same_manifold(a, b, "field_distance");
  double worst = 0.0;
  for (const auto& p : a.manifold().carrier_samples()) {
    const double d = max_abs_diff(vf_apply(a, p).comps(), vf_apply(b, p).comps());
    if (!(d <= worst)) worst = d;
  }
  return worst;
}

}  // namespace liekit
