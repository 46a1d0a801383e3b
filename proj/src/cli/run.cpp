#include "liekit/cli/run.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <limits>

#include "liekit/calculus/battery.hpp"
#include "liekit/cli/polynomial.hpp"
#include "liekit/lie/lie_algebra.hpp"
#include "liekit/models/fields.hpp"
#include "liekit/models/matrix.hpp"

namespace liekit {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr std::size_t kMaxEuclideanDim = 6;
constexpr std::size_t kMaxGlDim = 3;
constexpr double kCodomainRoundTrip = 1e-9;

void raise(double& worst, double r) {
  if (!(r <= worst)) worst = r;
}

std::size_t parse_dim(std::string_view text, std::size_t max, const std::string& model) {
  std::size_t n = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), n);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || n == 0 || n > max)
    throw UsageError("model '" + model + "': dimension must be an integer in [1, " + std::to_string(max) + "]");
  return n;
}

// ---------------------------------------------------------------------------
// Model files

const ordered_json& field(const ordered_json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing '" + key + "'");
  return j.at(key);
}

Vector numbers(const ordered_json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of numbers");
  Vector out;
  for (const auto& v : j) {
    if (!v.is_number()) throw ParseError(where + ": expected an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::string joined(const ordered_json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError(where + ": expected a non-empty array of expressions");
  std::string out;
  for (const auto& v : j) {
    if (!v.is_string()) throw ParseError(where + ": expected a non-empty array of expressions");
    if (!out.empty()) out += ',';
    out += v.get<std::string>();
  }
  return out;
}

Region domain_region(const ordered_json& j, const RunConfig& config, const std::string& where) {
  if (j.contains("box")) {
    const auto& box = j.at("box");
    Vector lo = numbers(field(box, "lo", where + ".box"), where + ".box.lo");
    Vector hi = numbers(field(box, "hi", where + ".box"), where + ".box.hi");
    if (lo.empty() || lo.size() != hi.size()) throw ParseError(where + ".box: lo and hi must have one common size");
    for (std::size_t i = 0; i < lo.size(); ++i)
      if (!(lo[i] < hi[i])) throw ParseError(where + ".box: lo must be below hi");
    return Region::box(std::move(lo), std::move(hi), config.samples, config.seed, where);
  }
  if (j.contains("ball")) {
    const auto& ball = j.at("ball");
    Vector c = numbers(field(ball, "center", where + ".ball"), where + ".ball.center");
    const auto& r = field(ball, "radius", where + ".ball");
    if (c.empty() || !r.is_number() || !(r.get<double>() > 0.0))
      throw ParseError(where + ".ball: needs a centre and a positive radius");
    return Region::ball(std::move(c), r.get<double>(), config.samples, config.seed, where);
  }
  throw ParseError(where + ": domain must be a 'box' or a 'ball'");
}

Chart chart_from_json(const ordered_json& j, const RunConfig& config, std::size_t index) {
  const std::string where = "charts[" + std::to_string(index) + "]";
  const auto& id_json = field(j, "id", where);
  if (!id_json.is_string()) throw ParseError(where + ".id: expected a string");
  const std::string id = id_json.get<std::string>();
  Region dom = domain_region(field(j, "domain", where), config, where + ".domain");
  const std::size_t a = dom.dim();
  const auto& fwd_json = field(j, "forward", where);
  const std::size_t e = fwd_json.is_array() ? fwd_json.size() : 0;
  RealMap fwd = parse_polynomial_map(joined(fwd_json, where + ".forward"), a, e, id);
  RealMap inv = parse_polynomial_map(joined(field(j, "inverse", where), where + ".inverse"), e, a, id + "^-1");

  std::vector<Vector> images;
  for (const auto& s : dom.samples()) images.push_back(fwd(s.point));
  Region::Predicate in_codomain = [dom, fwd, inv](Point y) {
    const Vector x = inv(y);
    for (double v : x)
      if (!std::isfinite(v)) return false;
    return dom.contains(x) && max_abs_diff(fwd(x), y) <= kCodomainRoundTrip * (1.0 + max_abs(y));
  };
  Region cod = Region::from_predicate(e, in_codomain, images, std::nullopt, where + ".codomain");
  try {
    return Chart(id, std::move(dom), std::move(cod), std::move(fwd), std::move(inv));
  } catch (const ContractViolation& err) {
    throw UsageError(where + ": " + err.what());
  }
}

ModelSpec model_from_file(const std::string& path, const RunConfig& config) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read model file '" + path + "'");
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::exception& err) {
    throw ParseError("model file '" + path + "': " + err.what());
  }
  ModelSpec spec;
  spec.name = "file:" + path;
  const auto& charts = field(doc, "charts", path);
  if (!charts.is_array() || charts.empty()) throw ParseError(path + ": 'charts' must be a non-empty array");
  for (std::size_t i = 0; i < charts.size(); ++i) spec.charts.push_back(chart_from_json(charts[i], config, i));
  const std::size_t a = spec.charts.front().ambient_dim();
  for (const auto& c : spec.charts)
    if (c.ambient_dim() != a || c.dim() != spec.charts.front().dim())
      throw UsageError(path + ": charts disagree on dimensions");
  if (doc.contains("group")) {
    const auto& g = doc.at("group");
    Vector unit = numbers(field(g, "unit", "group"), "group.unit");
    if (unit.size() != a) throw ParseError("group.unit: expected " + std::to_string(a) + " coordinates");
    spec.group = GroupSpec{parse_polynomial_map(joined(field(g, "times", "group"), "group.times"), 2 * a, a, "times"),
                           std::move(unit),
                           parse_polynomial_map(joined(field(g, "inverse", "group"), "group.inverse"), a, a, "inv")};
  }
  return spec;
}

}  // namespace

void validate_config(const RunConfig& config) {
  if (config.order < 1 || config.order > 4) throw UsageError("order must be in [1, 4]");
  if (config.samples < 1) throw UsageError("samples must be at least 1");
  if (config.tol && !(*config.tol > 0.0 && std::isfinite(*config.tol))) throw UsageError("tol must be positive");
  if (config.format != "text" && config.format != "json") throw UsageError("format must be 'text' or 'json'");
}

std::optional<std::uint64_t> parse_seed(const char* text) {
  if (!text || !*text) return std::nullopt;
  const std::string_view s(text);
  std::uint64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw UsageError(std::string(kSeedEnv) + ": '" + std::string(s) + "' is not a non-negative integer");
  return v;
}

ModelSpec load_model(const RunConfig& config) {
  const std::string& name = config.model;
  const auto colon = name.find(':');
  if (colon == std::string::npos) throw UsageError("unknown model '" + name + "' (use euclidean:n, gl:n or file:path)");
  const std::string kind = name.substr(0, colon);
  const std::string_view arg = std::string_view(name).substr(colon + 1);

  if (kind == "euclidean") {
    const std::size_t n = parse_dim(arg, kMaxEuclideanDim, name);
    ModelSpec spec{name, euclidean_manifold(n, config.samples, config.seed).charts(), std::nullopt, test_diffeos(n)};
    Vector sum(n * 2 * n, 0.0), neg(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      sum[i * 2 * n + i] = sum[i * 2 * n + n + i] = 1.0;
      neg[i * n + i] = -1.0;
    }
    spec.group = GroupSpec{map_affine(2 * n, sum, Vector(n, 0.0)), Vector(n, 0.0), map_affine(n, neg, Vector(n, 0.0))};
    return spec;
  }
  if (kind == "gl") {
    const std::size_t n = parse_dim(arg, kMaxGlDim, name);
    ModelSpec spec{name, gl_manifold(n, config.samples, config.seed).charts(), std::nullopt, {}};
    spec.group = GroupSpec{matmul_map(n), SquareMatrix::identity(n).entries, matrix_inverse_map(n)};
    return spec;
  }
  if (kind == "file") {
    if (arg.empty()) throw UsageError("model 'file:' needs a path");
    return model_from_file(std::string(arg), config);
  }
  throw UsageError("unknown model '" + name + "' (use euclidean:n, gl:n or file:path)");
}

Thresholds Thresholds::from(const RunConfig& config) {
  Thresholds t;
  if (config.tol) {
    const double v = *config.tol;
    t = Thresholds{v, v, v, v, v, v, v, v, v, v};
  }
  return t;
}

// ---------------------------------------------------------------------------
// verify

namespace {

CheckResult make(std::string name, std::string anchor, double residual, std::size_t samples, double threshold,
                 bool extra_ok = true) {
  CheckResult c{std::move(name), std::move(anchor), false, residual, samples, threshold, {}};
  c.passed = extra_ok && residual <= threshold;
  return c;
}

CheckResult skipped(std::string name, std::string anchor, double threshold, std::string why) {
  return CheckResult{std::move(name), std::move(anchor), false, kNan, 0, threshold, std::move(why)};
}

CheckResult from_diff(std::string name, std::string anchor, const DiffReport& r, double threshold) {
  if (r.records.empty()) return skipped(std::move(name), std::move(anchor), threshold, "certificate not issued");
  CheckResult c{std::move(name), std::move(anchor), r.passed, r.max_residual(), r.records.size(), threshold, {}};
  if (!r.passed) c.note = std::to_string(r.failures()) + " samples without a passing chart pair";
  return c;
}

void bracket_suite(const Manifold& m, const Thresholds& th, std::uint64_t seed, VerifyResult& out) {
  Rng rng(seed);
  std::vector<VectorField> xs;
  for (int i = 0; i < 3; ++i) xs.push_back(random_polynomial_field(m, 2, rng, 0.5));
  const ProbeOptions opt{out.config.order, out.config.samples, th.probe, seed};

  {
    double worst = 0.0;
    std::size_t samples = 0;
    bool ok = true;
    for (const auto& x : xs) {
      const auto r = smooth_vf_check(x, opt);
      raise(worst, r.bundle.max_fd_residual);
      raise(worst, r.local.max_fd_residual);
      samples += r.bundle.samples_checked + r.local.samples_checked;
      ok = ok && r.passed;
    }
    CheckResult c{"vector_field_smoothness", "smooth_vector_field", ok, worst, samples, th.probe, {}};
    out.checks.push_back(c);
  }

  const std::pair<std::size_t, std::size_t> pairs[] = {{0, 1}, {1, 2}, {0, 2}};
  const auto battery = function_battery(m.ambient_dim());
  const auto& carrier = m.carrier_samples();

  double anti = 0.0;
  for (auto [i, j] : pairs) raise(anti, field_distance(lie_bracket(xs[i], xs[j]), -1.0 * lie_bracket(xs[j], xs[i])));
  out.checks.push_back(make("bracket_antisymmetry", "lie_algebra", anti, 3 * carrier.size(), th.antisymmetry));

  double routes = 0.0, leibniz = 0.0;
  for (auto [i, j] : pairs) {
    const VectorField b = lie_bracket(xs[i], xs[j]);
    std::vector<RealMap> actions;
    for (const auto& f : battery) actions.push_back(bracket_action(xs[i], xs[j], f));
    for (const auto& p : carrier) {
      const TangentVector v = vf_apply(b, p);
      Vector applied;
      for (std::size_t k = 0; k < battery.size(); ++k) {
        applied.push_back(tangent_apply(v, battery[k]));
        const double d = actions[k].scalar(p);
        raise(routes, std::abs(applied[k] - d) / (1.0 + std::abs(d)));
      }
      for (std::size_t k = 0; k + 1 < battery.size(); ++k) {
        const RealMap& f = battery[k];
        const RealMap& g = battery[k + 1];
        const double lhs = tangent_apply(v, map_mul(f, g));
        const double rhs = f.scalar(p) * applied[k + 1] + g.scalar(p) * applied[k];
        raise(leibniz, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
      }
    }
  }
  out.checks.push_back(make("bracket_route_agreement", "lie_bracket_def", routes, 3 * carrier.size(), th.routes));
  out.checks.push_back(make("bracket_leibniz", "product_rule_lie_bracket", leibniz, 3 * carrier.size(), th.leibniz));

  const VectorField jac = lie_bracket(xs[0], lie_bracket(xs[1], xs[2])) + lie_bracket(xs[1], lie_bracket(xs[2], xs[0])) +
                          lie_bracket(xs[2], lie_bracket(xs[0], xs[1]));
  out.checks.push_back(
      make("bracket_jacobi", "lie_bracket_jacobi", field_distance(jac, VectorField::zero(m)), carrier.size(), th.jacobi));
}

}  // namespace

VerifyResult run_verify(const RunConfig& config) {
  validate_config(config);
  const ModelSpec spec = load_model(config);
  const Thresholds th = Thresholds::from(config);
  const ProbeOptions opt{config.order, config.samples, th.probe, config.seed};
  VerifyResult out{config, {}, std::nullopt, false};
  auto finish = [&out] {
    out.passed = std::all_of(out.checks.begin(), out.checks.end(), [](const CheckResult& c) { return c.passed; });
    return out;
  };

  // Compatibility is probed here rather than in Manifold::create so that a
  // failing atlas still gets the remaining suites listed.
  const Manifold m = Manifold::unchecked(spec.charts, opt);
  {
    double worst = 0.0;
    std::size_t samples = 0;
    bool ok = true;
    std::string note;
    for (std::size_t i = 0; i < m.charts().size(); ++i)
      for (std::size_t j = i; j < m.charts().size(); ++j) {
        try {
          const SmoothnessReport r = smooth_compat(m.charts()[i], m.charts()[j], opt);
          raise(worst, r.max_fd_residual);
          samples += r.samples_checked;
          if (!r.passed && note.empty()) note = m.charts()[i].id() + " vs " + m.charts()[j].id();
          ok = ok && r.passed;
        } catch (const DegenerateRegion& e) {
          ok = false;
          if (note.empty()) note = e.what();
        }
      }
    CheckResult c = make("atlas_compatibility", "smooth_compat", worst, samples, th.probe, ok);
    c.note = note;
    out.checks.push_back(c);
  }

  std::optional<LieGroup> group;
  if (spec.group) {
    const GroupSpec& gs = *spec.group;
    const auto axioms =
        group_axioms_check(point_group(m, gs.times, gs.unit, gs.inverse), m.carrier_samples(), th.axioms);
    CheckResult ax = make("group_axioms", "grp_on", axioms.max_residual, axioms.elements, th.axioms, axioms.passed);
    if (!axioms.passed) ax.note = "first failure: " + axioms.failed_axiom;
    out.checks.push_back(ax);

    DiffReport mult, inv;
    try {
      group = lie_group_new(m, gs.times, gs.unit, gs.inverse, opt);
      mult = group->mult_certificate;
      inv = group->inv_certificate;
    } catch (const NotALieGroup& e) {
      mult = e.mult_certificate();
      inv = e.inv_certificate();
    }
    out.checks.push_back(from_diff("lie_group_multiplication", "smooth_mult", mult, th.probe));
    out.checks.push_back(from_diff("lie_group_inversion", "smooth_inv", inv, th.probe));

    if (group) {
      const auto elements = sample_group_elements(*group, {}, 3, config.seed);
      const ActionReport ar = action_check(*group, m, left_action_of(*group), elements, opt, th.action);
      const double unit_gap = pmap_distance(m, left_action(*group, group->unit), pmap_id_on(m.carrier_region()));
      CheckResult hom = make("left_action_homomorphism", "left_action", std::max(ar.homomorphism_residual, unit_gap),
                             elements.size(), th.action, ar.automorphisms && ar.homomorphism);
      if (!ar.problems.empty()) hom.note = ar.problems.front();
      out.checks.push_back(hom);
      out.checks.push_back(from_diff("left_action_smoothness", "lie_group_action", ar.joint, th.probe));
    } else {
      out.checks.push_back(skipped("left_action_homomorphism", "left_action", th.action, "no Lie group"));
      out.checks.push_back(skipped("left_action_smoothness", "lie_group_action", th.probe, "no Lie group"));
    }
  }

  {
    std::vector<DiffElement> elements;
    if (spec.fixtures.empty()) {
      const Region carrier = m.carrier_region();
      elements.push_back(DiffElement{pmap_id_on(carrier), pmap_id_on(carrier), "id"});
    }
    for (const auto& f : spec.fixtures) elements.push_back(diff_element(m, f.map, f.inverse, f.name));
    if (group) {
      Rng rng(config.seed + 1);
      const auto& carrier = m.carrier_samples();
      for (int i = 0; i < 2; ++i) {
        const Vector& h = carrier[rng.index(carrier.size())];
        elements.push_back(diff_element(m, left_mult(*group, h), left_mult(*group, group->group.inv(h)), "L"));
      }
    }
    const auto r = group_axioms_check(diff_group(m, opt), elements, th.diff_group);
    CheckResult c = make("diff_group", "Diff_grp", r.max_residual, elements.size(), th.diff_group, r.passed);
    if (!r.passed) c.note = "first failure: " + r.failed_axiom;
    out.checks.push_back(c);
  }

  bracket_suite(m, th, config.seed, out);

  if (spec.group) {
    if (group) {
      try {
        const LieAlgebraOf alg = lie_algebra_of(*group, opt, {th.invariance, th.jacobi, th.span});
        out.checks.push_back(make("left_invariance", "vector_field_invariant_under", alg.invariance.max_residual,
                                  alg.invariance.samples, th.invariance));
        double worst = 0.0;
        for (double r : {alg.algebra.bilinearity, alg.algebra.alternating, alg.algebra.jacobi,
                         alg.closure.span_residual, alg.closure.closure_residual})
          raise(worst, r);
        CheckResult c = make("lie_algebra_of_group", "lie_algebra_of_left_invariant_svf", worst, alg.basis.size(),
                             std::max(th.jacobi, th.span), alg.passed);
        if (!alg.passed) {
          for (const auto& s : alg.smoothness)
            if (!s.passed) c.note = "a left-invariant basis field failed the smoothness probe";
          if (!alg.invariance.passed) c.note = "basis is not left invariant";
        }
        out.checks.push_back(c);
        out.structure_constants = alg.closure.coefficients;
      } catch (const InconclusiveSpan& e) {
        out.checks.push_back(skipped("left_invariance", "vector_field_invariant_under", th.invariance, e.what()));
        out.checks.push_back(skipped("lie_algebra_of_group", "lie_algebra_of_left_invariant_svf", th.span, e.what()));
      }
    } else {
      out.checks.push_back(skipped("left_invariance", "vector_field_invariant_under", th.invariance, "no Lie group"));
      out.checks.push_back(skipped("lie_algebra_of_group", "lie_algebra_of_left_invariant_svf", th.span, "no Lie group"));
    }
  }
  return finish();
}

// ---------------------------------------------------------------------------
// rendering

namespace {

std::string sci(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.3e}", v);
}

ordered_json number(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

ordered_json numbers_json(const Vector& v) {
  ordered_json out = ordered_json::array();
  for (double x : v) out.push_back(number(x));
  return out;
}

ordered_json config_json(const RunConfig& c) {
  ordered_json j;
  j["model"] = c.model;
  j["order"] = c.order;
  j["samples"] = c.samples;
  j["tol"] = c.tol ? ordered_json(*c.tol) : ordered_json(nullptr);
  j["seed"] = c.seed;
  return j;
}

// Fixed-point with tiny values shown as 0 so the text report stays readable.
std::string fixed(double v) {
  if (std::abs(v) < 5e-7) v = 0.0;
  return fmt::format("{:.6f}", v);
}

}  // namespace

std::string render_text(const VerifyResult& r) {
  std::string out = fmt::format("liekit verify  model={}  order={}  samples={}  seed={}  tol={}\n", r.config.model,
                                r.config.order, r.config.samples, r.config.seed,
                                r.config.tol ? sci(*r.config.tol) : std::string("default"));
  out += fmt::format("{:<28} {:<6} {:>12} {:>12} {:>8}\n", "check", "status", "max_residual", "threshold", "samples");
  for (const auto& c : r.checks) {
    out += fmt::format("{:<28} {:<6} {:>12} {:>12} {:>8}", c.name, c.passed ? "PASS" : "FAIL", sci(c.max_residual),
                       sci(c.threshold), c.samples);
    if (!c.note.empty()) out += "  (" + c.note + ")";
    out += '\n';
  }
  if (r.structure_constants) {
    const auto& sc = *r.structure_constants;
    out += "structure constants [X_i, X_j] = sum_k c_ij^k X_k:\n";
    for (std::size_t i = 0; i < sc.size(); ++i)
      for (std::size_t j = i + 1; j < sc.size(); ++j) {
        out += fmt::format("  [X{},X{}] =", i, j);
        for (double v : sc[i][j]) out += " " + fixed(v);
        out += '\n';
      }
  }
  out += fmt::format("result: {}\n", r.passed ? "PASS" : "FAIL");
  return out;
}

std::string render_json(const VerifyResult& r) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = "verify";
  j["config"] = config_json(r.config);
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["max_residual"] = number(c.max_residual);
    e["samples"] = c.samples;
    e["threshold"] = number(c.threshold);
    e["paper_anchor"] = c.anchor;
    if (!c.note.empty()) e["note"] = c.note;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  if (r.structure_constants) {
    ordered_json sc = ordered_json::array();
    for (const auto& row : *r.structure_constants) {
      ordered_json jr = ordered_json::array();
      for (const auto& v : row) jr.push_back(numbers_json(v));
      sc.push_back(std::move(jr));
    }
    j["structure_constants"] = std::move(sc);
  } else {
    j["structure_constants"] = nullptr;
  }
  j["passed"] = r.passed;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// bracket

BracketResult run_bracket(const RunConfig& config, std::string_view field_x, std::string_view field_y,
                          std::string_view point) {
  validate_config(config);
  const ModelSpec spec = load_model(config);
  const Thresholds th = Thresholds::from(config);
  const ProbeOptions opt{config.order, config.samples, th.probe, config.seed};
  const Manifold m = Manifold::unchecked(spec.charts, opt);
  const std::size_t a = m.ambient_dim();

  const VectorField x = VectorField::from_ambient(m, parse_polynomial_map(field_x, a, a), "X");
  const VectorField y = VectorField::from_ambient(m, parse_polynomial_map(field_y, a, a), "Y");
  const Vector p = parse_point(point);
  if (p.size() != a) throw UsageError("point needs " + std::to_string(a) + " coordinates");
  if (!m.contains(p)) throw OutOfDomain("point " + format_point(p) + " is outside the carrier of " + spec.name);

  BracketResult r;
  r.model = spec.name;
  r.point = p;
  r.coordinate = vf_apply(lie_bracket(x, y), p).comps();
  const Chart& c = m.chart_at(p);
  for (std::size_t i = 0; i < c.dim(); ++i) r.derivation.push_back(bracket_action(x, y, coordinate_function(c, p, i)).scalar(p));
  r.discrepancy = max_abs_diff(r.coordinate, r.derivation);
  r.threshold = th.routes;
  r.passed = r.discrepancy <= r.threshold;
  return r;
}

std::string render_text(const BracketResult& r) {
  auto vec = [](const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt::format("{:.12g}", v[i] + 0.0);
    return s + ")";
  };
  std::string out = fmt::format("model       {}\npoint       {}\n", r.model, vec(r.point));
  out += fmt::format("coordinate  {}\nderivation  {}\n", vec(r.coordinate), vec(r.derivation));
  out += fmt::format("discrepancy {} (threshold {}) {}\n", sci(r.discrepancy), sci(r.threshold), r.passed ? "PASS" : "FAIL");
  return out;
}

std::string render_json(const BracketResult& r) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = "bracket";
  j["model"] = r.model;
  j["point"] = numbers_json(r.point);
  j["coordinate"] = numbers_json(r.coordinate);
  j["derivation"] = numbers_json(r.derivation);
  j["discrepancy"] = number(r.discrepancy);
  j["threshold"] = number(r.threshold);
  j["passed"] = r.passed;
  return j.dump(2) + "\n";
}

}  // namespace liekit
