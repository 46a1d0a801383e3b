#include "liekit/lie/lie_algebra.hpp"

#include <Eigen/Dense>
#include <algorithm>

#include "liekit/calculus/battery.hpp"

namespace liekit {

namespace {

constexpr double kA = 1.5;
constexpr double kB = -0.75;

void raise(double& worst, double r) {
  if (!(r <= worst)) worst = r;
}

void require_common_manifold(const std::vector<VectorField>& xs, const char* what) {
  require(!xs.empty(), std::string(what) + ": no elements");
  for (const auto& x : xs)
    require(x.manifold().same_as(xs.front().manifold()), std::string(what) + ": fields live on different manifolds");
}

}  // namespace

LieAlgebraReport lie_algebra_check(const std::vector<VectorField>& xs, const BracketFn& bracket, double tol) {
  require_common_manifold(xs, "lie_algebra_check");
  LieAlgebraReport r;
  const std::size_t n = xs.size();
  const VectorField zero = VectorField::zero(xs.front().manifold());

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const VectorField combo = kA * xs[i] + kB * xs[j];
      for (std::size_t k = 0; k < n; ++k) {
        raise(r.bilinearity, field_distance(bracket(combo, xs[k]),
                                            kA * bracket(xs[i], xs[k]) + kB * bracket(xs[j], xs[k])));
        raise(r.bilinearity, field_distance(bracket(xs[k], combo),
                                            kA * bracket(xs[k], xs[i]) + kB * bracket(xs[k], xs[j])));
      }
    }

  for (const auto& x : xs) raise(r.alternating, field_distance(bracket(x, x), zero));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        const VectorField sum = bracket(xs[i], bracket(xs[j], xs[k])) + bracket(xs[j], bracket(xs[k], xs[i])) +
                                bracket(xs[k], bracket(xs[i], xs[j]));
        raise(r.jacobi, field_distance(sum, zero));
      }

  r.bilinear = r.bilinearity <= tol;
  r.alternates = r.alternating <= tol;
  r.jacobi_holds = r.jacobi <= tol;
  r.passed = r.bilinear && r.alternates && r.jacobi_holds;
  return r;
}

namespace {

Eigen::VectorXd stacked(const VectorField& x) {
  const auto& samples = x.manifold().carrier_samples();
  const std::size_t e = x.manifold().dim();
  Eigen::VectorXd out(static_cast<Eigen::Index>(samples.size() * e));
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const Vector c = vf_apply(x, samples[s]).comps();
    for (std::size_t r = 0; r < e; ++r) out(static_cast<Eigen::Index>(s * e + r)) = c[r];
  }
  return out;
}

}  // namespace

SubalgebraReport lie_subalgebra_check(const std::vector<VectorField>& sub, const std::vector<VectorField>& ambient,
                                      const BracketFn& bracket, double tol) {
  require_common_manifold(sub, "lie_subalgebra_check");
  for (const auto& y : ambient)
    require(y.manifold().same_as(sub.front().manifold()), "lie_subalgebra_check: ambient fields on another manifold");
  const std::size_t k = sub.size();

  std::vector<Eigen::VectorXd> columns;
  for (const auto& x : sub) columns.push_back(stacked(x));
  Eigen::MatrixXd a(columns.front().size(), static_cast<Eigen::Index>(k));
  for (std::size_t l = 0; l < k; ++l) a.col(static_cast<Eigen::Index>(l)) = columns[l];

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  qr.setThreshold(kRankTol);
  if (qr.rank() < static_cast<Eigen::Index>(k))
    throw InconclusiveSpan("lie_subalgebra_check: sample matrix has rank " + std::to_string(qr.rank()) + " < " +
                           std::to_string(k));

  auto fit = [&](const Eigen::VectorXd& b, Vector* coeffs) {
    const Eigen::VectorXd c = qr.solve(b);
    if (coeffs) coeffs->assign(c.data(), c.data() + c.size());
    return (a * c - b).cwiseAbs().maxCoeff();
  };

  SubalgebraReport r;
  r.coefficients.assign(k, std::vector<Vector>(k, Vector(k, 0.0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      raise(r.span_residual, fit(stacked(bracket(sub[i], sub[j])), &r.coefficients[i][j]));
      for (std::size_t l = 0; l < k; ++l) r.coefficients[j][i][l] = -r.coefficients[i][j][l];
    }
  for (std::size_t i = 0; i < k; ++i) {
    raise(r.closure_residual, fit(stacked(kA * sub[i]), nullptr));
    for (std::size_t j = i + 1; j < k; ++j) raise(r.closure_residual, fit(stacked(sub[i] + kB * sub[j]), nullptr));
  }
  r.passed = r.span_residual <= tol && r.closure_residual <= tol;
  return r;
}

LieAlgebraOf lie_algebra_of(const LieGroup& g, const ProbeOptions& options, const LieAlgebraTolerances& tol,
                            std::size_t n_translations) {
  const Chart& c = g.manifold.chart_at(g.unit);
  const std::size_t e = g.manifold.dim();
  LieAlgebraOf out;
  for (std::size_t i = 0; i < e; ++i) {
    Vector b(e, 0.0);
    b[i] = 1.0;
    out.basis.push_back(left_invariant_extend(g, coordinate_vector(c, g.unit, b)));
  }
  for (const auto& x : out.basis) out.smoothness.push_back(smooth_vf_check(x, options));

  const auto battery = function_battery(g.manifold.ambient_dim());
  const auto translations = sample_group_elements(g, {}, n_translations, options.seed);
  out.invariance.passed = true;
  for (const auto& h : translations) {
    const RealMap lh = left_mult(g, h);
    for (const auto& x : out.basis) {
      const auto r = invariant_under_check(x, lh, battery, tol.invariance);
      raise(out.invariance.max_residual, r.max_residual);
      out.invariance.samples += r.samples;
    }
  }
  out.invariance.passed = out.invariance.max_residual <= tol.invariance;

  out.algebra = lie_algebra_check(out.basis, default_bracket(), tol.algebra);
  out.closure = lie_subalgebra_check(out.basis, out.basis, default_bracket(), tol.span);

  out.passed = out.invariance.passed && out.algebra.passed && out.closure.passed &&
               std::all_of(out.smoothness.begin(), out.smoothness.end(), [](const auto& s) { return s.passed; });
  return out;
}

}  // namespace liekit
