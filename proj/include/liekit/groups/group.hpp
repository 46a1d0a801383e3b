#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "liekit/common.hpp"

namespace liekit {

/// A group given by explicit operations on a carrier: op, unit and inv.
/// Nothing is assumed; group_axioms_check tests the axioms on samples.
template <class T>
struct GroupOn {
  std::function<bool(const T&)> contains;
  std::function<T(const T&, const T&)> op;
  T unit;
  std::function<T(const T&)> inv;
  /// Distance used for every equality test.
  std::function<double(const T&, const T&)> distance;

  T sub(const T& a, const T& b) const { return op(a, inv(b)); }
};

/// The same data without an inverse operator; inverses must be found.
template <class T>
struct GrpOn {
  std::function<bool(const T&)> contains;
  std::function<T(const T&, const T&)> op;
  T unit;
  std::function<double(const T&, const T&)> distance;
};

struct GroupAxiomsReport {
  std::size_t elements = 0;
  bool closure = true;
  bool associativity = true;
  bool identity = true;
  bool unit_member = true;
  bool inverse = true;
  double max_residual = 0.0;
  /// First failing axiom and the indices of the elements involved.
  std::string failed_axiom;
  std::vector<std::size_t> counterexample;
  /// Per element, the index of its inverse witness among the candidates
  /// (existence-style check only).
  std::vector<std::optional<std::size_t>> inverse_witness;
  bool passed = true;
};

namespace detail {

inline void record(GroupAxiomsReport& r, bool& flag, const char* axiom, double residual, double tol,
                   std::vector<std::size_t> where) {
  if (!(residual <= r.max_residual)) r.max_residual = residual;
  if (residual <= tol) return;
  flag = false;
  if (r.failed_axiom.empty()) {
    r.failed_axiom = axiom;
    r.counterexample = std::move(where);
  }
}

template <class T, class G>
void common_axioms(const G& g, const std::vector<T>& xs, double tol, GroupAxiomsReport& r) {
  const std::size_t n = xs.size();
  r.elements = n;
  if (!g.contains(g.unit)) {
    r.unit_member = false;
    if (r.failed_axiom.empty()) r.failed_axiom = "unit membership";
  }
  std::vector<std::vector<T>> prod(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      prod[i].push_back(g.op(xs[i], xs[j]));
      if (!g.contains(prod[i][j])) {
        r.closure = false;
        if (r.failed_axiom.empty()) {
          r.failed_axiom = "closure";
          r.counterexample = {i, j};
        }
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        record(r, r.associativity, "associativity", g.distance(g.op(prod[i][j], xs[k]), g.op(xs[i], prod[j][k])), tol,
               {i, j, k});
  for (std::size_t i = 0; i < n; ++i) {
    record(r, r.identity, "identity", g.distance(g.op(g.unit, xs[i]), xs[i]), tol, {i});
    record(r, r.identity, "identity", g.distance(g.op(xs[i], g.unit), xs[i]), tol, {i});
  }
}

}  // namespace detail

/// Closure, associativity, two-sided identity, unit membership and
/// x inv(x) = inv(x) x = unit on the given elements, all within tol.
template <class T>
GroupAxiomsReport group_axioms_check(const GroupOn<T>& g, const std::vector<T>& xs, double tol) {
  GroupAxiomsReport r;
  detail::common_axioms(g, xs, tol, r);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const T y = g.inv(xs[i]);
    if (!g.contains(y)) {
      r.inverse = false;
      if (r.failed_axiom.empty()) {
        r.failed_axiom = "inverse membership";
        r.counterexample = {i};
      }
    }
    detail::record(r, r.inverse, "inverse", g.distance(g.op(xs[i], y), g.unit), tol, {i});
    detail::record(r, r.inverse, "inverse", g.distance(g.op(y, xs[i]), g.unit), tol, {i});
  }
  r.passed = r.closure && r.associativity && r.identity && r.unit_member && r.inverse;
  return r;
}

/// Existence form: the same axioms, with each element's inverse searched for
/// among `candidates` (members of the carrier only).
template <class T>
GroupAxiomsReport grp_on_check(const GrpOn<T>& g, const std::vector<T>& xs, const std::vector<T>& candidates,
                               double tol) {
  GroupAxiomsReport r;
  detail::common_axioms(g, xs, tol, r);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::optional<std::size_t> found;
    for (std::size_t c = 0; c < candidates.size() && !found; ++c) {
      if (!g.contains(candidates[c])) continue;
      const double d = std::max(g.distance(g.op(xs[i], candidates[c]), g.unit),
                                g.distance(g.op(candidates[c], xs[i]), g.unit));
      if (d <= tol) found = c;
    }
    r.inverse_witness.push_back(found);
    if (!found) {
      r.inverse = false;
      if (r.failed_axiom.empty()) {
        r.failed_axiom = "inverse existence";
        r.counterexample = {i};
      }
    }
  }
  r.passed = r.closure && r.associativity && r.identity && r.unit_member && r.inverse;
  return r;
}

template <class T>
GrpOn<T> forget_inverse(const GroupOn<T>& g) {
  return {g.contains, g.op, g.unit, g.distance};
}

/// Turns witnessed inverses into an explicit inverse operator. inv(x) looks x
/// up among `xs` (within tol) and returns its witness; other inputs are a
/// contract violation, since nothing is known about them.
template <class T>
GroupOn<T> group_on_with(const GrpOn<T>& g, const std::vector<T>& xs, const std::vector<T>& candidates,
                         const GroupAxiomsReport& witnessed, double tol) {
  require(witnessed.inverse_witness.size() == xs.size(), "group_on_with: the report does not belong to these elements");
  std::vector<std::pair<T, T>> table;
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (witnessed.inverse_witness[i]) table.emplace_back(xs[i], candidates[*witnessed.inverse_witness[i]]);
  auto distance = g.distance;
  auto unit = g.unit;
  std::function<T(const T&)> inv = [table, distance, unit, tol](const T& x) -> T {
    if (distance(x, unit) <= tol) return unit;
    for (const auto& [a, b] : table)
      if (distance(x, a) <= tol) return b;
    throw ContractViolation("group_on_with: no inverse witness for this element");
  };
  return {g.contains, g.op, g.unit, std::move(inv), g.distance};
}

}  // namespace liekit
