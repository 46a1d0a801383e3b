#pragma once

#include <string>
#include <vector>

#include "liekit/geometry/manifold.hpp"

namespace liekit {

struct DiffWitness {
  Vector sample;
  bool found = false;
  std::string src_chart;  // empty when no chart pair could even be probed
  std::string dst_chart;
  SmoothnessReport report;  // of the witness, or of the first attempt when none passed
};

struct DiffReport {
  std::vector<DiffWitness> records;
  bool passed = true;

  double max_residual() const;
  std::size_t failures() const;
};

/// Smoothness of F between manifolds in the chart sense: at every carrier
/// sample x of src, some chart pair (c1, c2) with x in domain c1 and F(x) in
/// domain c2 has c2 o F o c1^-1 passing the probe at c1(x). Pairs are tried in
/// declaration order and the first passing one is recorded.
DiffReport diff_check(const Manifold& src, const Manifold& dst, const RealMap& f, const ProbeOptions& options = {});

struct DiffeomorphismReport {
  DiffReport forward;
  DiffReport backward;
  double inverse_residual = 0.0;  // max over carrier samples of both round trips
  bool passed = false;
};

inline constexpr double kInverseTol = 1e-8;

DiffeomorphismReport diffeomorphism_check(const Manifold& m1, const Manifold& m2, const RealMap& f,
                                          const RealMap& f_inv, const ProbeOptions& options = {});

}  // namespace liekit
