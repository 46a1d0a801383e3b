#pragma once

#include <functional>
#include <string>
#include <vector>

#include "liekit/field/vector_field.hpp"
#include "liekit/groups/diff_group.hpp"

namespace liekit {

/// Tolerance for the group axioms checked before certificates are issued.
inline constexpr double kGroupAxiomTol = 1e-9;

/// A smooth manifold with a group structure whose multiplication (on the
/// product manifold) and inversion passed diff_check.
struct LieGroup {
  Manifold manifold;
  Manifold product;  // prod_charts(manifold, manifold)
  RealMap times;     // R^(2a) -> R^a
  RealMap inverse;   // R^a -> R^a
  Vector unit;
  GroupOn<Vector> group;
  GroupAxiomsReport axioms;
  DiffReport mult_certificate;
  DiffReport inv_certificate;
};

class NotALieGroup : public Error {
 public:
  NotALieGroup(const std::string& what, GroupAxiomsReport axioms, DiffReport mult, DiffReport inv);
  const GroupAxiomsReport& axioms() const { return axioms_; }
  const DiffReport& mult_certificate() const { return mult_; }
  const DiffReport& inv_certificate() const { return inv_; }

 private:
  GroupAxiomsReport axioms_;
  DiffReport mult_;
  DiffReport inv_;
};

/// The group structure on carrier points given by `times` and `inverse`.
GroupOn<Vector> point_group(const Manifold& m, const RealMap& times, Vector unit, const RealMap& inverse);

/// Checks the group axioms on the carrier samples, then issues the
/// multiplication and inversion certificates. Throws NotALieGroup when any of
/// them fails.
LieGroup lie_group_new(const Manifold& m, const RealMap& times, Vector unit, const RealMap& inverse,
                       const ProbeOptions& options = {});

/// y -> g y. Throws OutOfDomain when g is outside the carrier.
RealMap left_mult(const LieGroup& g, Point element);
/// diff_check(M, M, left_mult(g)).
DiffReport left_mult_certificate(const LieGroup& g, Point element, const ProbeOptions& options = {});
/// left_mult restricted to the carrier.
PartialMap left_action(const LieGroup& g, Point element);

/// Unit, the generators, products of two generators, and `n_random` seeded
/// carrier samples.
std::vector<Vector> sample_group_elements(const LieGroup& g, const std::vector<Vector>& generators,
                                          std::size_t n_random = 8, std::uint64_t seed = 0);

/// A group acting on a manifold: rho(g) as a partial map, and the joint map
/// (g, m) -> rho(g)(m) on the product ambient space.
struct GroupAction {
  std::function<PartialMap(const Vector&)> rho;
  RealMap joint;
};

/// The left action of G on itself.
GroupAction left_action_of(const LieGroup& g);

inline constexpr double kActionHomTol = 1e-8;

struct ActionReport {
  bool automorphisms = true;  // every rho(g) passes automorphism_check
  double homomorphism_residual = 0.0;
  bool homomorphism = true;
  DiffReport joint;  // diff_check on prod_charts(G, M2)
  std::vector<std::string> problems;
  bool passed = false;
};

ActionReport action_check(const LieGroup& g, const Manifold& m2, const GroupAction& action,
                          const std::vector<Vector>& elements, const ProbeOptions& options = {},
                          double hom_tol = kActionHomTol);

struct InvarianceReport {
  double max_residual = 0.0;
  std::size_t samples = 0;
  bool passed = false;
};

/// Compares X at F(p) with the push-forward of X_p under F, acting on the
/// battery, at the carrier samples. Residuals are scaled by 1 + |X_{F(p)} f|.
InvarianceReport invariant_under_check(const VectorField& x, const RealMap& f, const std::vector<RealMap>& battery,
                                       double tol);

/// The left-invariant field with value v at the unit: X(g) = d(L_g)(v).
/// Throws ContractViolation when v is not based at the unit.
VectorField left_invariant_extend(const LieGroup& g, const TangentVector& v);

}  // namespace liekit
