#pragma once

#include "lapvol/rat.hpp"

#include <span>
#include <vector>

namespace lapvol {

enum class Relation { LessEq, GreaterEq };

/// coeffs . u  (<= | >=)  rhs, over nonnegative variables u.
struct LinearConstraint {
  RatVector coeffs;
  Relation relation = Relation::LessEq;
  Rat rhs{0};
};

struct LpFeasibility {
  bool feasible = false;
  RatVector witness; // satisfies every constraint exactly when feasible
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOptimum {
  LpStatus status = LpStatus::Infeasible;
  RatVector x;
  Rat value{0};
};

/// Phase-1 exact simplex (Bland's rule) over u >= 0. The witness is checked
/// by substitution before it is returned.
LpFeasibility lp_feasible(Eigen::Index num_vars, std::span<const LinearConstraint> constraints);

/// max objective . u subject to the constraints and u >= 0. Two-phase exact
/// simplex with Bland's rule; deterministic.
LpOptimum lp_maximize(const RatVector& objective, std::span<const LinearConstraint> constraints);

/// True iff u satisfies every constraint and u >= 0.
bool satisfies(const RatVector& u, std::span<const LinearConstraint> constraints);

} // namespace lapvol
