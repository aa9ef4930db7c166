#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cbr/linear.hpp"

namespace cbr {

enum class LpStatus { Optimal, Unbounded, Infeasible };
enum class Sense { Minimize, Maximize };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;                  // meaningful only when Optimal
  std::map<Var, Rational> point;   // an attaining point, when Optimal
};

/// Exact two-phase primal simplex over the rationals with Bland's rule.
/// Variables are free (internally split into nonnegative pairs); constraints
/// are the >=0 / =0 forms of LinearConstraint.
LpResult simplex_optimize(const std::vector<LinearConstraint>& constraints,
                          const LinearExpression& objective, Sense sense);

/// True iff the constraint system has no rational solution (phase 1 only).
bool lp_infeasible(const std::vector<LinearConstraint>& constraints);

/// Number of simplex solves performed by this thread; used for solver
/// statistics. Monotonically increasing.
std::uint64_t simplex_call_count();

}  // namespace cbr
