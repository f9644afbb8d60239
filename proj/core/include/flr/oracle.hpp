#pragma once

#include <functional>

#include "flr/refine.hpp"

namespace flr::oracle {

/// Connective under refinement; constants are baked into the callable, which
/// receives only the free values.
using Connective = std::function<double(const std::vector<double>&)>;

/// Exhaustive grid search for the feasible point of smallest norm distance.
/// Candidate coordinates are the grid multiples of `grid_step` plus each
/// original t_i; a point is feasible when |f(w) - target| <= feas_tol
/// (default n * grid_step / 2). Throws if no grid point is feasible.
/// Restricted to n <= 4 and grid_step >= 0.005.
RefinementResult brute_force_refine(const Connective& f, const RefineInput& in, double grid_step,
                                    double feas_tol = -1.0);

}  // namespace flr::oracle
