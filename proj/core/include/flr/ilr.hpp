#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "flr/evaluate.hpp"
#include "flr/refine.hpp"

namespace flr {

enum class CombineMode { MaxAbs, Mean };
enum class TieMode { Deterministic, Seeded };

struct IlrParams {
    double alpha = 1.0;  // scheduling parameter in (0, 1]
    int max_iters = 1000;
    double converge_tol = 1e-7;
    int converge_patience = 3;
    CombineMode combine = CombineMode::MaxAbs;
    double eps_impl = 1e-4;  // Godel-implication strictness margin
    TieMode tie_mode = TieMode::Deterministic;
    std::uint64_t tie_seed = 0;
};

struct IlrStep {
    int iteration = 0;
    double satisfaction = 0.0;
    double l1_to_initial = 0.0;
};

struct IlrResult {
    std::vector<double> final;
    std::vector<IlrStep> trajectory;  // iteration 0 is the initial state
    bool converged = false;
    int iterations_used = 0;
};

/// Iterative local refinement on a quantifier-free formula: forward-evaluate,
/// schedule the root target, then recursively apply per-connective minimal
/// refinement functions backward, combining deltas of repeated propositions.
IlrResult ilr_run(const LogicConfig& config, const Formula& formula, std::span<const double> t0, double target,
                  const IlrParams& params);

/// One backward pass over a recorded trace. Returns (proposition, delta)
/// pairs for every proposition leaf reached, in traversal order; deltas are
/// new value minus current value.
std::vector<std::pair<int, double>> ilr_backward(const LogicConfig& config, const EvalTrace& trace,
                                                 double root_target, const IlrParams& params);

/// Collapse per-occurrence deltas into one delta per proposition. MaxAbs
/// keeps the delta of largest magnitude (first encountered wins ties); Mean
/// averages over occurrences.
std::vector<double> combine_deltas(std::span<const std::pair<int, double>> occurrences, int n_props,
                                   CombineMode mode);

/// Reject operator tuples with no known closed-form refinement functions.
void validate_ilr_config(const LogicConfig& config);

}  // namespace flr
