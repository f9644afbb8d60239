#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "flr/evaluate.hpp"
#include "flr/formula.hpp"
#include "flr/ilr.hpp"

namespace flr {

struct AdamParams {
    double lr = 0.01;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    int iterations = 1000;
};

/// Sigmoid-parameterised surrogate for the refinement problem:
///   L(z) = (f(sigma(z)) - target)^2 + beta * ||sigma(z) - t0||_p.
/// Under the Lukasiewicz config the root conjunction drops its max clamp in
/// the first term; under the product config the first term compares clause
/// log-values against log(target).
struct SurrogateLoss {
    LogicConfig config;
    FormulaPtr formula;
    std::vector<double> t0;
    double target = 1.0;
    double beta = 0.1;
    Norm reg_norm = Norm::L1;
};

struct SurrogateEval {
    double value = 0.0;
    std::vector<double> grad;
};

SurrogateEval surrogate_value_and_grad(const SurrogateLoss& loss, std::span<const double> z);

/// ADAM on the surrogate, starting from z = logit(clamp(t0)). The trajectory
/// reports the true satisfaction f(sigma(z)) under the configured logic (in
/// linear space for the product config) and the L1 distance to t0.
IlrResult adam_minimize(const SurrogateLoss& loss, const AdamParams& params, std::uint64_t seed);

}  // namespace flr
