#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "flr/operators.hpp"

namespace flr {

enum class Norm { L1, L2 };

/// A single-connective refinement problem: free truth values `t`, fixed
/// `consts`, and a target output. The target is clamped to the connective's
/// attainable range before solving.
struct RefineInput {
    std::vector<double> t;
    std::vector<double> consts;
    double target = 1.0;
    Norm norm = Norm::L2;
};

struct RefinementResult {
    std::vector<double> refined;
    double achieved = 0.0;  // connective value at `refined` (consts included)
    double distance = 0.0;  // ||refined - t|| in the chosen norm
    bool clamped = false;   // target fell outside the attainable range
    bool flagged = false;   // numeric fallback or degenerate case taken
};

struct ImplicationRefinement {
    double antecedent = 0.0;
    double consequent = 0.0;
    bool clamped = false;
    bool flagged = false;
};

double norm_distance(Norm norm, const std::vector<double>& a, const std::vector<double>& b);

// Ties of argmin/argmax break to the lowest index; pass a generator for the
// optional seeded-random mode.
RefinementResult refine_godel_tnorm(const RefineInput& in, std::mt19937_64* tie_rng = nullptr);
RefinementResult refine_godel_tconorm(const RefineInput& in, std::mt19937_64* tie_rng = nullptr);

/// Targets below 1 need the antecedent strictly above the target; eps is the
/// strict-inequality margin and participates in the distance accounting.
ImplicationRefinement refine_godel_implication(double a, double c, double target, double eps);

RefinementResult refine_luk_tnorm(const RefineInput& in);
RefinementResult refine_luk_tconorm(const RefineInput& in);

/// Strictly decreasing g with g(1) = 0; defines T(x) = g^{-1}(min(g(0+), sum g(x_i))).
struct AdditiveGenerator {
    std::function<double(double)> g;
    std::function<double(double)> g_inverse;
    double g_at_zero_plus = 0.0;  // may be +inf
    bool strict = false;          // g(0+) = inf up to the numeric floor
    std::string name;
};

/// g(x) = -log(max(x, 1e-300)); generates the product t-norm.
const AdditiveGenerator& product_generator();

/// g(x) = 1 - x; generates the Lukasiewicz t-norm (L1-minimal shape only).
const AdditiveGenerator& lukasiewicz_generator();

/// Closed-form minimal refinements for Schur-concave t-norms with an additive
/// generator, valid for the L1 norm. Norm::L2 is an unsupported combination.
RefinementResult refine_generator_tnorm(const AdditiveGenerator& gen, const RefineInput& in,
                                        std::mt19937_64* tie_rng = nullptr);
RefinementResult refine_generator_tconorm(const AdditiveGenerator& gen, const RefineInput& in,
                                          std::mt19937_64* tie_rng = nullptr);

/// Residuum refinement for strict generators: the antecedent is kept and the
/// consequent moves so that R(a, c') = target.
ImplicationRefinement refine_generator_residuum(const AdditiveGenerator& gen, double a, double c, double target);

using Refiner = std::function<RefinementResult(const RefineInput&)>;

/// Image of a t-norm refiner under the strong-negation involution: refines the
/// dual t-conorm. dual(dual(f)) == f pointwise.
RefinementResult dual_refine(const Refiner& tnorm_refiner, const RefineInput& in);

/// S-implication refinement S(1-a, c) = target in terms of a t-conorm refiner
/// over [1-a, c].
ImplicationRefinement simpl_refine(const Refiner& tconorm_refiner, double a, double c, double target, Norm norm = Norm::L2);

}  // namespace flr
