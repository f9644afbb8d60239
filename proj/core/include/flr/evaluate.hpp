#pragma once

#include <span>
#include <utility>
#include <vector>

#include "flr/config.hpp"
#include "flr/formula.hpp"
#include "flr/knowledge_base.hpp"

namespace flr {

/// Per-subformula values recorded during evaluation, in post order (children
/// before parents, root last). `prefix` holds the intermediate values of the
/// left fold for And/Or nodes; `children` are indices into `entries`.
struct EvalTrace {
    struct Entry {
        const Formula* node = nullptr;
        double value = 0.0;
        std::vector<int> children;
        std::vector<double> prefix;
    };

    std::vector<Entry> entries;

    double root_value() const { return entries.back().value; }
    int root_index() const { return static_cast<int>(entries.size()) - 1; }
};

/// Evaluate a quantifier-free formula over Prop truth values. Every Prop id
/// must index into `truth`. LogProduct universal aggregation is accepted only
/// at the root.
double evaluate(const LogicConfig& config, const Formula& formula, std::span<const double> truth,
                EvalTrace* trace = nullptr);

/// Ground against the interpretation, then evaluate over its atom truths.
double evaluate(const LogicConfig& config, const Formula& formula, const Interpretation& interp,
                EvalTrace* trace = nullptr);

/// Reverse-mode partials of the root value with respect to every proposition.
struct ValueGrad {
    double value = 0.0;
    std::vector<double> dprop;
    std::vector<bool> kink;  // partial passed through a non-differentiable locus
};

ValueGrad formula_value_grad(const LogicConfig& config, const Formula& formula, std::span<const double> truth);

/// Reverse-mode over a recorded trace with caller-chosen adjoint seeds
/// (entry index -> adjoint). Used for surrogate losses that re-weight
/// subformula contributions.
ValueGrad trace_backward(const LogicConfig& config, const EvalTrace& trace, int n_props,
                         std::span<const std::pair<int, double>> seeds);

/// Output range of a single connective layer over propositions and constants.
/// Throws UnsupportedError for deeper nesting (callers fall back to [0,1]).
std::pair<double, double> attainable_range(const LogicConfig& config, const Formula& formula);

}  // namespace flr
