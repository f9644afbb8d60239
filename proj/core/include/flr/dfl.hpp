#pragma once

#include <vector>

#include "flr/evaluate.hpp"
#include "flr/knowledge_base.hpp"

namespace flr {

/// Loss and per-atom gradients for a weighted knowledge base. The loss is the
/// negated weighted sum of formula valuations. `grad` holds the partials of
/// the weighted valuation sum itself (the ascent direction on satisfaction);
/// this is the sign convention of the worked gradient tables this module is
/// checked against, and equals -dLoss/datom. Atoms that appear in no formula
/// have gradient 0; `kink` marks atoms whose partial crossed a
/// non-differentiability locus.
struct DflGradients {
    double loss = 0.0;
    std::vector<double> grad;
    std::vector<bool> kink;
};

/// -sum_phi w_phi * val(phi). With the log_product universal aggregator the
/// valuations live in log space and the loss is the negated weighted sum of
/// clause log-values.
double dfl_loss(const LogicConfig& config, const KnowledgeBase& kb);

DflGradients dfl_grad(const LogicConfig& config, const KnowledgeBase& kb);

/// Max absolute difference between analytic partials and central finite
/// differences of the weighted valuation sum (step h, perturbations clamped
/// to [0,1]). Atoms flagged by the kink convention are excluded.
double fd_check(const LogicConfig& config, const KnowledgeBase& kb, double h);

}  // namespace flr
