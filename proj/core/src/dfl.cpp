#include "flr/dfl.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace flr {

double dfl_loss(const LogicConfig& config, const KnowledgeBase& kb) {
    double total = 0.0;
    for (const auto& wf : kb.formulas) {
        total += wf.weight * evaluate(config, *wf.grounded, kb.interp.truth());
    }
    return -total;
}

DflGradients dfl_grad(const LogicConfig& config, const KnowledgeBase& kb) {
    DflGradients out;
    const std::size_t n = kb.interp.truth().size();
    out.grad.assign(n, 0.0);
    out.kink.assign(n, false);
    double total = 0.0;
    for (const auto& wf : kb.formulas) {
        ValueGrad g = formula_value_grad(config, *wf.grounded, kb.interp.truth());
        total += wf.weight * g.value;
        for (std::size_t i = 0; i < n; ++i) {
            out.grad[i] += wf.weight * g.dprop[i];
            if (g.kink[i]) out.kink[i] = true;
        }
    }
    out.loss = -total;
    return out;
}

double fd_check(const LogicConfig& config, const KnowledgeBase& kb, double h) {
    if (!(h >= 1e-8 && h <= 1e-3)) throw std::invalid_argument("fd_check step must lie in [1e-8, 1e-3]");
    const DflGradients analytic = dfl_grad(config, kb);

    std::vector<double> truth = kb.interp.truth();
    auto weighted_value = [&](const std::vector<double>& t) {
        double total = 0.0;
        for (const auto& wf : kb.formulas) total += wf.weight * evaluate(config, *wf.grounded, t);
        return total;
    };

    double max_err = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (analytic.kink[i]) continue;
        const double orig = truth[i];
        const double plus = std::min(orig + h, 1.0);
        const double minus = std::max(orig - h, 0.0);
        if (plus == minus) continue;
        truth[i] = plus;
        const double f_plus = weighted_value(truth);
        truth[i] = minus;
        const double f_minus = weighted_value(truth);
        truth[i] = orig;
        const double fd = (f_plus - f_minus) / (plus - minus);
        max_err = std::max(max_err, std::abs(analytic.grad[i] - fd));
    }
    return max_err;
}

}  // namespace flr
