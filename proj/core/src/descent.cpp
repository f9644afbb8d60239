#include "flr/descent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "flr/errors.hpp"

namespace flr {

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double logit(double x) {
    const double c = std::clamp(x, 1e-6, 1.0 - 1e-6);
    return std::log(c / (1.0 - c));
}

enum class FirstTerm { Standard, LogProduct, LukasiewiczNoMax };

FirstTerm first_term_kind(const LogicConfig& config) {
    if (config.tnorm.tag == TNormKind::Tag::Product) return FirstTerm::LogProduct;
    if (config.tnorm.tag == TNormKind::Tag::Lukasiewicz) return FirstTerm::LukasiewiczNoMax;
    return FirstTerm::Standard;
}

// Root clause indices: the children of a root And/AggAll, or the root itself.
std::vector<int> clause_entries(const EvalTrace& trace) {
    const EvalTrace::Entry& root = trace.entries.back();
    if (root.node->kind == Formula::Kind::And || root.node->kind == Formula::Kind::AggAll) return root.children;
    return {trace.root_index()};
}

}  // namespace

SurrogateEval surrogate_value_and_grad(const SurrogateLoss& loss, std::span<const double> z) {
    const std::size_t n = z.size();
    if (loss.t0.size() != n) throw std::invalid_argument("surrogate z and t0 sizes differ");

    std::vector<double> t(n);
    std::vector<double> dsig(n);
    for (std::size_t i = 0; i < n; ++i) {
        t[i] = sigmoid(z[i]);
        dsig[i] = t[i] * (1.0 - t[i]);
    }

    EvalTrace trace;
    evaluate(loss.config, *loss.formula, t, &trace);

    // First term: the L2 norm |f - target| (subgradient 0 at the kink), so
    // the pull toward the target does not fade out and lose to the
    // regularizer near feasibility.
    auto sign_of = [](double r) { return r > 1e-12 ? 1.0 : (r < -1e-12 ? -1.0 : 0.0); };
    const FirstTerm kind = first_term_kind(loss.config);
    std::vector<std::pair<int, double>> seeds;
    double term = 0.0;
    switch (kind) {
        case FirstTerm::Standard: {
            const double r = trace.root_value() - loss.target;
            term = std::abs(r);
            seeds.emplace_back(trace.root_index(), sign_of(r));
            break;
        }
        case FirstTerm::LogProduct: {
            if (!(loss.target > 0.0)) throw std::invalid_argument("log-space surrogate needs target > 0");
            double log_sum = 0.0;
            const std::vector<int> clauses = clause_entries(trace);
            for (int ci : clauses) log_sum += std::log(std::max(trace.entries[static_cast<std::size_t>(ci)].value, 1e-300));
            const double r = log_sum - std::log(loss.target);
            term = std::abs(r);
            for (int ci : clauses) {
                const double v = std::max(trace.entries[static_cast<std::size_t>(ci)].value, 1e-300);
                seeds.emplace_back(ci, sign_of(r) / v);
            }
            break;
        }
        case FirstTerm::LukasiewiczNoMax: {
            const std::vector<int> clauses = clause_entries(trace);
            double s = 0.0;
            for (int ci : clauses) s += trace.entries[static_cast<std::size_t>(ci)].value;
            const double v = s - (static_cast<double>(clauses.size()) - 1.0);
            const double r = v - loss.target;
            term = std::abs(r);
            for (int ci : clauses) seeds.emplace_back(ci, sign_of(r));
            break;
        }
    }

    ValueGrad g = trace_backward(loss.config, trace, static_cast<int>(n), seeds);

    SurrogateEval out;
    out.value = term;
    out.grad.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) out.grad[i] = g.dprop[i] * dsig[i];

    // Regularizer beta * ||t - t0||_p with the subgradient 0 at the kink.
    if (loss.beta != 0.0) {
        if (loss.reg_norm == Norm::L1) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double d = t[i] - loss.t0[i];
                s += std::abs(d);
                // dead zone so sigma(logit(t0)) round-off is stationary
                const double sign = (d > 1e-12) ? 1.0 : (d < -1e-12 ? -1.0 : 0.0);
                out.grad[i] += loss.beta * sign * dsig[i];
            }
            out.value += loss.beta * s;
        } else {
            double sq = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double d = t[i] - loss.t0[i];
                sq += d * d;
            }
            const double norm = std::sqrt(sq);
            out.value += loss.beta * norm;
            if (norm > 0.0) {
                for (std::size_t i = 0; i < n; ++i) {
                    out.grad[i] += loss.beta * (t[i] - loss.t0[i]) / norm * dsig[i];
                }
            }
        }
    }
    return out;
}

IlrResult adam_minimize(const SurrogateLoss& loss, const AdamParams& params, std::uint64_t /*seed*/) {
    if (params.iterations < 1) throw std::invalid_argument("adam_minimize needs iterations >= 1");
    if (!(params.beta1 > 0.0 && params.beta1 < 1.0 && params.beta2 > 0.0 && params.beta2 < 1.0)) {
        throw std::invalid_argument("ADAM betas must lie in (0, 1)");
    }
    const std::size_t n = loss.t0.size();

    std::vector<double> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = logit(loss.t0[i]);

    std::vector<double> m(n, 0.0), v(n, 0.0), t(n);
    IlrResult result;

    auto record = [&](int iteration) {
        double l1 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            t[i] = sigmoid(z[i]);
            l1 += std::abs(t[i] - loss.t0[i]);
        }
        const double satisfaction = evaluate(loss.config, *loss.formula, t);
        result.trajectory.push_back({iteration, satisfaction, l1});
        return satisfaction;
    };

    record(0);
    int it = 0;
    for (it = 1; it <= params.iterations; ++it) {
        const SurrogateEval eval = surrogate_value_and_grad(loss, z);
        const double bc1 = 1.0 - std::pow(params.beta1, it);
        const double bc2 = 1.0 - std::pow(params.beta2, it);
        for (std::size_t i = 0; i < n; ++i) {
            m[i] = params.beta1 * m[i] + (1.0 - params.beta1) * eval.grad[i];
            v[i] = params.beta2 * v[i] + (1.0 - params.beta2) * eval.grad[i] * eval.grad[i];
            const double m_hat = m[i] / bc1;
            const double v_hat = v[i] / bc2;
            z[i] -= params.lr * m_hat / (std::sqrt(v_hat) + params.eps);
        }
        record(it);
    }

    for (std::size_t i = 0; i < n; ++i) t[i] = sigmoid(z[i]);
    result.final = std::move(t);
    result.iterations_used = params.iterations;
    result.converged = true;
    return result;
}

}  // namespace flr
