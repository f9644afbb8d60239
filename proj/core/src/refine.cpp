#include "flr/refine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "flr/errors.hpp"

namespace flr {

namespace {

constexpr double kTol = 1e-12;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

double sum(const std::vector<double>& xs) { return std::accumulate(xs.begin(), xs.end(), 0.0); }

/// Clamp target into [lo, hi]; records whether clamping happened.
double clamp_target(double target, double lo, double hi, bool& clamped) {
    if (target < lo - kTol) {
        clamped = true;
        return lo;
    }
    if (target > hi + kTol) {
        clamped = true;
        return hi;
    }
    return std::clamp(target, lo, hi);
}

/// Lowest index among entries tied with the extreme value, or a random one.
std::size_t pick_extreme(const std::vector<double>& t, bool smallest, std::mt19937_64* tie_rng) {
    double best = smallest ? *std::min_element(t.begin(), t.end()) : *std::max_element(t.begin(), t.end());
    if (tie_rng == nullptr) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i] == best) return i;
        }
        return 0;
    }
    std::vector<std::size_t> tied;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] == best) tied.push_back(i);
    }
    return tied[(*tie_rng)() % tied.size()];
}

RefinementResult finish(const RefineInput& in, std::vector<double> refined, double achieved, bool clamped,
                        bool flagged) {
    RefinementResult r;
    r.refined = std::move(refined);
    r.achieved = achieved;
    r.distance = norm_distance(in.norm, r.refined, in.t);
    r.clamped = clamped;
    r.flagged = flagged;
    return r;
}

double godel_tnorm_value(const std::vector<double>& t, const std::vector<double>& consts) {
    double v = 1.0;
    for (double x : t) v = std::min(v, x);
    for (double c : consts) v = std::min(v, c);
    return v;
}

double godel_tconorm_value(const std::vector<double>& t, const std::vector<double>& consts) {
    double v = 0.0;
    for (double x : t) v = std::max(v, x);
    for (double c : consts) v = std::max(v, c);
    return v;
}

double luk_tnorm_value(const std::vector<double>& t, const std::vector<double>& consts) {
    const double n = static_cast<double>(t.size() + consts.size());
    if (n == 0.0) return 1.0;
    return std::max(sum(t) + sum(consts) - (n - 1.0), 0.0);
}

double luk_tconorm_value(const std::vector<double>& t, const std::vector<double>& consts) {
    if (t.empty() && consts.empty()) return 0.0;
    return std::min(sum(t) + sum(consts), 1.0);
}

double generator_tnorm_value(const AdditiveGenerator& gen, const std::vector<double>& t,
                             const std::vector<double>& consts) {
    double s = 0.0;
    for (double x : t) s += gen.g(x);
    for (double c : consts) s += gen.g(c);
    return gen.g_inverse(std::min(gen.g_at_zero_plus, s));
}

double generator_tconorm_value(const AdditiveGenerator& gen, const std::vector<double>& t,
                               const std::vector<double>& consts) {
    double s = 0.0;
    for (double x : t) s += gen.g(1.0 - x);
    for (double c : consts) s += gen.g(1.0 - c);
    return 1.0 - gen.g_inverse(std::min(gen.g_at_zero_plus, s));
}

}  // namespace

double norm_distance(Norm norm, const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = std::abs(a[i] - b[i]);
        acc += (norm == Norm::L1) ? d : d * d;
    }
    return (norm == Norm::L1) ? acc : std::sqrt(acc);
}

// ---------------------------------------------------------------------------
// Godel
// ---------------------------------------------------------------------------

RefinementResult refine_godel_tnorm(const RefineInput& in, std::mt19937_64* tie_rng) {
    if (in.t.empty()) throw std::invalid_argument("refinement needs at least one free value");
    bool clamped = false;
    const double hi = in.consts.empty() ? 1.0 : *std::min_element(in.consts.begin(), in.consts.end());
    const double target = clamp_target(in.target, 0.0, hi, clamped);
    const double current = godel_tnorm_value(in.t, in.consts);

    std::vector<double> w = in.t;
    if (target > current) {
        for (double& x : w) x = std::max(x, target);
    } else if (target < current) {
        w[pick_extreme(in.t, /*smallest=*/true, tie_rng)] = target;
    }
    const double achieved = godel_tnorm_value(w, in.consts);
    return finish(in, std::move(w), achieved, clamped, false);
}

RefinementResult refine_godel_tconorm(const RefineInput& in, std::mt19937_64* tie_rng) {
    if (in.t.empty()) throw std::invalid_argument("refinement needs at least one free value");
    bool clamped = false;
    const double lo = in.consts.empty() ? 0.0 : *std::max_element(in.consts.begin(), in.consts.end());
    const double target = clamp_target(in.target, lo, 1.0, clamped);
    const double current = godel_tconorm_value(in.t, in.consts);

    std::vector<double> w = in.t;
    if (target > current) {
        w[pick_extreme(in.t, /*smallest=*/false, tie_rng)] = target;
    } else if (target < current) {
        for (double& x : w) x = std::min(x, target);
    }
    const double achieved = godel_tconorm_value(w, in.consts);
    return finish(in, std::move(w), achieved, clamped, false);
}

ImplicationRefinement refine_godel_implication(double a, double c, double target, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("refine_godel_implication needs eps > 0");
    ImplicationRefinement r;
    r.clamped = false;
    const double current = (a <= c) ? 1.0 : c;
    if (current == target) {
        r.antecedent = a;
        r.consequent = c;
        return r;
    }
    if (target >= 1.0) {
        r.antecedent = a;
        r.consequent = std::max(a, c);
        return r;
    }
    r.antecedent = std::min(std::max(target + eps, a), 1.0);
    r.consequent = target;
    return r;
}

// ---------------------------------------------------------------------------
// Lukasiewicz
// ---------------------------------------------------------------------------

namespace {

// Increase branch of the t-norm: spread a uniform increase over the K*
// smallest entries, saturating the rest at 1. K* is the largest K whose
// uniform increase keeps entry K inside [0,1].
std::vector<double> luk_tnorm_increase(const std::vector<double>& t, double const_sum, std::size_t m, double target,
                                       bool& flagged) {
    const std::size_t n = t.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return t[i] < t[j]; });

    std::vector<double> cum(n + 1, 0.0);
    for (std::size_t k = 0; k < n; ++k) cum[k + 1] = cum[k] + t[order[k]];

    const double md = static_cast<double>(m);
    std::size_t k_star = 0;
    double mu = 0.0;
    bool found = false;
    for (std::size_t k = n; k >= 1; --k) {
        const double kd = static_cast<double>(k);
        const double mu_k = (target + md + kd - 1.0 - const_sum - cum[k]) / kd;
        if (mu_k <= 1.0 - t[order[k - 1]] + kTol) {
            k_star = k;
            mu = mu_k;
            found = true;
            break;
        }
    }
    if (!found) {  // numerically degenerate; saturate everything
        flagged = true;
        return std::vector<double>(n, 1.0);
    }

    std::vector<double> w = t;
    for (std::size_t k = 0; k < n; ++k) {
        w[order[k]] = (k < k_star) ? clamp01(t[order[k]] + mu) : 1.0;
    }
    return w;
}

// Decrease branch of the t-conorm: subtract a uniform amount from the K*
// largest entries and zero the rest.
std::vector<double> luk_tconorm_decrease(const std::vector<double>& t, double const_sum, double target,
                                         bool& flagged) {
    const std::size_t n = t.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return t[i] > t[j]; });

    std::vector<double> cum(n + 1, 0.0);
    for (std::size_t k = 0; k < n; ++k) cum[k + 1] = cum[k] + t[order[k]];

    std::size_t k_star = 0;
    double lambda = 0.0;
    bool found = false;
    for (std::size_t k = n; k >= 1; --k) {
        const double kd = static_cast<double>(k);
        const double lambda_k = (cum[k] + const_sum - target) / kd;
        if (lambda_k <= t[order[k - 1]] + kTol) {
            k_star = k;
            lambda = lambda_k;
            found = true;
            break;
        }
    }
    if (!found) {
        flagged = true;
        return std::vector<double>(n, 0.0);
    }

    std::vector<double> w = t;
    for (std::size_t k = 0; k < n; ++k) {
        w[order[k]] = (k < k_star) ? clamp01(t[order[k]] - lambda) : 0.0;
    }
    return w;
}

// One clamp-and-redistribute pass for a uniform shift that left entries
// outside [0,1]; flagged because minimality under redistribution is unproven.
void redistribute_uniform(std::vector<double>& w, double deficit_sign, bool& flagged) {
    double deficit = 0.0;
    std::vector<bool> clipped(w.size(), false);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0.0) {
            deficit += -w[i] * deficit_sign;
            w[i] = 0.0;
            clipped[i] = true;
        } else if (w[i] > 1.0) {
            deficit += (w[i] - 1.0) * deficit_sign;
            w[i] = 1.0;
            clipped[i] = true;
        }
    }
    if (deficit == 0.0) return;
    flagged = true;
    std::size_t open = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!clipped[i]) ++open;
    }
    if (open == 0) return;
    const double share = deficit / static_cast<double>(open);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!clipped[i]) w[i] = clamp01(w[i] - share * deficit_sign);
    }
}

}  // namespace

RefinementResult refine_luk_tnorm(const RefineInput& in) {
    if (in.t.empty()) throw std::invalid_argument("refinement needs at least one free value");
    bool clamped = false;
    bool flagged = false;
    const std::size_t n = in.t.size(), m = in.consts.size();
    const double const_sum = sum(in.consts);
    const double hi = (m == 0) ? 1.0 : std::max(const_sum - (static_cast<double>(m) - 1.0), 0.0);
    const double target = clamp_target(in.target, 0.0, hi, clamped);
    const double current = luk_tnorm_value(in.t, in.consts);

    std::vector<double> w;
    if (std::abs(target - current) <= kTol) {
        w = in.t;
    } else if (target > current) {
        w = luk_tnorm_increase(in.t, const_sum, m, target, flagged);
    } else {
        // Uniform decrease; entries provably stay inside [0,1], but clamp and
        // redistribute once in case of floating-point spill.
        const double nd = static_cast<double>(n), md = static_cast<double>(m);
        const double d = std::max(sum(in.t) + const_sum + 1.0 - nd - md - target, 0.0) / nd;
        w = in.t;
        for (double& x : w) x -= d;
        redistribute_uniform(w, 1.0, flagged);
    }
    const double achieved = luk_tnorm_value(w, in.consts);
    return finish(in, std::move(w), achieved, clamped, flagged);
}

RefinementResult refine_luk_tconorm(const RefineInput& in) {
    if (in.t.empty()) throw std::invalid_argument("refinement needs at least one free value");
    bool clamped = false;
    bool flagged = false;
    const std::size_t n = in.t.size();
    const double const_sum = sum(in.consts);
    const double lo = in.consts.empty() ? 0.0 : std::min(const_sum, 1.0);
    const double target = clamp_target(in.target, lo, 1.0, clamped);
    const double current = luk_tconorm_value(in.t, in.consts);

    std::vector<double> w;
    if (std::abs(target - current) <= kTol) {
        w = in.t;
    } else if (target > current) {
        const double delta = std::max(target - sum(in.t) - const_sum, 0.0) / static_cast<double>(n);
        w = in.t;
        for (double& x : w) x += delta;
        redistribute_uniform(w, -1.0, flagged);
    } else {
        w = luk_tconorm_decrease(in.t, const_sum, target, flagged);
    }
    const double achieved = luk_tconorm_value(w, in.consts);
    return finish(in, std::move(w), achieved, clamped, flagged);
}

// ---------------------------------------------------------------------------
// Additive generators
// ---------------------------------------------------------------------------

const AdditiveGenerator& product_generator() {
    static const AdditiveGenerator gen{
        [](double x) { return -std::log(std::max(x, 1e-300)); },
        [](double y) { return std::exp(-y); },
        -std::log(1e-300),
        true,
        "product",
    };
    return gen;
}

const AdditiveGenerator& lukasiewicz_generator() {
    static const AdditiveGenerator gen{
        [](double x) { return 1.0 - x; },
        [](double y) { return clamp01(1.0 - y); },
        1.0,
        false,
        "lukasiewicz",
    };
    return gen;
}

namespace {

void require_l1(const RefineInput& in, const AdditiveGenerator& gen) {
    if (in.norm != Norm::L1) {
        throw UnsupportedError("generator-based refinement (" + gen.name + ") is closed-form for the L1 norm only");
    }
}

// Increase branch shared by the generator t-norm and (via duality) the
// t-conorm decrease: lift the n-K smallest entries to a common level.
std::vector<double> generator_tnorm_increase(const AdditiveGenerator& gen, const std::vector<double>& t,
                                             const std::vector<double>& consts, double target, bool& flagged) {
    const std::size_t n = t.size();
    std::vector<double> desc = t;
    std::sort(desc.begin(), desc.end(), std::greater<>());

    double const_g = 0.0;
    for (double c : consts) const_g += gen.g(c);

    double cum_g = 0.0;  // sum of g over the K largest entries
    double lambda = -1.0;
    bool found = false;
    for (std::size_t k = 0; k < n && !found; ++k) {
        const double lam = gen.g_inverse((gen.g(target) - cum_g - const_g) / static_cast<double>(n - k));
        const double upper = (k == 0) ? std::numeric_limits<double>::infinity() : desc[k - 1];
        if (upper >= lam - kTol && lam >= desc[k] - kTol) {
            lambda = std::clamp(lam, desc[k], std::min(upper, 1.0));
            found = true;
        }
        cum_g += gen.g(desc[k]);
    }
    if (!found) {
        // Bisection on the common level; value is continuous and increasing.
        flagged = true;
        double lo = desc[n - 1], hi_level = 1.0;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi_level);
            std::vector<double> w = t;
            for (double& x : w) x = std::max(x, mid);
            if (generator_tnorm_value(gen, w, consts) < target) {
                lo = mid;
            } else {
                hi_level = mid;
            }
        }
        lambda = hi_level;
    }

    std::vector<double> w = t;
    for (double& x : w) x = std::max(x, lambda);
    return w;
}

}  // namespace

RefinementResult refine_generator_tnorm(const AdditiveGenerator& gen, const RefineInput& in,
                                        std::mt19937_64* tie_rng) {
    if (in.t.empty()) throw std::invalid_argument("refinement needs at least one free value");
    require_l1(in, gen);
    bool clamped = false;
    bool flagged = false;
    const double hi = generator_tnorm_value(gen, {}, in.consts);
    const double target = clamp_target(in.target, 0.0, hi, clamped);
    const double current = generator_tnorm_value(gen, in.t, in.consts);

    std::vector<double> w;
    if (std::abs(target - current) <= kTol) {
        w = in.t;
    } else if (target > current) {
        if (target <= 0.0) {
            flagged = true;
            w = in.t;
        } else {
            w = generator_tnorm_increase(gen, in.t, in.consts, target, flagged);
        }
    } else {
        // Decrease: only the smallest entry moves.
        const std::size_t i = pick_extreme(in.t, /*smallest=*/true, tie_rng);
        double rest_g = 0.0;
        for (std::size_t j = 0; j < in.t.size(); ++j) {
            if (j != i) rest_g += gen.g(in.t[j]);
        }
        for (double c : in.consts) rest_g += gen.g(c);
        w = in.t;
        w[i] = clamp01(gen.g_inverse(gen.g(target) - rest_g));
        if (target < kTol) flagged = true;  // value floor in use near zero
    }
    const double achieved = generator_tnorm_value(gen, w, in.consts);
    return finish(in, std::move(w), achieved, clamped, flagged);
}

RefinementResult refine_generator_tconorm(const AdditiveGenerator& gen, const RefineInput& in,
                                          std::mt19937_64* tie_rng) {
    if (in.t.empty()) throw std::invalid_argument("refinement needs at least one free value");
    require_l1(in, gen);
    bool clamped = false;
    bool flagged = false;
    const double lo = generator_tconorm_value(gen, {}, in.consts);
    const double target = clamp_target(in.target, lo, 1.0, clamped);
    const double current = generator_tconorm_value(gen, in.t, in.consts);

    std::vector<double> w;
    if (std::abs(target - current) <= kTol) {
        w = in.t;
    } else if (target > current) {
        // Increase: only the largest entry moves.
        const std::size_t i = pick_extreme(in.t, /*smallest=*/false, tie_rng);
        double rest_g = 0.0;
        for (std::size_t j = 0; j < in.t.size(); ++j) {
            if (j != i) rest_g += gen.g(1.0 - in.t[j]);
        }
        for (double c : in.consts) rest_g += gen.g(1.0 - c);
        w = in.t;
        w[i] = clamp01(1.0 - gen.g_inverse(gen.g(1.0 - target) - rest_g));
    } else {
        // Decrease through the dual t-norm increase.
        std::vector<double> td(in.t.size()), cd(in.consts.size());
        for (std::size_t j = 0; j < in.t.size(); ++j) td[j] = 1.0 - in.t[j];
        for (std::size_t j = 0; j < in.consts.size(); ++j) cd[j] = 1.0 - in.consts[j];
        if (1.0 - target <= 0.0) {
            flagged = true;
            w = in.t;
        } else {
            std::vector<double> wd = generator_tnorm_increase(gen, td, cd, 1.0 - target, flagged);
            w.resize(wd.size());
            for (std::size_t j = 0; j < wd.size(); ++j) w[j] = 1.0 - wd[j];
        }
    }
    const double achieved = generator_tconorm_value(gen, w, in.consts);
    return finish(in, std::move(w), achieved, clamped, flagged);
}

ImplicationRefinement refine_generator_residuum(const AdditiveGenerator& gen, double a, double c, double target) {
    if (!gen.strict) throw UnsupportedError("residuum refinement needs a strict t-norm generator");
    ImplicationRefinement r;
    const double current = gen.g_inverse(std::max(gen.g(c) - gen.g(a), 0.0));
    r.antecedent = a;
    if (std::abs(current - target) <= kTol) {
        r.consequent = c;
        return r;
    }
    if (target <= kTol) r.flagged = true;  // relies on the generator's value floor
    r.consequent = clamp01(gen.g_inverse(gen.g(std::max(target, 0.0)) + gen.g(a)));
    return r;
}

RefinementResult dual_refine(const Refiner& tnorm_refiner, const RefineInput& in) {
    RefineInput dual_in;
    dual_in.t.resize(in.t.size());
    for (std::size_t i = 0; i < in.t.size(); ++i) dual_in.t[i] = 1.0 - in.t[i];
    dual_in.consts.resize(in.consts.size());
    for (std::size_t i = 0; i < in.consts.size(); ++i) dual_in.consts[i] = 1.0 - in.consts[i];
    dual_in.target = 1.0 - in.target;
    dual_in.norm = in.norm;

    RefinementResult inner = tnorm_refiner(dual_in);
    RefinementResult r;
    r.refined.resize(inner.refined.size());
    for (std::size_t i = 0; i < inner.refined.size(); ++i) r.refined[i] = 1.0 - inner.refined[i];
    r.achieved = 1.0 - inner.achieved;
    r.distance = inner.distance;
    r.clamped = inner.clamped;
    r.flagged = inner.flagged;
    return r;
}

ImplicationRefinement simpl_refine(const Refiner& tconorm_refiner, double a, double c, double target, Norm norm) {
    RefineInput in;
    in.t = {1.0 - a, c};
    in.target = target;
    in.norm = norm;
    RefinementResult inner = tconorm_refiner(in);
    ImplicationRefinement r;
    r.antecedent = 1.0 - inner.refined[0];
    r.consequent = inner.refined[1];
    r.clamped = inner.clamped;
    r.flagged = inner.flagged;
    return r;
}

}  // namespace flr
