#include "flr/ilr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "flr/errors.hpp"

namespace flr {

namespace {

constexpr double kExact = 1e-12;

RefinementResult refine_conjunctive(const TNormKind& kind, const RefineInput& in, std::mt19937_64* rng) {
    switch (kind.tag) {
        case TNormKind::Tag::Godel: return refine_godel_tnorm(in, rng);
        case TNormKind::Tag::Product: return refine_generator_tnorm(product_generator(), in, rng);
        case TNormKind::Tag::Lukasiewicz: return refine_luk_tnorm(in);
        default: throw UnsupportedError("no refinement function for t-norm " + to_string(kind));
    }
}

RefinementResult refine_disjunctive(const TConormKind& kind, const RefineInput& in, std::mt19937_64* rng) {
    switch (kind.tag) {
        case TConormKind::Tag::Godel: return refine_godel_tconorm(in, rng);
        case TConormKind::Tag::Product: return refine_generator_tconorm(product_generator(), in, rng);
        case TConormKind::Tag::Lukasiewicz: return refine_luk_tconorm(in);
        default: throw UnsupportedError("no refinement function for t-conorm " + to_string(kind));
    }
}

RefinementResult refine_universal(const AggregatorKind& kind, const RefineInput& in, std::mt19937_64* rng) {
    switch (kind.tag) {
        case AggregatorKind::Tag::Min: return refine_godel_tnorm(in, rng);
        case AggregatorKind::Tag::Product: return refine_generator_tnorm(product_generator(), in, rng);
        case AggregatorKind::Tag::LukasiewiczA: return refine_luk_tnorm(in);
        default: throw UnsupportedError("no refinement function for universal aggregator " + to_string(kind));
    }
}

RefinementResult refine_existential(const AggregatorKind& kind, const RefineInput& in, std::mt19937_64* rng) {
    switch (kind.tag) {
        case AggregatorKind::Tag::Max: return refine_godel_tconorm(in, rng);
        case AggregatorKind::Tag::ProbSum: return refine_generator_tconorm(product_generator(), in, rng);
        case AggregatorKind::Tag::LukasiewiczE: return refine_luk_tconorm(in);
        default: throw UnsupportedError("no refinement function for existential aggregator " + to_string(kind));
    }
}

Refiner conorm_refiner(const TConormKind& kind, std::mt19937_64* rng) {
    return [kind, rng](const RefineInput& in) { return refine_disjunctive(kind, in, rng); };
}

struct BackwardPass {
    const LogicConfig& config;
    const EvalTrace& trace;
    const IlrParams& params;
    std::mt19937_64* rng;
    std::vector<std::pair<int, double>> occurrences;

    double value(int idx) const { return trace.entries[static_cast<std::size_t>(idx)].value; }
    const Formula& node(int idx) const { return *trace.entries[static_cast<std::size_t>(idx)].node; }

    void visit(int idx, double target) {
        const EvalTrace::Entry& e = trace.entries[static_cast<std::size_t>(idx)];
        switch (e.node->kind) {
            case Formula::Kind::Prop:
                occurrences.emplace_back(e.node->prop, std::clamp(target, 0.0, 1.0) - e.value);
                return;
            case Formula::Kind::Const:
                return;
            case Formula::Kind::Not:
                visit(e.children[0], 1.0 - target);
                return;
            case Formula::Kind::And:
            case Formula::Kind::Or:
            case Formula::Kind::AggAll:
            case Formula::Kind::AggAny:
                visit_nary(e, target);
                return;
            case Formula::Kind::Implies:
                visit_implication(e, target);
                return;
            default:
                throw std::invalid_argument("ILR requires a grounded formula");
        }
    }

    void visit_nary(const EvalTrace::Entry& e, double target) {
        RefineInput in;
        in.norm = Norm::L1;
        in.target = target;
        std::vector<int> free_children;
        for (int ci : e.children) {
            if (node(ci).kind == Formula::Kind::Const) {
                in.consts.push_back(value(ci));
            } else {
                in.t.push_back(value(ci));
                free_children.push_back(ci);
            }
        }
        if (in.t.empty()) return;  // nothing movable

        RefinementResult r;
        switch (e.node->kind) {
            case Formula::Kind::And: r = refine_conjunctive(config.tnorm, in, rng); break;
            case Formula::Kind::Or: r = refine_disjunctive(config.tconorm, in, rng); break;
            case Formula::Kind::AggAll: r = refine_universal(config.universal, in, rng); break;
            default: r = refine_existential(config.existential, in, rng); break;
        }
        for (std::size_t k = 0; k < free_children.size(); ++k) visit(free_children[k], r.refined[k]);
    }

    void visit_implication(const EvalTrace::Entry& e, double target) {
        const int ai = e.children[0], ci = e.children[1];
        const bool a_const = node(ai).kind == Formula::Kind::Const;
        const bool c_const = node(ci).kind == Formula::Kind::Const;
        if (a_const && c_const) return;
        const double va = value(ai), vc = value(ci);
        target = std::clamp(target, 0.0, 1.0);

        double new_a = va, new_c = vc;
        switch (config.implication.tag) {
            case ImplicationKind::Tag::KleeneDienes:
            case ImplicationKind::Tag::Reichenbach:
            case ImplicationKind::Tag::Lukasiewicz: {
                const TConormKind s = config.implication.tag == ImplicationKind::Tag::KleeneDienes
                                          ? TConormKind::godel()
                                      : config.implication.tag == ImplicationKind::Tag::Reichenbach
                                          ? TConormKind::product()
                                          : TConormKind::lukasiewicz();
                if (!a_const && !c_const) {
                    ImplicationRefinement r = simpl_refine(conorm_refiner(s, rng), va, vc, target, Norm::L1);
                    new_a = r.antecedent;
                    new_c = r.consequent;
                } else if (a_const) {
                    RefineInput in{{vc}, {1.0 - va}, target, Norm::L1};
                    new_c = refine_disjunctive(s, in, rng).refined[0];
                } else {
                    RefineInput in{{1.0 - va}, {vc}, target, Norm::L1};
                    new_a = 1.0 - refine_disjunctive(s, in, rng).refined[0];
                }
                break;
            }
            case ImplicationKind::Tag::GodelR:
                godel_r_cases(a_const, c_const, va, vc, target, new_a, new_c);
                break;
            case ImplicationKind::Tag::Goguen:
                goguen_cases(c_const, va, vc, target, new_a, new_c);
                break;
            default:
                throw UnsupportedError("no refinement function for implication " + to_string(config.implication));
        }
        if (!a_const) visit(ai, new_a);
        if (!c_const) visit(ci, new_c);
    }

    void godel_r_cases(bool a_const, bool c_const, double va, double vc, double target, double& new_a,
                       double& new_c) const {
        const double eps = params.eps_impl;
        if (!a_const && !c_const) {
            ImplicationRefinement r = refine_godel_implication(va, vc, target, eps);
            new_a = r.antecedent;
            new_c = r.consequent;
        } else if (a_const) {
            // c must stay below the fixed antecedent to realise targets < 1.
            if (target >= 1.0 - kExact) {
                new_c = (va <= vc) ? vc : std::max(vc, va);
            } else if (target < va) {
                new_c = target;
            } else {
                new_c = std::max(vc, va);  // best effort: push to 1
            }
        } else {
            if (target >= 1.0 - kExact) {
                new_a = std::min(va, vc);
            } else if (std::abs(vc - target) <= kExact) {
                new_a = std::min(std::max(va, target + eps), 1.0);
            } else if (std::abs(vc - target) < 1.0 - target) {
                new_a = std::min(std::max(va, vc + eps), 1.0);  // realise value vc
            } else {
                new_a = std::min(va, vc);  // realise value 1
            }
        }
    }

    void goguen_cases(bool c_const, double va, double vc, double target, double& new_a, double& new_c) const {
        const AdditiveGenerator& gen = product_generator();
        if (!c_const) {
            // The residuum refinement never moves the antecedent.
            ImplicationRefinement r = refine_generator_residuum(gen, va, vc, target);
            new_a = r.antecedent;
            new_c = r.consequent;
        } else {
            if (target >= 1.0 - kExact) {
                new_a = std::min(va, vc);
            } else if (target <= vc) {
                new_a = 1.0;  // even a = 1 only reaches vc; endpoint
            } else {
                new_a = std::clamp(gen.g_inverse(gen.g(vc) - gen.g(target)), 0.0, 1.0);
            }
        }
    }
};

}  // namespace

void validate_ilr_config(const LogicConfig& config) {
    switch (config.tnorm.tag) {
        case TNormKind::Tag::Godel:
        case TNormKind::Tag::Product:
        case TNormKind::Tag::Lukasiewicz:
            break;
        default:
            throw UnsupportedError("ILR supports Godel, product and Lukasiewicz t-norms; got " +
                                   to_string(config.tnorm));
    }
    switch (config.tconorm.tag) {
        case TConormKind::Tag::Godel:
        case TConormKind::Tag::Product:
        case TConormKind::Tag::Lukasiewicz:
            break;
        default:
            throw UnsupportedError("ILR supports Godel, product and Lukasiewicz t-conorms; got " +
                                   to_string(config.tconorm));
    }
    switch (config.implication.tag) {
        case ImplicationKind::Tag::KleeneDienes:
        case ImplicationKind::Tag::Reichenbach:
        case ImplicationKind::Tag::Lukasiewicz:
        case ImplicationKind::Tag::GodelR:
        case ImplicationKind::Tag::Goguen:
            break;
        default:
            throw UnsupportedError("ILR has no refinement function for implication " + to_string(config.implication));
    }
    switch (config.universal.tag) {
        case AggregatorKind::Tag::Min:
        case AggregatorKind::Tag::Product:
        case AggregatorKind::Tag::LukasiewiczA:
            break;
        default:
            throw UnsupportedError("ILR has no refinement function for universal aggregator " +
                                   to_string(config.universal));
    }
    switch (config.existential.tag) {
        case AggregatorKind::Tag::Max:
        case AggregatorKind::Tag::ProbSum:
        case AggregatorKind::Tag::LukasiewiczE:
            break;
        default:
            throw UnsupportedError("ILR has no refinement function for existential aggregator " +
                                   to_string(config.existential));
    }
}

std::vector<std::pair<int, double>> ilr_backward(const LogicConfig& config, const EvalTrace& trace,
                                                 double root_target, const IlrParams& params) {
    std::mt19937_64 rng(params.tie_seed);
    std::mt19937_64* rng_ptr = params.tie_mode == TieMode::Seeded ? &rng : nullptr;
    BackwardPass pass{config, trace, params, rng_ptr, {}};
    pass.visit(trace.root_index(), root_target);
    return std::move(pass.occurrences);
}

std::vector<double> combine_deltas(std::span<const std::pair<int, double>> occurrences, int n_props,
                                   CombineMode mode) {
    std::vector<double> delta(static_cast<std::size_t>(n_props), 0.0);
    if (mode == CombineMode::MaxAbs) {
        std::vector<bool> seen(static_cast<std::size_t>(n_props), false);
        for (const auto& [p, d] : occurrences) {
            const auto i = static_cast<std::size_t>(p);
            if (!seen[i] || std::abs(d) > std::abs(delta[i])) delta[i] = d;
            seen[i] = true;
        }
    } else {
        std::vector<int> count(static_cast<std::size_t>(n_props), 0);
        for (const auto& [p, d] : occurrences) {
            delta[static_cast<std::size_t>(p)] += d;
            ++count[static_cast<std::size_t>(p)];
        }
        for (std::size_t i = 0; i < delta.size(); ++i) {
            if (count[i] > 0) delta[i] /= static_cast<double>(count[i]);
        }
    }
    return delta;
}

IlrResult ilr_run(const LogicConfig& config, const Formula& formula, std::span<const double> t0, double target,
                  const IlrParams& params) {
    if (!(params.alpha > 0.0 && params.alpha <= 1.0)) throw std::invalid_argument("ILR alpha must lie in (0, 1]");
    if (params.max_iters < 1) throw std::invalid_argument("ILR needs max_iters >= 1");
    if (!formula.quantifier_free()) throw std::invalid_argument("ILR requires a quantifier-free formula; ground it first");
    validate_ilr_config(config);

    // One seeded generator for the whole run keeps trajectories reproducible.
    std::mt19937_64 rng(params.tie_seed);
    std::mt19937_64* rng_ptr = params.tie_mode == TieMode::Seeded ? &rng : nullptr;

    IlrResult result;
    std::vector<double> t(t0.begin(), t0.end());
    const std::vector<double> initial(t);
    const int n_props = static_cast<int>(t.size());

    auto l1_to_initial = [&](const std::vector<double>& v) {
        double s = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) s += std::abs(v[i] - initial[i]);
        return s;
    };

    EvalTrace trace;
    double value = evaluate(config, formula, t, &trace);
    result.trajectory.push_back({0, value, 0.0});

    double best_resid = std::abs(value - target);
    int stall = 0;
    int it = 0;
    if (best_resid <= kExact) {
        result.converged = true;
    } else {
        for (it = 1; it <= params.max_iters; ++it) {
            const double scheduled = value + params.alpha * (target - value);
            BackwardPass pass{config, trace, params, rng_ptr, {}};
            pass.visit(trace.root_index(), scheduled);
            const std::vector<double> delta = combine_deltas(pass.occurrences, n_props, params.combine);
            for (std::size_t i = 0; i < t.size(); ++i) t[i] = std::clamp(t[i] + delta[i], 0.0, 1.0);

            value = evaluate(config, formula, t, &trace);
            result.trajectory.push_back({it, value, l1_to_initial(t)});

            const double resid = std::abs(value - target);
            if (resid <= kExact) {
                result.converged = true;
                break;
            }
            if (resid < best_resid - params.converge_tol) {
                best_resid = resid;
                stall = 0;
            } else {
                best_resid = std::min(best_resid, resid);
                if (++stall >= params.converge_patience) {
                    result.converged = true;
                    break;
                }
            }
        }
        if (it > params.max_iters) it = params.max_iters;
    }

    result.final = std::move(t);
    result.iterations_used = it;
    return result;
}

}  // namespace flr
