#include "flr/evaluate.hpp"

#include <cmath>
#include <stdexcept>

#include "flr/errors.hpp"

namespace flr {

namespace {

double prop_value(std::span<const double> truth, int id) {
    if (id < 0 || static_cast<std::size_t>(id) >= truth.size()) {
        throw std::invalid_argument("proposition " + std::to_string(id) + " has no assignment");
    }
    return truth[static_cast<std::size_t>(id)];
}

void check_log_product_placement(const LogicConfig& config, bool is_root, const Formula& f) {
    if (!is_root && f.kind == Formula::Kind::AggAll && config.universal.tag == AggregatorKind::Tag::LogProduct) {
        throw UnsupportedError("log_product aggregation is only valid as the outermost universal aggregator");
    }
}

double eval_rec(const LogicConfig& config, const Formula& f, std::span<const double> truth, bool is_root) {
    check_log_product_placement(config, is_root, f);
    switch (f.kind) {
        case Formula::Kind::Prop:
            return prop_value(truth, f.prop);
        case Formula::Kind::Const:
            return f.value;
        case Formula::Kind::Atom:
            throw std::invalid_argument("cannot evaluate ungrounded atom '" + f.pred + "'");
        case Formula::Kind::Forall:
        case Formula::Kind::Exists:
            throw std::invalid_argument("cannot evaluate quantified formula; ground it first");
        case Formula::Kind::Not:
            return 1.0 - eval_rec(config, *f.children[0], truth, false);
        case Formula::Kind::And: {
            double v = 0.0;
            for (std::size_t i = 0; i < f.children.size(); ++i) {
                const double x = eval_rec(config, *f.children[i], truth, false);
                v = (i == 0) ? x : t_norm(config.tnorm, v, x);
            }
            return v;
        }
        case Formula::Kind::Or: {
            double v = 0.0;
            for (std::size_t i = 0; i < f.children.size(); ++i) {
                const double x = eval_rec(config, *f.children[i], truth, false);
                v = (i == 0) ? x : t_conorm(config.tconorm, v, x);
            }
            return v;
        }
        case Formula::Kind::Implies: {
            const double a = eval_rec(config, *f.children[0], truth, false);
            const double c = eval_rec(config, *f.children[1], truth, false);
            return implication(config.implication, a, c);
        }
        case Formula::Kind::AggAll:
        case Formula::Kind::AggAny: {
            std::vector<double> xs;
            xs.reserve(f.children.size());
            for (const auto& c : f.children) xs.push_back(eval_rec(config, *c, truth, false));
            return aggregate(f.kind == Formula::Kind::AggAll ? config.universal : config.existential, xs);
        }
    }
    throw std::logic_error("bad formula kind");
}

int trace_rec(const LogicConfig& config, const Formula& f, std::span<const double> truth, bool is_root,
              EvalTrace& trace) {
    check_log_product_placement(config, is_root, f);
    EvalTrace::Entry entry;
    entry.node = &f;
    switch (f.kind) {
        case Formula::Kind::Prop:
            entry.value = prop_value(truth, f.prop);
            break;
        case Formula::Kind::Const:
            entry.value = f.value;
            break;
        case Formula::Kind::Atom:
            throw std::invalid_argument("cannot evaluate ungrounded atom '" + f.pred + "'");
        case Formula::Kind::Forall:
        case Formula::Kind::Exists:
            throw std::invalid_argument("cannot evaluate quantified formula; ground it first");
        case Formula::Kind::Not: {
            const int c = trace_rec(config, *f.children[0], truth, false, trace);
            entry.children.push_back(c);
            entry.value = 1.0 - trace.entries[static_cast<std::size_t>(c)].value;
            break;
        }
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            double v = 0.0;
            for (std::size_t i = 0; i < f.children.size(); ++i) {
                const int c = trace_rec(config, *f.children[i], truth, false, trace);
                entry.children.push_back(c);
                const double x = trace.entries[static_cast<std::size_t>(c)].value;
                if (i == 0) {
                    v = x;
                } else {
                    v = (f.kind == Formula::Kind::And) ? t_norm(config.tnorm, v, x) : t_conorm(config.tconorm, v, x);
                }
                entry.prefix.push_back(v);
            }
            entry.value = v;
            break;
        }
        case Formula::Kind::Implies: {
            const int a = trace_rec(config, *f.children[0], truth, false, trace);
            const int c = trace_rec(config, *f.children[1], truth, false, trace);
            entry.children = {a, c};
            entry.value = implication(config.implication, trace.entries[static_cast<std::size_t>(a)].value,
                                      trace.entries[static_cast<std::size_t>(c)].value);
            break;
        }
        case Formula::Kind::AggAll:
        case Formula::Kind::AggAny: {
            std::vector<double> xs;
            xs.reserve(f.children.size());
            for (const auto& c : f.children) {
                const int ci = trace_rec(config, *c, truth, false, trace);
                entry.children.push_back(ci);
                xs.push_back(trace.entries[static_cast<std::size_t>(ci)].value);
            }
            entry.value = aggregate(f.kind == Formula::Kind::AggAll ? config.universal : config.existential, xs);
            break;
        }
    }
    trace.entries.push_back(std::move(entry));
    return static_cast<int>(trace.entries.size()) - 1;
}

}  // namespace

double evaluate(const LogicConfig& config, const Formula& formula, std::span<const double> truth, EvalTrace* trace) {
    if (trace == nullptr) return eval_rec(config, formula, truth, true);
    trace->entries.clear();
    trace->entries.reserve(static_cast<std::size_t>(formula.node_count()));
    trace_rec(config, formula, truth, true, *trace);
    return trace->root_value();
}

double evaluate(const LogicConfig& config, const Formula& formula, const Interpretation& interp, EvalTrace* trace) {
    FormulaPtr grounded = formula.quantifier_free() ? nullptr : ground(std::make_shared<Formula>(formula), interp);
    const Formula& f = grounded ? *grounded : formula;
    return evaluate(config, f, interp.truth(), trace);
}

ValueGrad trace_backward(const LogicConfig& config, const EvalTrace& trace, int n_props,
                         std::span<const std::pair<int, double>> seeds) {
    struct Adj {
        double v = 0.0;
        bool flag = false;
    };
    std::vector<Adj> adj(trace.entries.size());
    for (const auto& [idx, v] : seeds) adj[static_cast<std::size_t>(idx)].v += v;

    ValueGrad out;
    out.value = trace.root_value();
    out.dprop.assign(static_cast<std::size_t>(n_props), 0.0);
    out.kink.assign(static_cast<std::size_t>(n_props), false);

    for (std::size_t i = trace.entries.size(); i-- > 0;) {
        const Adj a = adj[i];
        if (a.v == 0.0 && !a.flag) continue;
        const EvalTrace::Entry& e = trace.entries[i];
        const Formula& f = *e.node;
        auto child = [&](std::size_t k) -> Adj& { return adj[static_cast<std::size_t>(e.children[k])]; };
        auto child_value = [&](std::size_t k) { return trace.entries[static_cast<std::size_t>(e.children[k])].value; };
        switch (f.kind) {
            case Formula::Kind::Prop:
                out.dprop[static_cast<std::size_t>(f.prop)] += a.v;
                if (a.flag) out.kink[static_cast<std::size_t>(f.prop)] = true;
                break;
            case Formula::Kind::Const:
                break;
            case Formula::Kind::Not:
                child(0).v += -a.v;
                child(0).flag = child(0).flag || a.flag;
                break;
            case Formula::Kind::And:
            case Formula::Kind::Or: {
                const std::size_t n = e.children.size();
                double running = a.v;  // adjoint of the fold prefix
                bool flag = a.flag;
                for (std::size_t k = n; k-- > 1;) {
                    const PairGrad g = (f.kind == Formula::Kind::And)
                                           ? t_norm_grad(config.tnorm, e.prefix[k - 1], child_value(k))
                                           : t_conorm_grad(config.tconorm, e.prefix[k - 1], child_value(k));
                    const bool step_flag = flag || g.flagged;
                    child(k).v += running * g.db;
                    child(k).flag = child(k).flag || step_flag;
                    running *= g.da;
                    flag = step_flag;
                }
                child(0).v += running;
                child(0).flag = child(0).flag || flag;
                break;
            }
            case Formula::Kind::Implies: {
                const PairGrad g = implication_grad(config.implication, child_value(0), child_value(1));
                const bool flag = a.flag || g.flagged;
                child(0).v += a.v * g.da;
                child(0).flag = child(0).flag || flag;
                child(1).v += a.v * g.db;
                child(1).flag = child(1).flag || flag;
                break;
            }
            case Formula::Kind::AggAll:
            case Formula::Kind::AggAny: {
                std::vector<double> xs;
                xs.reserve(e.children.size());
                for (std::size_t k = 0; k < e.children.size(); ++k) xs.push_back(child_value(k));
                const VecGrad g = aggregate_grad(
                    f.kind == Formula::Kind::AggAll ? config.universal : config.existential, xs);
                const bool flag = a.flag || g.flagged;
                for (std::size_t k = 0; k < e.children.size(); ++k) {
                    child(k).v += a.v * g.dx[k];
                    child(k).flag = child(k).flag || flag;
                }
                break;
            }
            default:
                throw std::logic_error("unexpected node in trace");
        }
    }
    return out;
}

ValueGrad formula_value_grad(const LogicConfig& config, const Formula& formula, std::span<const double> truth) {
    EvalTrace trace;
    evaluate(config, formula, truth, &trace);
    const std::pair<int, double> seed{trace.root_index(), 1.0};
    ValueGrad g = trace_backward(config, trace, static_cast<int>(truth.size()), {&seed, 1});
    return g;
}

std::pair<double, double> attainable_range(const LogicConfig& config, const Formula& formula) {
    auto leaf_bounds = [](const Formula& f) -> std::pair<double, double> {
        switch (f.kind) {
            case Formula::Kind::Prop: return {0.0, 1.0};
            case Formula::Kind::Const: return {f.value, f.value};
            default: throw UnsupportedError("attainable_range supports a single connective layer only");
        }
    };

    switch (formula.kind) {
        case Formula::Kind::Prop:
        case Formula::Kind::Const:
            return leaf_bounds(formula);
        case Formula::Kind::Not: {
            auto [lo, hi] = leaf_bounds(*formula.children[0]);
            return {1.0 - hi, 1.0 - lo};
        }
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::AggAll:
        case Formula::Kind::AggAny: {
            std::vector<double> lo_vals, hi_vals;
            for (const auto& c : formula.children) {
                auto [lo, hi] = leaf_bounds(*c);
                lo_vals.push_back(lo);
                hi_vals.push_back(hi);
            }
            switch (formula.kind) {
                case Formula::Kind::And:
                    return {t_norm_fold(config.tnorm, lo_vals), t_norm_fold(config.tnorm, hi_vals)};
                case Formula::Kind::Or:
                    return {t_conorm_fold(config.tconorm, lo_vals), t_conorm_fold(config.tconorm, hi_vals)};
                case Formula::Kind::AggAll:
                    return {aggregate(config.universal, lo_vals), aggregate(config.universal, hi_vals)};
                default:
                    return {aggregate(config.existential, lo_vals), aggregate(config.existential, hi_vals)};
            }
        }
        case Formula::Kind::Implies: {
            auto [a_lo, a_hi] = leaf_bounds(*formula.children[0]);
            auto [c_lo, c_hi] = leaf_bounds(*formula.children[1]);
            // Implications decrease in the antecedent and increase in the consequent.
            return {implication(config.implication, a_hi, c_lo), implication(config.implication, a_lo, c_hi)};
        }
        default:
            throw UnsupportedError("attainable_range supports a single connective layer only");
    }
}

}  // namespace flr
