#include "flr/experiment.hpp"

#include <cinttypes>
#include <cstdio>
#include <ostream>

#include "flr/dimacs.hpp"
#include "flr/errors.hpp"
#include "flr/rng.hpp"

namespace flr {

std::string to_string(Method m) { return m == Method::Ilr ? "ilr" : "adam"; }

namespace {

std::string basename_of(const std::string& path) {
    const auto pos = path.find_last_of("/\\");
    return pos == std::string::npos ? path : path.substr(pos + 1);
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

}  // namespace

std::vector<double> initial_truth(const std::string& instance_path, std::uint64_t seed, int n) {
    CounterRng rng(fnv1a64(basename_of(instance_path)) ^ splitmix64(seed));
    std::vector<double> t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = rng.draw(static_cast<std::uint64_t>(i));
    return t;
}

std::vector<RunRecord> run_experiment(const ExperimentConfig& config) {
    std::vector<RunRecord> records;
    for (const std::string& path : config.instance_paths) {
        CnfInstance inst = parse_dimacs_file(path);
        if (config.clauses > 0) inst = with_first_clauses(inst, config.clauses);
        const FormulaPtr formula = cnf_to_formula(inst);
        const std::string name = basename_of(path);

        for (std::uint64_t seed : config.seeds) {
            const std::vector<double> t0 = initial_truth(path, seed, inst.num_vars);
            for (const std::string& logic : config.logics) {
                const LogicConfig lc = config_by_name(logic);
                for (Method method : config.methods) {
                    IlrResult run;
                    double param = 0.0;
                    if (method == Method::Ilr) {
                        param = config.ilr.alpha;
                        run = ilr_run(lc, *formula, t0, config.target, config.ilr);
                    } else {
                        param = config.beta;
                        SurrogateLoss loss{lc, formula, t0, config.target, config.beta, config.reg_norm};
                        run = adam_minimize(loss, config.adam, seed);
                    }
                    for (const IlrStep& step : run.trajectory) {
                        records.push_back({name, method, logic, param, step.iteration, step.satisfaction,
                                           step.l1_to_initial, seed});
                    }
                }
            }
        }
    }
    return records;
}

void write_csv(const std::vector<RunRecord>& records, std::ostream& out) {
    out << "instance,method,logic,param,iteration,satisfaction,l1_norm,seed\n";
    for (const RunRecord& r : records) {
        out << r.instance << ',' << to_string(r.method) << ',' << r.logic << ',' << format_double(r.param) << ','
            << r.iteration << ',' << format_double(r.satisfaction) << ',' << format_double(r.l1_norm) << ','
            << r.seed << '\n';
    }
}

}  // namespace flr
