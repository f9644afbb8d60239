// refine: command-line front end for the fuzzy refinement library.
//   refine sat      benchmark ILR / ADAM on DIMACS 3SAT instances
//   refine dfl      loss and atom gradients for a knowledge base
//   refine analyze  Monte-Carlo derivative-vanishing analysis
//
// Exit codes: 0 success, 2 input parse error, 3 unsupported configuration.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flr/analysis.hpp"
#include "flr/dfl.hpp"
#include "flr/errors.hpp"
#include "flr/experiment.hpp"

namespace fs = std::filesystem;

namespace {

std::vector<std::string> collect_instances(const std::string& cnf_arg) {
    std::vector<std::string> paths;
    if (fs::is_directory(cnf_arg)) {
        for (const auto& entry : fs::directory_iterator(cnf_arg)) {
            if (entry.path().extension() == ".cnf") paths.push_back(entry.path().string());
        }
        std::sort(paths.begin(), paths.end());
    } else {
        paths.push_back(cnf_arg);
    }
    if (paths.empty()) throw flr::ParseError("no .cnf instances found at '" + cnf_arg + "'");
    return paths;
}

int run_sat(const std::string& cnf_arg, const std::string& logic, const std::string& method, double alpha,
            double beta, double target, int clauses, int max_iters, const std::vector<std::uint64_t>& seeds,
            const std::string& out_path) {
    flr::ExperimentConfig config;
    config.instance_paths = collect_instances(cnf_arg);
    config.logics = {logic};
    config.methods = {method == "ilr" ? flr::Method::Ilr : flr::Method::Adam};
    config.target = target;
    config.clauses = clauses;
    config.ilr.alpha = alpha;
    config.ilr.max_iters = max_iters;
    config.adam.iterations = max_iters;
    config.beta = beta;
    config.seeds = seeds;

    flr::validate_ilr_config(flr::config_by_name(logic));
    const std::vector<flr::RunRecord> records = flr::run_experiment(config);

    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    flr::write_csv(records, out);
    std::cerr << "wrote " << records.size() << " records to " << out_path << "\n";
    return 0;
}

int run_dfl(const std::string& kb_path, const std::string& config_name, bool do_fd_check) {
    const flr::KnowledgeBase kb = flr::load_kb_file(kb_path);
    const flr::LogicConfig config = flr::config_by_name(config_name);
    const flr::DflGradients g = flr::dfl_grad(config, kb);

    std::cout << "loss," << g.loss << "\n";
    std::cout << "atom,grad\n";
    std::vector<int> order(g.grad.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return kb.interp.atom_name(a) < kb.interp.atom_name(b); });
    for (int id : order) {
        std::cout << kb.interp.atom_name(id) << ',' << g.grad[static_cast<std::size_t>(id)] << "\n";
    }
    if (do_fd_check) {
        const double err = flr::fd_check(config, kb, 1e-5);
        std::cout << "fd_max_abs_err," << err << "\n";
    }
    return 0;
}

int run_fraction(const std::string& aggregator, int n, int samples, std::uint64_t seed) {
    const flr::AggregatorKind kind = flr::aggregator_by_name(aggregator);
    const double fraction = flr::nonvanishing_fraction_mc(kind, n, samples, seed);
    std::cout << "aggregator,n,samples,seed,fraction\n";
    std::cout << aggregator << ',' << n << ',' << samples << ',' << seed << ',' << fraction << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Differentiable fuzzy logic operators, minimal refinement functions and the ILR algorithm"};
    app.require_subcommand(1);

    // sat
    auto* sat = app.add_subcommand("sat", "Benchmark refinement methods on DIMACS 3SAT instances");
    std::string cnf_arg, logic = "lukasiewicz", method = "ilr", out_path = "results.csv";
    double alpha = 1.0, beta = 0.1, target = 1.0;
    int clauses = 91, max_iters = 1000;
    std::vector<std::uint64_t> seeds{1};
    sat->add_option("--cnf", cnf_arg, "CNF file or directory of .cnf files")->required();
    sat->add_option("--logic", logic, "godel | lukasiewicz | product")->default_str("lukasiewicz");
    sat->add_option("--method", method, "ilr | adam")->check(CLI::IsMember({"ilr", "adam"}));
    sat->add_option("--alpha", alpha, "ILR scheduling parameter in (0,1]");
    sat->add_option("--beta", beta, "ADAM regularization weight");
    sat->add_option("--target", target, "target truth value");
    sat->add_option("--clauses", clauses, "use the first N clauses (91 = full uf20-91)");
    sat->add_option("--max-iters", max_iters, "iteration budget per run");
    sat->add_option("--seeds", seeds, "comma-separated seeds")->delimiter(',');
    sat->add_option("--out", out_path, "output CSV path");

    // dfl
    auto* dfl = app.add_subcommand("dfl", "Loss and per-atom gradients of a knowledge base");
    std::string kb_path, config_name = "product";
    bool do_fd_check = false;
    dfl->add_option("--kb", kb_path, "knowledge-base JSON file")->required();
    dfl->add_option("--config", config_name, "logic config name (default product)");
    dfl->add_flag("--fd-check", do_fd_check, "verify gradients with central finite differences");

    // analyze fraction
    auto* analyze = app.add_subcommand("analyze", "Operator analysis utilities");
    auto* fraction = analyze->add_subcommand("fraction", "Monte-Carlo nonvanishing-derivative fraction");
    std::string aggregator = "lukasiewicz_a";
    int n = 3, samples = 100000;
    std::uint64_t seed = 1;
    fraction->add_option("--aggregator", aggregator, "aggregator name, e.g. lukasiewicz_a, yager_a:2");
    fraction->add_option("--n", n, "arity");
    fraction->add_option("--samples", samples, "Monte-Carlo samples");
    fraction->add_option("--seed", seed, "RNG seed");
    analyze->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (sat->parsed()) {
            if (logic != "godel" && logic != "lukasiewicz" && logic != "product") {
                throw flr::UnsupportedError("sat benchmark supports godel, lukasiewicz and product logics");
            }
            return run_sat(cnf_arg, logic, method, alpha, beta, target, clauses, max_iters, seeds, out_path);
        }
        if (dfl->parsed()) return run_dfl(kb_path, config_name, do_fd_check);
        if (analyze->parsed()) return run_fraction(aggregator, n, samples, seed);
    } catch (const flr::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const flr::UnsupportedError& e) {
        std::cerr << "unsupported configuration: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
