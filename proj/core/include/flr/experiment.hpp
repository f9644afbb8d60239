#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "flr/descent.hpp"
#include "flr/ilr.hpp"

namespace flr {

enum class Method { Ilr, Adam };

std::string to_string(Method m);

/// One trajectory point of one benchmark run.
struct RunRecord {
    std::string instance;
    Method method = Method::Ilr;
    std::string logic;
    double param = 0.0;  // alpha for ILR, beta for ADAM
    int iteration = 0;
    double satisfaction = 0.0;
    double l1_norm = 0.0;
    std::uint64_t seed = 0;
};

struct ExperimentConfig {
    std::vector<std::string> instance_paths;
    std::vector<Method> methods{Method::Ilr};
    std::vector<std::string> logics{"lukasiewicz"};  // godel | lukasiewicz | product
    double target = 1.0;
    int clauses = 0;  // 0 = all clauses, otherwise keep the first N
    IlrParams ilr;
    AdamParams adam;
    double beta = 0.1;  // ADAM regularization weight
    Norm reg_norm = Norm::L1;
    std::vector<std::uint64_t> seeds{1};
};

/// The shared initial truth vector of a (instance, seed) pair. Counter-based:
/// entry i is splitmix64(fnv1a(basename) ^ seed, i) mapped to [0,1), so every
/// method and logic sees the same start.
std::vector<double> initial_truth(const std::string& instance_path, std::uint64_t seed, int n);

/// Run every (instance, seed, logic, method) combination sequentially and
/// return per-iteration records in that canonical order.
std::vector<RunRecord> run_experiment(const ExperimentConfig& config);

/// Schema: instance,method,logic,param,iteration,satisfaction,l1_norm,seed
void write_csv(const std::vector<RunRecord>& records, std::ostream& out);

}  // namespace flr
