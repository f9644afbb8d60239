#include <doctest.h>

#include <cmath>
#include <sstream>

#include "flr/dimacs.hpp"
#include "flr/errors.hpp"
#include "flr/evaluate.hpp"
#include "flr/experiment.hpp"

using namespace flr;

TEST_CASE("DIMACS parsing") {
    std::istringstream in("c comment\np cnf 3 1\n1 -2 3 0\n");
    const CnfInstance inst = parse_dimacs(in);
    CHECK(inst.num_vars == 3);
    REQUIRE(inst.clauses.size() == 1);
    CHECK(inst.clauses[0] == std::vector<int>{1, -2, 3});
}

TEST_CASE("DIMACS tolerates the SATLIB footer") {
    std::istringstream in("p cnf 2 2\n1 2 0\n-1 -2 0\n%\n0\n\n");
    const CnfInstance inst = parse_dimacs(in);
    CHECK(inst.clauses.size() == 2);
}

TEST_CASE("DIMACS error cases") {
    std::istringstream mismatch("p cnf 2 2\n1 2 0\n");
    CHECK_THROWS_AS(parse_dimacs(mismatch), ParseError);

    std::istringstream out_of_range("p cnf 2 1\n1 -3 0\n");
    CHECK_THROWS_AS(parse_dimacs(out_of_range), ParseError);

    std::istringstream bad_header("p dnf 2 1\n1 2 0\n");
    CHECK_THROWS_AS(parse_dimacs(bad_header), ParseError);

    std::istringstream no_header("1 2 0\n");
    CHECK_THROWS_AS(parse_dimacs(no_header), ParseError);

    std::istringstream empty_clause("p cnf 2 1\n0\n");
    CHECK_THROWS_AS(parse_dimacs(empty_clause), ParseError);
}

TEST_CASE("vendored instances have the uf20-91 shape") {
    for (const auto* name : {"uf20-01.cnf", "uf20-02.cnf", "uf20-03.cnf"}) {
        const CnfInstance inst = parse_dimacs_file(std::string(FLR_DATA_DIR) + "/uf20/" + name);
        CHECK(inst.num_vars == 20);
        CHECK(inst.clauses.size() == 91);
        for (const auto& clause : inst.clauses) CHECK(clause.size() == 3);
    }
}

TEST_CASE("cnf_to_formula structure") {
    const CnfInstance inst{2, {{1, -2}}};
    const auto f = cnf_to_formula(inst);
    REQUIRE(f->kind == Formula::Kind::Or);  // single clause collapses to the clause itself
    CHECK(f->children[0]->kind == Formula::Kind::Prop);
    CHECK(f->children[1]->kind == Formula::Kind::Not);

    const CnfInstance two{2, {{1, 2}, {-1, 2}}};
    const auto g = cnf_to_formula(two);
    REQUIRE(g->kind == Formula::Kind::And);
    CHECK(g->children.size() == 2);
}

TEST_CASE("all-true assignment satisfies an all-positive instance under Godel") {
    const CnfInstance inst{3, {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}};
    const auto f = cnf_to_formula(inst);
    const std::vector<double> ones(3, 1.0);
    CHECK(evaluate(config_by_name("godel"), *f, ones) == 1.0);
}

TEST_CASE("uniform 0.5 assignment satisfies any 3SAT under Lukasiewicz") {
    // each clause value is min(1.5, 1) = 1, so the conjunction is 1
    const CnfInstance inst = parse_dimacs_file(std::string(FLR_DATA_DIR) + "/uf20/uf20-01.cnf");
    const auto f = cnf_to_formula(inst);
    const std::vector<double> half(20, 0.5);
    CHECK(evaluate(config_by_name("lukasiewicz"), *f, half) == doctest::Approx(1.0));
}

TEST_CASE("clause truncation keeps the first clauses") {
    const CnfInstance inst = parse_dimacs_file(std::string(FLR_DATA_DIR) + "/uf20/uf20-01.cnf");
    const CnfInstance cut = with_first_clauses(inst, 20);
    CHECK(cut.clauses.size() == 20);
    CHECK(cut.num_vars == 20);
    CHECK(cut.clauses[0] == inst.clauses[0]);
    CHECK(cut.clauses[19] == inst.clauses[19]);
    CHECK_THROWS_AS(with_first_clauses(inst, 0), std::invalid_argument);
}

TEST_CASE("shared initial truth vector per (instance, seed)") {
    const std::vector<double> a = initial_truth("data/uf20/uf20-01.cnf", 7, 20);
    const std::vector<double> b = initial_truth("other/dir/uf20-01.cnf", 7, 20);  // same basename
    const std::vector<double> c = initial_truth("data/uf20/uf20-02.cnf", 7, 20);
    const std::vector<double> d = initial_truth("data/uf20/uf20-01.cnf", 8, 20);
    CHECK(a == b);
    CHECK(a != c);
    CHECK(a != d);
    for (double x : a) {
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
}

TEST_CASE("experiment CSV is byte-identical across runs") {
    ExperimentConfig config;
    config.instance_paths = {std::string(FLR_DATA_DIR) + "/uf20/uf20-01.cnf"};
    config.methods = {Method::Ilr};
    config.logics = {"lukasiewicz"};
    config.clauses = 20;
    config.ilr.max_iters = 30;
    config.seeds = {1, 2};

    std::ostringstream run1, run2;
    write_csv(run_experiment(config), run1);
    write_csv(run_experiment(config), run2);
    CHECK(run1.str() == run2.str());
    CHECK(run1.str().rfind("instance,method,logic,param,iteration,satisfaction,l1_norm,seed\n", 0) == 0);
}

TEST_CASE("iteration-0 satisfaction is shared across methods and logics") {
    const std::string path = std::string(FLR_DATA_DIR) + "/uf20/uf20-01.cnf";
    ExperimentConfig config;
    config.instance_paths = {path};
    config.methods = {Method::Ilr, Method::Adam};
    config.logics = {"lukasiewicz"};
    config.clauses = 20;
    config.ilr.max_iters = 5;
    config.adam.iterations = 5;
    config.seeds = {3};

    const std::vector<RunRecord> records = run_experiment(config);
    double ilr0 = -1.0, adam0 = -1.0;
    for (const auto& r : records) {
        if (r.iteration == 0 && r.method == Method::Ilr) ilr0 = r.satisfaction;
        if (r.iteration == 0 && r.method == Method::Adam) adam0 = r.satisfaction;
    }
    CHECK(ilr0 >= 0.0);
    CHECK(ilr0 == doctest::Approx(adam0).epsilon(1e-9));

    // iterations are contiguous from 0 within each run
    int prev = -1;
    for (const auto& r : records) {
        if (r.method != Method::Ilr) continue;
        if (r.iteration == 0) prev = -1;
        CHECK(r.iteration == prev + 1);
        prev = r.iteration;
    }
}

TEST_CASE("empty experiment writes only the header") {
    ExperimentConfig config;
    config.instance_paths = {};
    std::ostringstream out;
    write_csv(run_experiment(config), out);
    CHECK(out.str() == "instance,method,logic,param,iteration,satisfaction,l1_norm,seed\n");
}
