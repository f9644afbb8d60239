#include <doctest.h>

#include <cmath>
#include <sstream>

#include "flr/dfl.hpp"
#include "test_support.hpp"

using namespace flr;
using flr::testing::Uniform;

namespace {

KnowledgeBase chair_kb() { return load_kb_file(std::string(FLR_DATA_DIR) + "/chair.json"); }

KnowledgeBase single_prop_kb(double weight, double truth) {
    std::ostringstream json;
    json << R"json({"domain": ["a"], "predicates": {"A": 0}, "formulas": [{"weight": )json" << weight
         << R"json(, "expr": "A"}], "interpretation": {"A": )json" << truth << "}}";
    std::istringstream in(json.str());
    return load_kb_json(in);
}

}  // namespace

TEST_CASE("chair example valuation and loss") {
    const KnowledgeBase kb = chair_kb();
    const LogicConfig config = config_by_name("product");
    const double loss = dfl_loss(config, kb);
    CHECK(std::abs(loss - -0.612) < 5e-4);
    CHECK(std::abs(evaluate(config, *kb.formulas[0].grounded, kb.interp) - 0.612) < 5e-4);
}

TEST_CASE("chair example gradient table") {
    const KnowledgeBase kb = chair_kb();
    const DflGradients g = dfl_grad(config_by_name("product"), kb);
    auto at = [&](const std::string& pred, std::vector<std::string> objs) {
        return g.grad[static_cast<std::size_t>(kb.interp.atom_id(pred, objs))];
    };
    CHECK(std::abs(at("chair", {"o1"}) - -0.4261) < 1e-3);
    CHECK(std::abs(at("chair", {"o2"}) - -0.0058) < 1e-3);
    CHECK(std::abs(at("cushion", {"o1"}) - 0.0029) < 1e-3);
    CHECK(std::abs(at("cushion", {"o2"}) - 0.7662) < 1e-3);
    CHECK(std::abs(at("armRest", {"o1"}) - 0.0029) < 1e-3);
    CHECK(std::abs(at("armRest", {"o2"}) - 0.4257) < 1e-3);
    CHECK(std::abs(at("partOf", {"o1", "o1"}) - -0.4978) < 1e-3);
    CHECK(std::abs(at("partOf", {"o2", "o2"}) - -0.1103) < 1e-3);
    CHECK(std::abs(at("partOf", {"o1", "o2"}) - -0.2219) < 1e-3);
    CHECK(std::abs(at("partOf", {"o2", "o1"}) - -0.4031) < 1e-3);

    // The single largest positive partial is the cushion(o2) correction.
    double best = -1.0;
    std::size_t best_idx = 0;
    for (std::size_t i = 0; i < g.grad.size(); ++i) {
        if (g.grad[i] > best) {
            best = g.grad[i];
            best_idx = i;
        }
    }
    CHECK(kb.interp.atom_name(static_cast<int>(best_idx)) == "cushion(o2)");
}

TEST_CASE("empty and constant knowledge bases") {
    std::istringstream empty(R"json({"domain": ["a"], "predicates": {}, "formulas": []})json");
    const KnowledgeBase kb_empty = load_kb_json(empty);
    CHECK(dfl_loss(config_by_name("product"), kb_empty) == 0.0);

    std::istringstream tautology(
        R"json({"domain": ["a"], "predicates": {}, "formulas": [{"weight": 3.0, "expr": "1.0"}]})json");
    const KnowledgeBase kb_taut = load_kb_json(tautology);
    CHECK(dfl_loss(config_by_name("product"), kb_taut) == doctest::Approx(-3.0));
}

TEST_CASE("atom absent from any formula has zero gradient") {
    std::istringstream in(R"json({
      "domain": ["a"],
      "predicates": {"A": 0, "B": 0},
      "formulas": [{"weight": 1.0, "expr": "A"}],
      "interpretation": {"A": 0.3, "B": 0.6}
    })json");
    const KnowledgeBase kb = load_kb_json(in);
    const DflGradients g = dfl_grad(config_by_name("product"), kb);
    CHECK(g.grad[static_cast<std::size_t>(kb.interp.atom_id("B", {}))] == 0.0);
    CHECK(g.grad[static_cast<std::size_t>(kb.interp.atom_id("A", {}))] == doctest::Approx(1.0));
}

TEST_CASE("fd_check validates the chair gradients") {
    const KnowledgeBase kb = chair_kb();
    CHECK(fd_check(config_by_name("product"), kb, 1e-5) <= 1e-6);
    CHECK_THROWS_AS(fd_check(config_by_name("product"), kb, 0.1), std::invalid_argument);
}

TEST_CASE("fd_check on a linear single-atom knowledge base") {
    const KnowledgeBase kb = single_prop_kb(2.5, 0.4);
    const DflGradients g = dfl_grad(config_by_name("product"), kb);
    // Valuation is w * A, so its partial is exactly w.
    CHECK(g.grad[0] == 2.5);
    CHECK(g.loss == doctest::Approx(-1.0));
    CHECK(fd_check(config_by_name("product"), kb, 1e-5) <= 1e-10);
}

TEST_CASE("kinked atoms are flagged and excluded") {
    std::istringstream in(R"json({
      "domain": ["a"],
      "predicates": {"A": 0, "B": 0},
      "formulas": [{"weight": 1.0, "expr": "(and A B)"}],
      "interpretation": {"A": 0.5, "B": 0.5}
    })json");
    const KnowledgeBase kb = load_kb_json(in);
    const DflGradients g = dfl_grad(config_by_name("godel"), kb);  // min at a tie
    CHECK(g.kink[0]);
    CHECK(g.kink[1]);
    CHECK_NOTHROW(fd_check(config_by_name("godel"), kb, 1e-5));
}

TEST_CASE("gradients are linear in formula weights") {
    Uniform u(37);
    for (int rep = 0; rep < 20; ++rep) {
        const double truth = u.range(0.05, 0.95);
        const KnowledgeBase kb1 = single_prop_kb(1.0, truth);
        const KnowledgeBase kb5 = single_prop_kb(5.0, truth);
        const DflGradients g1 = dfl_grad(config_by_name("product"), kb1);
        const DflGradients g5 = dfl_grad(config_by_name("product"), kb5);
        CHECK(std::abs(5.0 * g1.grad[0] - g5.grad[0]) <= 1e-12);
    }
}

TEST_CASE("dfl_grad agrees with finite differences on random knowledge bases") {
    // Product config, formulas without repeated atoms.
    std::istringstream in(R"json({
      "domain": ["a", "b"],
      "predicates": {"P": 1, "Q": 2},
      "formulas": [
        {"weight": 1.0, "expr": "(forall (x y) (=> (P x) (Q x y)))"},
        {"weight": 0.5, "expr": "(exists (x) (P x))"}
      ]
    })json");
    KnowledgeBase kb = load_kb_json(in);
    Uniform u(41);
    for (int rep = 0; rep < 25; ++rep) {
        for (auto& v : kb.interp.truth()) v = u.range(0.05, 0.95);
        CHECK(fd_check(config_by_name("product"), kb, 1e-5) <= 1e-6);
    }
}

TEST_CASE("log_product loss variant") {
    std::istringstream in(R"json({
      "domain": ["a", "b"],
      "predicates": {"P": 1},
      "formulas": [{"weight": 2.0, "expr": "(forall (x) (P x))"}],
      "interpretation": {"P(a)": 0.5, "P(b)": 0.25}
    })json");
    const KnowledgeBase kb = load_kb_json(in);
    const LogicConfig config = config_by_name("product_log");
    CHECK(dfl_loss(config, kb) == doctest::Approx(-2.0 * std::log(0.125)));
    const DflGradients g = dfl_grad(config, kb);
    CHECK(g.grad[static_cast<std::size_t>(kb.interp.atom_id("P", {"a"}))] == doctest::Approx(2.0 / 0.5));
    CHECK(g.grad[static_cast<std::size_t>(kb.interp.atom_id("P", {"b"}))] == doctest::Approx(2.0 / 0.25));
}
