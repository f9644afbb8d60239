#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "flr/unit.hpp"

namespace flr {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Formula tree. Quantified formulas use named variables in Atom leaves;
/// grounding replaces Forall/Exists with AggAll/AggAny nodes over instances
/// and Atom leaves with dense Prop ids.
struct Formula {
    enum class Kind {
        Prop,     // ground proposition, dense id
        Atom,     // predicate applied to variables / objects (pre-grounding)
        Const,    // fixed truth value
        Not,      // 1 child
        And,      // >= 2 children, evaluated as a left t-norm fold
        Or,       // >= 2 children, left t-conorm fold
        Implies,  // children = {antecedent, consequent}
        Forall,   // vars + 1 child
        Exists,   // vars + 1 child
        AggAll,   // >= 1 instances, universal aggregator
        AggAny,   // >= 1 instances, existential aggregator
    };

    Kind kind = Kind::Const;
    int prop = -1;
    std::string pred;
    std::vector<std::string> args;
    double value = 0.0;
    std::vector<FormulaPtr> children;
    std::vector<std::string> vars;
    double weight = 1.0;  // meaningful at the top level only

    int node_count() const;
    bool quantifier_free() const;
};

FormulaPtr prop(int id);
FormulaPtr atom(std::string pred, std::vector<std::string> args);
FormulaPtr constant(UnitValue v);
FormulaPtr negation(FormulaPtr f);
FormulaPtr conjunction(std::vector<FormulaPtr> children);
FormulaPtr disjunction(std::vector<FormulaPtr> children);
FormulaPtr implies(FormulaPtr antecedent, FormulaPtr consequent);
FormulaPtr forall(std::vector<std::string> vars, FormulaPtr body);
FormulaPtr exists(std::vector<std::string> vars, FormulaPtr body);
FormulaPtr agg_all(std::vector<FormulaPtr> instances);
FormulaPtr agg_any(std::vector<FormulaPtr> instances);

/// Largest Prop id in the tree, or -1 if none.
int max_prop_id(const Formula& f);

/// Prefix s-expression syntax:
///   (forall (x y) (=> (and (chair x) (partOf y x)) (or (cushion y) (armRest y))))
/// Connectives: and, or, not, =>, forall, exists. Numeric literals are
/// constants; a bare symbol is a 0-ary predicate atom.
FormulaPtr parse_formula(std::string_view text);

std::string to_sexpr(const Formula& f);

}  // namespace flr
