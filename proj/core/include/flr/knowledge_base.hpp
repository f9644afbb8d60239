#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "flr/formula.hpp"
#include "flr/unit.hpp"

namespace flr {

/// Truth assignment for every ground atom over a finite domain, with a dense
/// atom index used as the Prop-id space of grounded formulas. Atom ids run
/// over predicates in declaration order, each expanded over object tuples in
/// lexicographic domain order.
class Interpretation {
public:
    Interpretation(std::vector<std::string> domain, std::vector<std::pair<std::string, int>> predicates);

    const std::vector<std::string>& domain() const { return domain_; }
    const std::vector<std::pair<std::string, int>>& predicates() const { return predicates_; }

    int atom_count() const { return static_cast<int>(atom_names_.size()); }
    int atom_id(const std::string& pred, const std::vector<std::string>& objects) const;
    const std::string& atom_name(int id) const { return atom_names_.at(static_cast<std::size_t>(id)); }

    void set(const std::string& pred, const std::vector<std::string>& objects, UnitValue v);
    void set_by_name(const std::string& atom_text, UnitValue v);  // e.g. "partOf(o2,o1)"

    const std::vector<double>& truth() const { return truth_; }
    std::vector<double>& truth() { return truth_; }

private:
    std::vector<std::string> domain_;
    std::vector<std::pair<std::string, int>> predicates_;
    std::map<std::string, int> pred_index_;
    std::map<std::string, int> object_index_;
    std::vector<int> pred_base_;  // first atom id per predicate
    std::vector<std::string> atom_names_;
    std::vector<double> truth_;
};

/// Expand quantifiers over the interpretation's domain and replace atoms with
/// Prop leaves carrying the interpretation's atom ids. The result is
/// quantifier-free; instance order enumerates the leftmost variable outermost.
FormulaPtr ground(const FormulaPtr& formula, const Interpretation& interp);

struct WeightedFormula {
    double weight = 1.0;
    FormulaPtr formula;   // as written
    FormulaPtr grounded;  // over interpretation atom ids
};

struct KnowledgeBase {
    std::vector<WeightedFormula> formulas;
    Interpretation interp;
};

/// Knowledge-base JSON:
/// { "domain": [...], "predicates": {"chair": 1, ...},
///   "formulas": [{"weight": 1.0, "expr": "<s-expression>"}],
///   "interpretation": {"chair(o1)": 0.9, ...} }
KnowledgeBase load_kb_json(std::istream& in);
KnowledgeBase load_kb_file(const std::string& path);

}  // namespace flr
