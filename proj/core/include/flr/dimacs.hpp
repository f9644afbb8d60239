#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "flr/formula.hpp"

namespace flr {

/// CNF instance: clauses of signed literals, 1-based variable indices.
struct CnfInstance {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

/// DIMACS reader. Accepts `c` comment lines, a `p cnf V C` header, clauses
/// terminated by 0, and tolerates the SATLIB `%` / `0` footer. Rejects
/// malformed headers, out-of-range literals, empty clauses, and a clause
/// count that disagrees with the header.
CnfInstance parse_dimacs(std::istream& in);
CnfInstance parse_dimacs_file(const std::string& path);

/// First `n` clauses of the instance (the reduced benchmark mode).
CnfInstance with_first_clauses(const CnfInstance& inst, int n);

/// And over Or-of-literals; negative literals become Not(Prop). Variable i
/// maps to proposition id i-1.
FormulaPtr cnf_to_formula(const CnfInstance& inst);

}  // namespace flr
