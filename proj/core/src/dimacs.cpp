#include "flr/dimacs.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "flr/errors.hpp"

namespace flr {

CnfInstance parse_dimacs(std::istream& in) {
    CnfInstance inst;
    int declared_clauses = -1;
    bool header_seen = false;
    bool footer_seen = false;
    std::vector<int> clause;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank line
        if (tok == "c") continue;
        if (tok == "%") {
            footer_seen = true;
            continue;
        }
        if (footer_seen) {
            // SATLIB footer: a line "%" followed by a line "0".
            if (tok == "0" && !(ls >> tok)) continue;
            throw ParseError("line " + std::to_string(line_no) + ": content after SATLIB footer");
        }
        if (tok == "p") {
            std::string fmt;
            if (header_seen) throw ParseError("line " + std::to_string(line_no) + ": duplicate header");
            if (!(ls >> fmt >> inst.num_vars >> declared_clauses) || fmt != "cnf" || inst.num_vars < 1 ||
                declared_clauses < 0) {
                throw ParseError("line " + std::to_string(line_no) + ": malformed 'p cnf' header");
            }
            header_seen = true;
            continue;
        }
        if (!header_seen) throw ParseError("line " + std::to_string(line_no) + ": clause before 'p cnf' header");

        // Literal tokens; the current clause may span lines.
        std::istringstream body(line);
        int lit = 0;
        while (body >> lit) {
            if (lit == 0) {
                if (clause.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty clause");
                inst.clauses.push_back(clause);
                clause.clear();
                continue;
            }
            if (std::abs(lit) > inst.num_vars) {
                throw ParseError("line " + std::to_string(line_no) + ": literal " + std::to_string(lit) +
                                 " out of range for " + std::to_string(inst.num_vars) + " variables");
            }
            clause.push_back(lit);
        }
        if (!body.eof()) throw ParseError("line " + std::to_string(line_no) + ": non-numeric clause token");
    }
    if (!header_seen) throw ParseError("missing 'p cnf' header");
    if (!clause.empty()) throw ParseError("unterminated final clause (missing 0)");
    if (static_cast<int>(inst.clauses.size()) != declared_clauses) {
        throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses but file has " +
                         std::to_string(inst.clauses.size()));
    }
    return inst;
}

CnfInstance parse_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open CNF file '" + path + "'");
    return parse_dimacs(in);
}

CnfInstance with_first_clauses(const CnfInstance& inst, int n) {
    if (n < 1 || n > static_cast<int>(inst.clauses.size())) {
        throw std::invalid_argument("clause prefix length out of range");
    }
    CnfInstance out;
    out.num_vars = inst.num_vars;
    out.clauses.assign(inst.clauses.begin(), inst.clauses.begin() + n);
    return out;
}

FormulaPtr cnf_to_formula(const CnfInstance& inst) {
    if (inst.clauses.empty()) throw std::invalid_argument("cannot build a formula from an empty CNF");
    auto literal = [](int lit) {
        FormulaPtr p = prop(std::abs(lit) - 1);
        return lit < 0 ? negation(std::move(p)) : p;
    };
    std::vector<FormulaPtr> clause_nodes;
    clause_nodes.reserve(inst.clauses.size());
    for (const auto& clause : inst.clauses) {
        if (clause.size() == 1) {
            clause_nodes.push_back(literal(clause[0]));
            continue;
        }
        std::vector<FormulaPtr> lits;
        lits.reserve(clause.size());
        for (int lit : clause) lits.push_back(literal(lit));
        clause_nodes.push_back(disjunction(std::move(lits)));
    }
    if (clause_nodes.size() == 1) return clause_nodes[0];
    return conjunction(std::move(clause_nodes));
}

}  // namespace flr
