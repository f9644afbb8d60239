#include "flr/formula.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "flr/errors.hpp"

namespace flr {

namespace {

FormulaPtr make(Formula f) { return std::make_shared<Formula>(std::move(f)); }

}  // namespace

int Formula::node_count() const {
    int n = 1;
    for (const auto& c : children) n += c->node_count();
    return n;
}

bool Formula::quantifier_free() const {
    if (kind == Kind::Forall || kind == Kind::Exists) return false;
    return std::all_of(children.begin(), children.end(), [](const FormulaPtr& c) { return c->quantifier_free(); });
}

FormulaPtr prop(int id) {
    if (id < 0) throw std::invalid_argument("proposition id must be non-negative");
    Formula f;
    f.kind = Formula::Kind::Prop;
    f.prop = id;
    return make(std::move(f));
}

FormulaPtr atom(std::string pred, std::vector<std::string> args) {
    Formula f;
    f.kind = Formula::Kind::Atom;
    f.pred = std::move(pred);
    f.args = std::move(args);
    return make(std::move(f));
}

FormulaPtr constant(UnitValue v) {
    Formula f;
    f.kind = Formula::Kind::Const;
    f.value = v;
    return make(std::move(f));
}

FormulaPtr negation(FormulaPtr child) {
    Formula f;
    f.kind = Formula::Kind::Not;
    f.children.push_back(std::move(child));
    return make(std::move(f));
}

FormulaPtr conjunction(std::vector<FormulaPtr> children) {
    if (children.size() < 2) throw std::invalid_argument("conjunction needs at least 2 children");
    Formula f;
    f.kind = Formula::Kind::And;
    f.children = std::move(children);
    return make(std::move(f));
}

FormulaPtr disjunction(std::vector<FormulaPtr> children) {
    if (children.size() < 2) throw std::invalid_argument("disjunction needs at least 2 children");
    Formula f;
    f.kind = Formula::Kind::Or;
    f.children = std::move(children);
    return make(std::move(f));
}

FormulaPtr implies(FormulaPtr antecedent, FormulaPtr consequent) {
    Formula f;
    f.kind = Formula::Kind::Implies;
    f.children.push_back(std::move(antecedent));
    f.children.push_back(std::move(consequent));
    return make(std::move(f));
}

FormulaPtr forall(std::vector<std::string> vars, FormulaPtr body) {
    if (vars.empty()) throw std::invalid_argument("forall needs at least one variable");
    Formula f;
    f.kind = Formula::Kind::Forall;
    f.vars = std::move(vars);
    f.children.push_back(std::move(body));
    return make(std::move(f));
}

FormulaPtr exists(std::vector<std::string> vars, FormulaPtr body) {
    if (vars.empty()) throw std::invalid_argument("exists needs at least one variable");
    Formula f;
    f.kind = Formula::Kind::Exists;
    f.vars = std::move(vars);
    f.children.push_back(std::move(body));
    return make(std::move(f));
}

FormulaPtr agg_all(std::vector<FormulaPtr> instances) {
    if (instances.empty()) throw std::invalid_argument("aggregation needs at least one instance");
    Formula f;
    f.kind = Formula::Kind::AggAll;
    f.children = std::move(instances);
    return make(std::move(f));
}

FormulaPtr agg_any(std::vector<FormulaPtr> instances) {
    if (instances.empty()) throw std::invalid_argument("aggregation needs at least one instance");
    Formula f;
    f.kind = Formula::Kind::AggAny;
    f.children = std::move(instances);
    return make(std::move(f));
}

int max_prop_id(const Formula& f) {
    int m = (f.kind == Formula::Kind::Prop) ? f.prop : -1;
    for (const auto& c : f.children) m = std::max(m, max_prop_id(*c));
    return m;
}

// ---------------------------------------------------------------------------
// S-expression parsing
// ---------------------------------------------------------------------------

namespace {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of formula");
        return text[pos];
    }

    void expect(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos));
        ++pos;
    }

    std::string symbol() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != '(' && text[pos] != ')') ++pos;
        if (pos == start) throw ParseError("expected symbol at offset " + std::to_string(pos));
        return std::string(text.substr(start, pos - start));
    }
};

bool looks_numeric(const std::string& s) {
    if (s.empty()) return false;
    char c = s[0];
    return std::isdigit(static_cast<unsigned char>(c)) || ((c == '-' || c == '+' || c == '.') && s.size() > 1);
}

FormulaPtr parse_expr(Lexer& lx);

std::vector<std::string> parse_var_list(Lexer& lx) {
    lx.expect('(');
    std::vector<std::string> vars;
    while (lx.peek() != ')') vars.push_back(lx.symbol());
    lx.expect(')');
    if (vars.empty()) throw ParseError("empty quantifier variable list");
    return vars;
}

FormulaPtr parse_expr(Lexer& lx) {
    if (lx.peek() != '(') {
        std::string sym = lx.symbol();
        if (looks_numeric(sym)) {
            try {
                return constant(UnitValue(std::stod(sym)));
            } catch (const std::invalid_argument& e) {
                throw ParseError(std::string("bad constant '") + sym + "': " + e.what());
            }
        }
        return atom(sym, {});
    }
    lx.expect('(');
    std::string head = lx.symbol();
    FormulaPtr result;
    if (head == "and" || head == "or") {
        std::vector<FormulaPtr> children;
        while (lx.peek() != ')') children.push_back(parse_expr(lx));
        if (children.size() < 2) throw ParseError("'" + head + "' needs at least 2 operands");
        result = head == "and" ? conjunction(std::move(children)) : disjunction(std::move(children));
    } else if (head == "not") {
        result = negation(parse_expr(lx));
    } else if (head == "=>" || head == "implies") {
        FormulaPtr a = parse_expr(lx);
        FormulaPtr c = parse_expr(lx);
        result = implies(std::move(a), std::move(c));
    } else if (head == "forall" || head == "exists") {
        std::vector<std::string> vars = parse_var_list(lx);
        FormulaPtr body = parse_expr(lx);
        result = head == "forall" ? forall(std::move(vars), std::move(body)) : exists(std::move(vars), std::move(body));
    } else {
        // predicate application
        std::vector<std::string> args;
        while (lx.peek() != ')') args.push_back(lx.symbol());
        lx.expect(')');
        return atom(std::move(head), std::move(args));
    }
    lx.expect(')');
    return result;
}

}  // namespace

FormulaPtr parse_formula(std::string_view text) {
    Lexer lx{text};
    FormulaPtr f = parse_expr(lx);
    if (!lx.eof()) throw ParseError("trailing text after formula at offset " + std::to_string(lx.pos));
    return f;
}

std::string to_sexpr(const Formula& f) {
    std::ostringstream os;
    switch (f.kind) {
        case Formula::Kind::Prop:
            os << "p" << f.prop;
            break;
        case Formula::Kind::Atom:
            if (f.args.empty()) {
                os << f.pred;
            } else {
                os << '(' << f.pred;
                for (const auto& a : f.args) os << ' ' << a;
                os << ')';
            }
            break;
        case Formula::Kind::Const:
            os << f.value;
            break;
        case Formula::Kind::Not:
            os << "(not " << to_sexpr(*f.children[0]) << ')';
            break;
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::AggAll:
        case Formula::Kind::AggAny: {
            const char* head = f.kind == Formula::Kind::And   ? "and"
                               : f.kind == Formula::Kind::Or  ? "or"
                               : f.kind == Formula::Kind::AggAll ? "agg-all"
                                                                 : "agg-any";
            os << '(' << head;
            for (const auto& c : f.children) os << ' ' << to_sexpr(*c);
            os << ')';
            break;
        }
        case Formula::Kind::Implies:
            os << "(=> " << to_sexpr(*f.children[0]) << ' ' << to_sexpr(*f.children[1]) << ')';
            break;
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            os << (f.kind == Formula::Kind::Forall ? "(forall (" : "(exists (");
            for (std::size_t i = 0; i < f.vars.size(); ++i) os << (i ? " " : "") << f.vars[i];
            os << ") " << to_sexpr(*f.children[0]) << ')';
            break;
        }
    }
    return os.str();
}

}  // namespace flr
