#include "flr/knowledge_base.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "flr/errors.hpp"

namespace flr {

Interpretation::Interpretation(std::vector<std::string> domain, std::vector<std::pair<std::string, int>> predicates)
    : domain_(std::move(domain)), predicates_(std::move(predicates)) {
    if (domain_.empty()) throw std::invalid_argument("interpretation domain must not be empty");
    for (std::size_t i = 0; i < domain_.size(); ++i) {
        if (!object_index_.emplace(domain_[i], static_cast<int>(i)).second) {
            throw std::invalid_argument("duplicate domain object '" + domain_[i] + "'");
        }
    }
    int next = 0;
    for (std::size_t pi = 0; pi < predicates_.size(); ++pi) {
        const auto& [name, arity] = predicates_[pi];
        if (arity < 0) throw std::invalid_argument("negative arity for predicate '" + name + "'");
        if (!pred_index_.emplace(name, static_cast<int>(pi)).second) {
            throw std::invalid_argument("duplicate predicate '" + name + "'");
        }
        pred_base_.push_back(next);
        // enumerate object tuples lexicographically
        std::vector<int> idx(static_cast<std::size_t>(arity), 0);
        long tuples = 1;
        for (int k = 0; k < arity; ++k) tuples *= static_cast<long>(domain_.size());
        for (long t = 0; t < tuples; ++t) {
            std::string s = name + "(";
            long rem = t;
            long stride = tuples;
            for (int k = 0; k < arity; ++k) {
                stride /= static_cast<long>(domain_.size());
                long oi = rem / stride;
                rem %= stride;
                s += (k ? "," : "") + domain_[static_cast<std::size_t>(oi)];
            }
            s += ")";
            if (arity == 0) s = name;
            atom_names_.push_back(s);
            ++next;
        }
    }
    truth_.assign(atom_names_.size(), 0.0);
}

int Interpretation::atom_id(const std::string& pred, const std::vector<std::string>& objects) const {
    auto pit = pred_index_.find(pred);
    if (pit == pred_index_.end()) throw std::invalid_argument("unknown predicate '" + pred + "'");
    const int pi = pit->second;
    const int arity = predicates_[static_cast<std::size_t>(pi)].second;
    if (static_cast<int>(objects.size()) != arity) {
        throw std::invalid_argument("predicate '" + pred + "' expects " + std::to_string(arity) + " arguments");
    }
    long offset = 0;
    for (const auto& o : objects) {
        auto oit = object_index_.find(o);
        if (oit == object_index_.end()) throw std::invalid_argument("unknown object '" + o + "'");
        offset = offset * static_cast<long>(domain_.size()) + oit->second;
    }
    return pred_base_[static_cast<std::size_t>(pi)] + static_cast<int>(offset);
}

void Interpretation::set(const std::string& pred, const std::vector<std::string>& objects, UnitValue v) {
    truth_[static_cast<std::size_t>(atom_id(pred, objects))] = v;
}

void Interpretation::set_by_name(const std::string& atom_text, UnitValue v) {
    auto open = atom_text.find('(');
    if (open == std::string::npos) {
        set(atom_text, {}, v);
        return;
    }
    if (atom_text.back() != ')') throw ParseError("malformed atom '" + atom_text + "'");
    std::string pred = atom_text.substr(0, open);
    std::string inner = atom_text.substr(open + 1, atom_text.size() - open - 2);
    std::vector<std::string> objects;
    std::string cur;
    for (char ch : inner) {
        if (ch == ',') {
            objects.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (!cur.empty()) objects.push_back(cur);
    set(pred, objects, v);
}

namespace {

using Scope = std::vector<std::pair<std::string, std::string>>;  // variable -> object

const std::string* lookup(const Scope& scope, const std::string& var) {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
        if (it->first == var) return &it->second;
    }
    return nullptr;
}

FormulaPtr ground_rec(const FormulaPtr& f, const Interpretation& interp, Scope& scope) {
    switch (f->kind) {
        case Formula::Kind::Prop:
        case Formula::Kind::Const:
            return f;
        case Formula::Kind::Atom: {
            std::vector<std::string> objects;
            objects.reserve(f->args.size());
            for (const auto& a : f->args) {
                if (const std::string* obj = lookup(scope, a)) {
                    objects.push_back(*obj);
                } else {
                    throw std::invalid_argument("unbound variable '" + a + "' in atom '" + f->pred + "'");
                }
            }
            return prop(interp.atom_id(f->pred, objects));
        }
        case Formula::Kind::Not:
            return negation(ground_rec(f->children[0], interp, scope));
        case Formula::Kind::And:
        case Formula::Kind::Or:
        case Formula::Kind::AggAll:
        case Formula::Kind::AggAny: {
            std::vector<FormulaPtr> children;
            children.reserve(f->children.size());
            for (const auto& c : f->children) children.push_back(ground_rec(c, interp, scope));
            switch (f->kind) {
                case Formula::Kind::And: return conjunction(std::move(children));
                case Formula::Kind::Or: return disjunction(std::move(children));
                case Formula::Kind::AggAll: return agg_all(std::move(children));
                default: return agg_any(std::move(children));
            }
        }
        case Formula::Kind::Implies:
            return implies(ground_rec(f->children[0], interp, scope), ground_rec(f->children[1], interp, scope));
        case Formula::Kind::Forall:
        case Formula::Kind::Exists: {
            for (std::size_t i = 0; i < f->vars.size(); ++i) {
                if (lookup(scope, f->vars[i])) {
                    throw std::invalid_argument("variable '" + f->vars[i] + "' bound twice");
                }
                for (std::size_t j = i + 1; j < f->vars.size(); ++j) {
                    if (f->vars[i] == f->vars[j]) {
                        throw std::invalid_argument("variable '" + f->vars[i] + "' bound twice");
                    }
                }
            }
            const auto& domain = interp.domain();
            std::vector<FormulaPtr> instances;
            // Enumerate assignments with the leftmost variable outermost.
            std::vector<std::size_t> idx(f->vars.size(), 0);
            bool done = false;
            while (!done) {
                for (std::size_t k = 0; k < f->vars.size(); ++k) scope.emplace_back(f->vars[k], domain[idx[k]]);
                instances.push_back(ground_rec(f->children[0], interp, scope));
                scope.resize(scope.size() - f->vars.size());
                done = true;
                for (std::size_t k = f->vars.size(); k-- > 0;) {
                    if (++idx[k] < domain.size()) {
                        done = false;
                        break;
                    }
                    idx[k] = 0;
                }
            }
            return f->kind == Formula::Kind::Forall ? agg_all(std::move(instances)) : agg_any(std::move(instances));
        }
    }
    throw std::logic_error("bad formula kind");
}

}  // namespace

FormulaPtr ground(const FormulaPtr& formula, const Interpretation& interp) {
    Scope scope;
    return ground_rec(formula, interp, scope);
}

KnowledgeBase load_kb_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid knowledge-base JSON: ") + e.what());
    }
    try {
        std::vector<std::string> domain = j.at("domain").get<std::vector<std::string>>();
        std::vector<std::pair<std::string, int>> predicates;
        for (const auto& [name, arity] : j.at("predicates").items()) {
            predicates.emplace_back(name, arity.get<int>());
        }
        Interpretation interp(std::move(domain), std::move(predicates));
        if (j.contains("interpretation")) {
            for (const auto& [atom_text, v] : j.at("interpretation").items()) {
                interp.set_by_name(atom_text, UnitValue(v.get<double>()));
            }
        }
        KnowledgeBase kb{{}, std::move(interp)};
        for (const auto& jf : j.at("formulas")) {
            WeightedFormula wf;
            wf.weight = jf.value("weight", 1.0);
            if (!(wf.weight > 0.0)) throw ParseError("formula weight must be positive");
            wf.formula = parse_formula(jf.at("expr").get<std::string>());
            wf.grounded = ground(wf.formula, kb.interp);
            kb.formulas.push_back(std::move(wf));
        }
        return kb;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("knowledge-base JSON missing field: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad knowledge base: ") + e.what());
    }
}

KnowledgeBase load_kb_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open knowledge base '" + path + "'");
    return load_kb_json(in);
}

}  // namespace flr
