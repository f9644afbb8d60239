#include "flr/config.hpp"

#include "flr/errors.hpp"

namespace flr {

LogicConfig symmetric_config(LogicFamily family, bool r_implication) {
    switch (family) {
        case LogicFamily::Godel:
            return {TNormKind::godel(), TConormKind::godel(),
                    r_implication ? ImplicationKind::godel_r() : ImplicationKind::kleene_dienes(),
                    AggregatorKind::min(), AggregatorKind::max(), r_implication ? "godel_r" : "godel"};
        case LogicFamily::Product:
            return {TNormKind::product(), TConormKind::product(),
                    r_implication ? ImplicationKind::goguen() : ImplicationKind::reichenbach(),
                    AggregatorKind::product(), AggregatorKind::prob_sum(), r_implication ? "product_r" : "product"};
        case LogicFamily::Lukasiewicz:
            // The Lukasiewicz implication is both the S- and the R-implication.
            return {TNormKind::lukasiewicz(), TConormKind::lukasiewicz(), ImplicationKind::lukasiewicz(),
                    AggregatorKind::lukasiewicz_a(), AggregatorKind::lukasiewicz_e(), "lukasiewicz"};
    }
    throw std::logic_error("bad logic family");
}

LogicConfig config_by_name(const std::string& name) {
    if (name == "godel") return symmetric_config(LogicFamily::Godel);
    if (name == "godel_r") return symmetric_config(LogicFamily::Godel, true);
    if (name == "product") return symmetric_config(LogicFamily::Product);
    if (name == "product_r") return symmetric_config(LogicFamily::Product, true);
    if (name == "lukasiewicz") return symmetric_config(LogicFamily::Lukasiewicz);
    if (name == "product_log") {
        LogicConfig c = symmetric_config(LogicFamily::Product);
        c.universal = AggregatorKind::log_product();
        c.name = "product_log";
        return c;
    }
    throw UnsupportedError("unknown logic config '" + name + "'");
}

}  // namespace flr
