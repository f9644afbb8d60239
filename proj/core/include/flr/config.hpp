#pragma once

#include <string>

#include "flr/operators.hpp"

namespace flr {

/// Operator tuple interpreting one fuzzy semantics. Negation is always the
/// strong negation 1 - a.
struct LogicConfig {
    TNormKind tnorm;
    TConormKind tconorm;
    ImplicationKind implication;
    AggregatorKind universal;
    AggregatorKind existential;
    std::string name;
};

enum class LogicFamily { Godel, Product, Lukasiewicz };

/// A symmetric configuration derives every operator from one t-norm family:
/// the dual t-conorm, its S- or R-implication, and the extended aggregators.
LogicConfig symmetric_config(LogicFamily family, bool r_implication = false);

/// Named presets for the CLI: godel, godel_r, product, product_r,
/// lukasiewicz, product_log (log-product universal aggregator).
LogicConfig config_by_name(const std::string& name);

}  // namespace flr
