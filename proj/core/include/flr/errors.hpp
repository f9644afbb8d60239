#pragma once

#include <stdexcept>
#include <string>

namespace flr {

/// Malformed input files (DIMACS, knowledge-base JSON, formula text).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Operator/algorithm combinations that have no supported implementation,
/// e.g. ILR with a Yager t-norm or an L2 product refinement.
struct UnsupportedError : std::runtime_error {
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace flr
