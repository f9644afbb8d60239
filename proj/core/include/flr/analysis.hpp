#pragma once

#include <cstdint>

#include "flr/operators.hpp"

namespace flr {

/// Monte-Carlo estimate of the fraction of points in [0,1]^n at which the
/// aggregator has at least one nonzero partial derivative. Deterministic for
/// a fixed seed; points flagged as kinks count as vanishing.
double nonvanishing_fraction_mc(const AggregatorKind& kind, int n, int samples, std::uint64_t seed);

}  // namespace flr
