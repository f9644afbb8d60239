#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "flr/rng.hpp"

namespace flr::testing {

/// Platform-stable uniform stream for randomized tests.
class Uniform {
public:
    explicit Uniform(std::uint64_t seed) : rng_(splitmix64(seed)) {}

    double next() { return rng_.next(); }
    double range(double lo, double hi) { return lo + (hi - lo) * next(); }

private:
    CounterRng rng_;
};

/// Central finite difference of a scalar function of one coordinate.
inline double central_diff(const std::function<double(double)>& f, double x, double h = 1e-5) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Tolerance of the derivative suite: max(1e-6 abs, 1e-4 rel).
inline bool grad_close(double analytic, double fd) {
    const double err = std::abs(analytic - fd);
    return err <= std::max(1e-6, 1e-4 * std::abs(analytic));
}

}  // namespace flr::testing
