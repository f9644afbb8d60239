#include "flr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace flr::oracle {

RefinementResult brute_force_refine(const Connective& f, const RefineInput& in, double grid_step, double feas_tol) {
    const std::size_t n = in.t.size();
    if (n == 0 || n > 4) throw std::invalid_argument("brute_force_refine supports 1 <= n <= 4");
    if (grid_step < 0.005) throw std::invalid_argument("brute_force_refine needs grid_step >= 0.005");
    if (feas_tol < 0.0) feas_tol = 0.5 * static_cast<double>(n) * grid_step;

    // Candidate coordinates: the grid plus the original value of each slot.
    std::vector<std::vector<double>> candidates(n);
    const int steps = static_cast<int>(std::round(1.0 / grid_step));
    for (std::size_t i = 0; i < n; ++i) {
        auto& c = candidates[i];
        c.reserve(static_cast<std::size_t>(steps) + 2);
        for (int k = 0; k <= steps; ++k) c.push_back(std::min(static_cast<double>(k) * grid_step, 1.0));
        c.push_back(in.t[i]);
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
    }

    std::vector<double> w(n, 0.0);
    std::vector<std::size_t> idx(n, 0);
    std::vector<double> best;
    double best_dist = std::numeric_limits<double>::infinity();
    double best_val = 0.0;

    bool done = false;
    while (!done) {
        for (std::size_t i = 0; i < n; ++i) w[i] = candidates[i][idx[i]];
        const double val = f(w);
        if (std::abs(val - in.target) <= feas_tol) {
            const double dist = norm_distance(in.norm, w, in.t);
            if (dist < best_dist) {
                best_dist = dist;
                best = w;
                best_val = val;
            }
        }
        done = true;
        for (std::size_t i = n; i-- > 0;) {
            if (++idx[i] < candidates[i].size()) {
                done = false;
                break;
            }
            idx[i] = 0;
        }
    }

    if (best.empty()) throw std::runtime_error("brute_force_refine: no feasible grid point for the target");
    RefinementResult r;
    r.refined = std::move(best);
    r.achieved = best_val;
    r.distance = best_dist;
    return r;
}

}  // namespace flr::oracle
