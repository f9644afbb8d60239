#include "flr/analysis.hpp"

#include <stdexcept>
#include <vector>

#include "flr/rng.hpp"

namespace flr {

double nonvanishing_fraction_mc(const AggregatorKind& kind, int n, int samples, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("nonvanishing_fraction_mc requires n >= 2");
    if (samples < 1) throw std::invalid_argument("nonvanishing_fraction_mc requires samples >= 1");

    CounterRng rng(splitmix64(seed));
    std::vector<double> x(static_cast<std::size_t>(n));
    long hits = 0;
    for (int s = 0; s < samples; ++s) {
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = rng.next();
        VecGrad g = aggregate_grad(kind, x);
        if (g.flagged) continue;  // measure-zero loci; treat as vanishing
        for (double d : g.dx) {
            if (d != 0.0) {
                ++hits;
                break;
            }
        }
    }
    return static_cast<double>(hits) / static_cast<double>(samples);
}

}  // namespace flr
