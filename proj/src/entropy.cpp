#include "spokit/entropy.hpp"

#include <cmath>

namespace spokit {

EntropyEstimate entropy_estimate(const Engine& eng, std::size_t n) {
    EntropyEstimate est;
    est.max_len = n;
    auto c = eng.counts(n);
    est.counts = c.count;
    est.counts_exact = c.count_exact;
    est.rates.assign(n, 0.0);
    for (std::size_t k = 1; k <= n; ++k) {
        if (c.count[k - 1] > 0) {
            est.rates[k - 1] = c.log_count[k - 1] / static_cast<double>(k);
        }
    }
    for (std::size_t k = n; k >= 1; --k) {
        if (c.count[k - 1] > 0) {
            est.final_rate = est.rates[k - 1];
            break;
        }
    }
    return est;
}

std::optional<double> graph_entropy(const IntMatrix& a) {
    double r = spectral_radius(a);
    if (r < 1.0 - 1e-9) return std::nullopt;
    return std::log(r);
}

}  // namespace spokit
