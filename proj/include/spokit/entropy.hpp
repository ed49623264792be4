#ifndef SPOKIT_ENTROPY_HPP
#define SPOKIT_ENTROPY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "spokit/engine.hpp"
#include "spokit/spectral.hpp"

namespace spokit {

// growth rate estimate log|L_k| / k for k up to max_len
struct EntropyEstimate {
    std::size_t max_len = 0;
    std::vector<std::uint64_t> counts;
    std::vector<bool> counts_exact;
    std::vector<double> rates;  // rate[k-1]; only meaningful when counts[k-1] > 0
    std::optional<double> final_rate;
};

EntropyEstimate entropy_estimate(const Engine& eng, std::size_t n);

// entropy of an edge graph as the log of its largest eigenvalue; a graph
// with no bi-infinite paths has no entropy to speak of
std::optional<double> graph_entropy(const IntMatrix& a);

}  // namespace spokit

#endif
