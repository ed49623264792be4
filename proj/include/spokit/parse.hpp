#ifndef SPOKIT_PARSE_HPP
#define SPOKIT_PARSE_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "spokit/spo_code.hpp"
#include "spokit/words.hpp"

namespace spokit {

// One way of covering a window by a chain of code words. Factor k occupies
// [start[k], start[k] + len(word_k)); consecutive factors overlap in their
// shared mark, so factor k+1 starts where the ring of factor k ends. The
// first factor reaches position 0 with its ring and the last factor covers
// the right edge; interior factors are whole.
struct WindowParse {
    std::vector<std::size_t> factors;  // indices into the code
    std::vector<long> starts;          // aligned so the window is [0, n)
    bool left_truncated = false;       // first factor cut by the left edge
    bool right_truncated = false;      // last factor cut by the right edge
    bool full() const { return !left_truncated && !right_truncated; }
};

// interior cut pairs of a chain: for each boundary, (start of the next
// word, end of the previous word) in product coordinates
std::vector<std::pair<long, long>> chain_cuts(const SpoCode& code,
                                              const std::vector<std::size_t>& factors);

// every parse of the window w, in deterministic order
std::vector<WindowParse> parse_window(const SpoCode& code, const Word& w);

// search over complete concatenation words up to length `horizon` for one
// generated by two different chains
struct UnambiguityReport {
    bool unambiguous = true;
    std::size_t horizon = 0;
    std::size_t products_checked = 0;
    std::optional<Word> witness;
    std::vector<std::vector<std::size_t>> witness_chains;
    std::vector<std::vector<std::pair<long, long>>> witness_cuts;
};

UnambiguityReport check_unambiguous(const SpoCode& code, std::size_t horizon,
                                    std::size_t budget = 10000000);

}  // namespace spokit

#endif
