#ifndef SPOKIT_DERIVED_HPP
#define SPOKIT_DERIVED_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "spokit/engine.hpp"
#include "spokit/parse.hpp"
#include "spokit/spectral.hpp"
#include "spokit/spo_code.hpp"
#include "spokit/words.hpp"

namespace spokit {

// Chains of plain words closed off by an overlap word, multiplied out.
// When the code has no overlap words the result is empty and flagged.
struct HatCode {
    std::vector<MarkedWord> words;
    std::vector<std::vector<std::size_t>> chains;  // first generating chain
    std::vector<Word> collisions;  // produced by more than one chain
    std::size_t length_cap = 0;
    bool no_bullets = false;
    bool truncated = false;  // the cap cut off longer chains
};

HatCode hat_code(const SpoCode& code, std::size_t length_cap);

// Rings of the hat words together with the carried front mark and the
// allowed-successor table.
struct MarkovCode {
    std::vector<Word> words;
    std::vector<Word> prefix_marks;
    std::vector<std::vector<std::uint8_t>> transition;
    std::vector<std::size_t> origin;  // first hat word giving each ring
    std::vector<Word> merged;         // rings shared by several hat words
};

MarkovCode markov_code(const SpoCode& code, const HatCode& hat);

// Positions inside the ring words, wired along the successor table.
struct EdgeShift {
    std::vector<std::pair<std::size_t, std::size_t>> states;  // (word, position)
    IntMatrix adjacency;
};

EdgeShift edge_shift(const MarkovCode& mc);

// Where the window start sits inside a parsed chain: the ring covering
// position 0 and the distance walked into it.
struct PhiState {
    std::size_t markov_index = 0;
    std::size_t offset = 0;  // 0-based position inside the ring
    std::size_t edge_state = 0;  // index into EdgeShift::states
};

PhiState phi_index(const MarkovCode& mc, const SpoCode& hat_as_code,
                   const WindowParse& parse);

// Length-n comparison of complete concatenation words against the rest of
// the admissible words.
struct EntropyGapReport {
    std::size_t n = 0;
    std::size_t product_count = 0;
    std::size_t other_count = 0;
    std::optional<double> inner_rate;
    std::optional<double> outer_rate;
};

EntropyGapReport entropy_gap(const Engine& eng, std::size_t n);

}  // namespace spokit

#endif
