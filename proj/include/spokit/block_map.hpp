#ifndef SPOKIT_BLOCK_MAP_HPP
#define SPOKIT_BLOCK_MAP_HPP

#include <cstddef>
#include <map>

#include "spokit/words.hpp"

namespace spokit {

// Sliding window recoding: output symbol i is table[w[i-memory .. i+anticipation]].
// Applying it to a word of length n yields length n - memory - anticipation.
class BlockMap {
public:
    BlockMap(Alphabet from, Alphabet to, std::size_t memory,
             std::size_t anticipation, std::map<Word, Symbol> table);

    const Alphabet& from() const { return from_; }
    const Alphabet& to() const { return to_; }
    std::size_t memory() const { return memory_; }
    std::size_t anticipation() const { return anticipation_; }
    std::size_t window() const { return memory_ + 1 + anticipation_; }

    Word apply(const Word& w) const;

private:
    Alphabet from_;
    Alphabet to_;
    std::size_t memory_;
    std::size_t anticipation_;
    std::map<Word, Symbol> table_;
};

}  // namespace spokit

#endif
