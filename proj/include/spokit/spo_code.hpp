#ifndef SPOKIT_SPO_CODE_HPP
#define SPOKIT_SPO_CODE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "spokit/bifix.hpp"
#include "spokit/presentation.hpp"
#include "spokit/words.hpp"

namespace spokit {

// A finite code over a bifix code, with every member carrying its end marks.
// Words missing one of the marks may be kept as flagged extras; they take no
// part in chaining.
class SpoCode {
public:
    SpoCode(Alphabet alphabet, BifixCode bifix, std::vector<Word> words,
            bool keep_flagged = false);

    const Alphabet& alphabet() const { return alphabet_; }
    const BifixCode& bifix() const { return bifix_; }
    const std::vector<MarkedWord>& words() const { return words_; }
    const std::vector<Word>& flagged() const { return flagged_; }

    std::vector<std::size_t> bullet_indices() const;
    bool all_bullet() const;

    // index of a marked word by its letters
    std::optional<std::size_t> index_of(const Word& w) const;

    // chain successors of word i
    std::vector<std::size_t> successors(std::size_t i) const;

    Presentation presentation() const;

private:
    Alphabet alphabet_;
    BifixCode bifix_;
    std::vector<MarkedWord> words_;
    std::vector<Word> flagged_;
};

}  // namespace spokit

#endif
