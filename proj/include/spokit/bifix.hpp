#ifndef SPOKIT_BIFIX_HPP
#define SPOKIT_BIFIX_HPP

#include <optional>
#include <vector>

#include "spokit/words.hpp"

namespace spokit {

// A finite set of nonempty words in which no word is a proper prefix or a
// proper suffix of another.
class BifixCode {
public:
    BifixCode() = default;
    explicit BifixCode(std::vector<Word> words);

    const std::vector<Word>& words() const { return words_; }
    bool contains(const Word& w) const;

private:
    std::vector<Word> words_;
};

// A word together with the lengths of its distinguished proper prefix and
// proper suffix, both members of the governing bifix code. The two marked
// blocks may overlap inside the word; when they do (len <= prefix_len +
// suffix_len) the word is called a bullet word.
struct MarkedWord {
    Word word;
    std::size_t prefix_len = 0;
    std::size_t suffix_len = 0;

    Word prefix_mark() const { return subword(word, 0, prefix_len); }
    Word suffix_mark() const { return subword(word, word.size() - suffix_len, suffix_len); }
    // The word with its suffix mark removed.
    Word ring() const { return subword(word, 0, word.size() - suffix_len); }
    bool bullet() const { return word.size() <= prefix_len + suffix_len; }

    bool operator==(const MarkedWord& o) const {
        return word == o.word && prefix_len == o.prefix_len && suffix_len == o.suffix_len;
    }
};

// Finds the unique bifix-code member that is a proper prefix (resp. proper
// suffix) of w; nullopt if none exists. Uniqueness is forced by bifixity.
std::optional<MarkedWord> find_marks(const BifixCode& f, const Word& w);

// True iff the suffix mark of a equals the prefix mark of b.
bool chainable(const MarkedWord& a, const MarkedWord& b);

// Overlap product: ring(a) followed by b, marked with a's prefix and b's
// suffix. Total; meaningful as a concatenation step only when chainable(a,b).
MarkedWord ostar(const MarkedWord& a, const MarkedWord& b);

// Left fold of ostar over a nonempty sequence.
MarkedWord ostar_product(const std::vector<MarkedWord>& seq);

}  // namespace spokit

#endif
