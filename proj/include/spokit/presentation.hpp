#ifndef SPOKIT_PRESENTATION_HPP
#define SPOKIT_PRESENTATION_HPP

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spokit/bifix.hpp"
#include "spokit/words.hpp"

namespace spokit {

// Shift of finite type given by a finite list of forbidden words.
// An empty list presents the full shift.
struct SftData {
    std::vector<Word> forbidden;
};

struct LabeledEdge {
    int from = 0;
    int to = 0;
    Symbol label = 0;
};

// Labeled graph presentation. Every vertex must have at least one outgoing
// and one incoming edge.
struct SoficData {
    std::vector<std::string> state_names;
    std::vector<LabeledEdge> edges;
};

// Free concatenations of a finite list of code words.
struct CodedData {
    std::vector<Word> words;
};

// Concatenations with overlap: consecutive words share the block that is
// both the suffix mark of the left word and the prefix mark of the right
// word. Words lacking a suffix mark cannot take successors; they are kept
// in flagged_words and excluded from chaining.
struct SpoData {
    BifixCode bifix;
    std::vector<MarkedWord> words;
    std::vector<Word> flagged_words;
};

// Concatenations of rings constrained by an explicit 0/1 transition
// relation; prefix marks are retained so transitions can be audited
// against the generating overlap code.
struct MarkovData {
    std::vector<Word> words;
    std::vector<Word> prefix_marks;
    std::vector<std::vector<std::uint8_t>> transition;
};

// Produces every excluded word up to a requested length.
class ExclusionSource {
public:
    virtual ~ExclusionSource() = default;
    virtual std::vector<Word> words_up_to(std::size_t max_len) const = 0;
    virtual std::string describe() const = 0;
};

// Finite, explicitly listed exclusions.
class ListExclusions : public ExclusionSource {
public:
    explicit ListExclusions(std::vector<Word> words);
    std::vector<Word> words_up_to(std::size_t max_len) const override;
    std::string describe() const override { return "explicit list"; }

private:
    std::vector<Word> words_;
};

// Free concatenations of code words from which every window containing an
// excluded factor is removed. Exclusions are evaluated up to the window
// scale in use.
struct ExclusionData {
    std::vector<Word> words;
    std::shared_ptr<const ExclusionSource> exclusions;
};

struct Presentation {
    Alphabet alphabet;
    std::variant<SftData, SoficData, CodedData, SpoData, MarkovData, ExclusionData> data;
    // Cap on stored or visited words during enumerations.
    std::size_t budget = 10000000;
    // Context padding for the coded window semantics; defaults to the
    // maximum code-word length.
    std::optional<std::size_t> margin;

    const char* variant_name() const;
    // Margin actually in effect.
    std::size_t effective_margin() const;
    // Checks symbols in range, sofic in/out degrees, marks consistency.
    void validate() const;
};

Presentation make_sft(Alphabet a, std::vector<Word> forbidden);
Presentation make_sofic(Alphabet a, std::vector<std::string> states, std::vector<LabeledEdge> edges);
Presentation make_coded(Alphabet a, std::vector<Word> words);
Presentation make_spo(Alphabet a, BifixCode f, std::vector<MarkedWord> words,
                      std::vector<Word> flagged = {});
Presentation make_markov(Alphabet a, std::vector<Word> words, std::vector<Word> prefix_marks,
                         std::vector<std::vector<std::uint8_t>> transition);
Presentation make_exclusion(Alphabet a, std::vector<Word> words,
                            std::shared_ptr<const ExclusionSource> exclusions);

}  // namespace spokit

#endif
