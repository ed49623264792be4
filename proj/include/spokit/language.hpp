#ifndef SPOKIT_LANGUAGE_HPP
#define SPOKIT_LANGUAGE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "spokit/engine.hpp"
#include "spokit/presentation.hpp"
#include "spokit/words.hpp"

namespace spokit {

struct LanguageTable {
    Alphabet alphabet;
    std::size_t max_len = 0;
    std::vector<Word> words;  // shortlex sorted

    // one line per word: "<length>\t<comma joined symbols>\n"
    std::string serialize() const;
};

LanguageTable compute_language(const Engine& eng, const Alphabet& alphabet,
                               std::size_t n);

// admissible words that no longer extend on one side under the window
// convention; reported, never removed from the table
struct ExtendabilityReport {
    std::size_t total = 0;
    std::size_t right_blocked = 0;
    std::size_t left_blocked = 0;
    std::vector<Word> right_examples;
    std::vector<Word> left_examples;
    static constexpr std::size_t max_examples = 8;
};

ExtendabilityReport extendability_report(const Engine& eng,
                                         const LanguageTable& table);

}  // namespace spokit

#endif
