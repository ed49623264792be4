#ifndef SPOKIT_SYNCHRO_HPP
#define SPOKIT_SYNCHRO_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spokit/bifix.hpp"
#include "spokit/engine.hpp"
#include "spokit/spo_code.hpp"
#include "spokit/words.hpp"

namespace spokit {

// Verdict of the bounded synchronizing-word test. A refutation carries
// contexts with left.word and word.right admissible but the glued word not.
// exact means the verdict is certified over the whole subset family of an
// exact presentation rather than only up to the tested depth.
struct SynchroVerdict {
    Word word;
    std::size_t depth = 0;
    bool synchronizing = false;
    bool exact = false;
    Word refuted_left;
    Word refuted_right;
};

SynchroVerdict is_synchronizing_at_depth(const Engine& eng, const Word& w,
                                         std::size_t depth);

// Per position i, the largest start j such that window[j..i] passes the
// synchronizing test, or empty when no suffix ending at i passes.
struct JProfile {
    Word window;
    std::size_t depth = 0;
    std::vector<std::optional<std::size_t>> values;
};

JProfile j_profile(const Engine& eng, const Word& w, std::size_t depth);

// Minimal synchronizing words found within the bounds plus the derived
// code: synchronizing words whose minimal-synchronizing occurrences are
// exactly one proper prefix and one proper suffix.
struct CanonicalCodeResult {
    std::size_t max_len = 0;
    std::size_t depth = 0;
    std::vector<Word> minimal_words;
    std::vector<Word> code_words;
    bool all_exact = false;
    std::optional<bool> transitive;
    std::vector<std::pair<Word, Word>> bifix_violations;
    std::optional<BifixCode> bifix;
    std::optional<SpoCode> code;
    std::string diagnostic;
};

CanonicalCodeResult extract_canonical_code(const Engine& eng,
                                           const Alphabet& alphabet,
                                           std::size_t max_len,
                                           std::size_t depth);

// Mark-to-length slack of each marked code word, with the running maximum
// by enumeration length. An unbounded supremum is the interesting case;
// the report only ever states finite-scale evidence.
struct ConditionHEntry {
    Word word;
    long gap = 0;
};

struct ConditionHReport {
    std::size_t max_len = 0;
    std::vector<ConditionHEntry> entries;
    std::vector<std::optional<long>> running_max;
    std::size_t flagged_skipped = 0;
};

ConditionHReport condition_h_report(const SpoCode& code, std::size_t n);

// strictly increasing running maxima across the sampled lengths
bool condition_h_consistent(const ConditionHReport& r,
                            const std::vector<std::size_t>& lens);

// For m = 1..pred_len, the number of distinct depth-truncated follower
// sets of ba over left contexts b of length at most m.
struct MarkovBoundaryReport {
    Word word;
    std::size_t pred_len = 0;
    std::size_t ctx_depth = 0;
    std::vector<std::size_t> distinct_counts;
    bool strictly_growing = false;
};

MarkovBoundaryReport markov_boundary_test(const Engine& eng, const Word& a,
                                          std::size_t pred_len,
                                          std::size_t ctx_depth);

// Right extensions compatible with every bounded left context of a, and
// the mirrored variant.
std::vector<Word> omega_set_bounded(const Engine& eng, const Word& a,
                                    std::size_t depth);
std::vector<Word> omega_set_bounded_left(const Engine& eng, const Word& a,
                                         std::size_t depth);

}  // namespace spokit

#endif
