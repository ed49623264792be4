#ifndef SPOKIT_EXAMPLES_HPP
#define SPOKIT_EXAMPLES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spokit/engine.hpp"
#include "spokit/presentation.hpp"
#include "spokit/spo_code.hpp"
#include "spokit/words.hpp"

namespace spokit {

// Example family 1: marked words around periodic blocks, built over the
// alphabet {g, d} plus a user alphabet carrying the periodic points. The
// third word family ends in a bare d-run, cannot carry a suffix mark, and
// is kept flagged.
struct Example1 {
    Alphabet alphabet;  // g, d, then the inner symbols
    Symbol gamma = 0;
    Symbol delta = 1;
    std::vector<Word> periods;  // least-period blocks over the full alphabet
    std::size_t R = 1;
    std::size_t k_max = 0;
    SpoCode code;
};

// periods lists each periodic point as one least-period block of indices
// into the inner alphabet
Example1 build_example1(const std::vector<std::string>& inner,
                        const std::vector<std::vector<std::size_t>>& periods,
                        std::size_t k_max);

// block of length len cut from the periodic point with the given period
// block
Word example1_pblock(const Example1& ex, std::size_t period_index,
                     std::size_t len);

// Example family 2: two word families over {g, d, 0, 1} whose p-blocks use
// the period-k points 0^(k-1) 1 repeated.
struct Example2 {
    Alphabet alphabet;  // g, d, 0, 1
    Symbol gamma = 0;
    Symbol delta = 1;
    Symbol zero = 2;
    Symbol one = 3;
    std::size_t K = 0;
    SpoCode code;
};

Example2 build_example2(std::size_t K);

std::size_t example2_rk(std::size_t k);

// block of length len from the period-m point
Word example2_pblock(const Example2& ex, std::size_t period, std::size_t len);

// boundary probe words: d^q g p^(k)-block and its time mirror
Word example2_bminus(const Example2& ex, std::size_t q, std::size_t k,
                     std::size_t m);
Word example2_bplus(const Example2& ex, std::size_t q, std::size_t k,
                    std::size_t m);

// One claimed follower / claimed non-follower pair, checked against
// admissibility of the glued words. The computed truth is recorded even
// when it contradicts the claim.
struct BoundaryInstance {
    std::string label;
    Word base;
    Word claimed_in;
    Word claimed_out;
    bool skipped = false;
    bool in_holds = false;
    bool out_absent = false;
    std::string note;
};

struct BoundaryReport {
    std::string which;
    std::vector<BoundaryInstance> instances;
};

BoundaryReport verify_boundary_ex1(const Example1& ex, const Engine& eng,
                                   std::size_t n_max);
BoundaryReport verify_boundary_ex2(const Example2& ex, const Engine& eng,
                                   std::size_t k_bound, std::size_t m_bound,
                                   std::size_t extra);

// Charge system: code words are a charge, a run of zeros, and the same
// charge again, over {-1, 0, 1}. Excluded are juxtapositions whose zero
// run grows by more than one, and the nested charge-bracket families.
struct ChargeSystem {
    Alphabet alphabet;  // -1, 0, 1
    std::size_t k_max = 0;
    std::size_t m_max = 0;
    Presentation presentation;
};

ChargeSystem build_charge_system(std::size_t k_max, std::size_t m_max);

// sign is -1 or +1; charge_word(k, s) = s 0^k s, charge_head(k, s) =
// s 0^k, charge_tail(k, s) = 0^k s
Word charge_word(std::size_t k, int sign);
Word charge_head(std::size_t k, int sign);
Word charge_tail(std::size_t k, int sign);

// nested exclusion families D_1 = {s 0 s}, D_{m+1} = s (union of earlier
// levels)+ s, materialized up to a length bound
std::vector<Word> charge_brackets(std::size_t m_max, std::size_t max_len);

class ChargeExclusions : public ExclusionSource {
public:
    explicit ChargeExclusions(std::size_t m_max) : m_max_(m_max) {}
    std::vector<Word> words_up_to(std::size_t n) const override;
    std::string describe() const override;

private:
    std::size_t m_max_;
};

bool contains_charge_word(const ChargeSystem& sys, const Word& w);

// Extension of a charge fragment to an admissible word containing a full
// code word. Shapes: 1 = head, 2 = tail, 3 = tail.head with longer head
// run, 4 = tail.head with head run at most the tail run. When the literal
// case formula lands outside the admissible language the shortest
// admissible extension is searched for and flagged.
struct RemarkExtension {
    int shape = 0;
    Word input;
    Word extension;
    Word promised;
    bool fallback_used = false;
    bool admissible = false;
};

RemarkExtension remark_extension(const ChargeSystem& sys, const Engine& eng,
                                 const Word& a);

// Backfill recursion on exponent sequences: the continuation climbs from
// the last exponent back up to the maximum, sourcing each sign from the
// latest factor that sits one step higher.
struct ContinuationSources {
    std::vector<std::size_t> sources;  // 0-based factor positions
    std::size_t q_count = 0;
    bool complete = false;
};

ContinuationSources continuation_sources(const std::vector<int>& ks);

struct ChainContinuation {
    std::vector<std::pair<int, int>> steps;  // (exponent, sign)
    Word extended;
    bool admissible = false;
    std::optional<std::size_t> gap_at;  // recursion step with no source
};

ChainContinuation chain_continuation(const ChargeSystem& sys,
                                     const Engine& eng,
                                     const std::vector<std::pair<int, int>>& factors);

// For each bounded left context of a max-tail product word, test whether
// the rising continuation of positive charge words blocks the context
// while remaining a plain follower.
struct ContextBlockingReport {
    Word word;
    std::size_t depth = 0;
    std::size_t contexts = 0;
    std::size_t blocked = 0;
    double fraction = 0.0;
    bool continuation_follows = false;
    bool inconclusive = false;
    Word continuation;
};

ContextBlockingReport context_blocking_report(const ChargeSystem& sys,
                                              const Engine& eng,
                                              const Word& a,
                                              std::size_t depth);

}  // namespace spokit

#endif
