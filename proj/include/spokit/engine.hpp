#ifndef SPOKIT_ENGINE_HPP
#define SPOKIT_ENGINE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "spokit/presentation.hpp"
#include "spokit/words.hpp"

namespace spokit {

// Compiled form of a presentation, answering window-language queries.
//
// SFT and sofic presentations are exact: a word is admissible iff it occurs
// in a two-sided point. Concatenation variants use the window convention:
// a word is admissible iff it occurs in a complete legal concatenation word
// with at least `margin` symbols on both sides of the occurrence. For
// exclusion presentations the excluded words are generated up to
// scale + 2*margin; longer exclusions are outside the horizon and reported
// as such by callers.
class Engine {
public:
    Engine(const Presentation& p, std::size_t scale);

    bool exact() const { return exact_; }
    std::size_t scale() const { return scale_; }
    std::size_t margin() const { return margin_; }
    bool empty_shift() const { return !has_words_; }

    bool admissible(const Word& w) const;

    // admissible words of length 1..n, shortlex sorted
    std::vector<Word> language(std::size_t n) const;

    struct Counts {
        // index k-1 holds data for length k; log_count is meaningful
        // only when the count is nonzero
        std::vector<std::uint64_t> count;
        std::vector<bool> count_exact;
        std::vector<double> log_count;
    };
    Counts counts(std::size_t n) const;

    // extension words b with 1 <= |b| <= depth and wb (resp. bw) admissible
    std::vector<Word> followers(const Word& w, std::size_t depth) const;
    std::vector<Word> predecessors(const Word& w, std::size_t depth) const;

    bool extendable_right(const Word& w) const;
    bool extendable_left(const Word& w) const;

    // complete concatenation words of length 1..n (concatenation variants)
    std::vector<Word> product_words(std::size_t n) const;
    bool is_product_word(const Word& w) const;

    // certified synchronizing-word test over the full subset family;
    // nullopt when the presentation is not exact or w is inadmissible.
    // When the word is not synchronizing, left/right hold contexts with
    // left.w and w.right admissible but left.w.right not.
    struct SyncCert {
        bool sync = false;
        Word left;
        Word right;
    };
    std::optional<SyncCert> exact_synchronizing(const Word& w) const;

    // edge count matrix over the live states (exact presentations only)
    std::vector<std::vector<std::int64_t>> adjacency() const;

private:
    using StateSet = std::vector<int>;

    void build_sft(const Presentation& p);
    void build_sofic(const Presentation& p);
    void build_coded(const std::vector<Word>& words);
    void build_spo(const Presentation& p);
    void build_markov(const Presentation& p);
    void build_exclusion(const Presentation& p);
    void trim_exact();
    void compute_margin_sets();
    void build_prev();

    void add_edge(int from, Symbol a, int to);
    StateSet step(const StateSet& s, Symbol a) const;
    StateSet raw_step(const StateSet& s, Symbol a) const;
    StateSet reverse_step(const StateSet& s, Symbol a) const;
    StateSet simulate(const Word& w) const;

    int num_states_ = 0;
    std::size_t num_symbols_ = 0;
    // next_[state * num_symbols_ + symbol] = target states
    std::vector<std::vector<int>> next_;
    std::vector<std::vector<int>> prev_;
    std::vector<std::vector<Symbol>> end_syms_;
    std::vector<int> entries_;
    std::vector<std::uint8_t> in_fstar_;
    std::vector<std::uint8_t> in_bstar_;
    StateSet start_set_;
    StateSet bstar_set_;
    bool exact_ = false;
    bool has_words_ = false;
    // exclusion automata only see factors inside the compiled horizon, so
    // queries longer than the scale must be rejected rather than answered
    bool length_capped_ = false;
    std::size_t scale_ = 0;
    std::size_t margin_ = 0;
    std::size_t budget_ = 10000000;
};

}  // namespace spokit

#endif
