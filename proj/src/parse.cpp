#include "spokit/parse.hpp"

#include <algorithm>
#include <map>

namespace spokit {

namespace {

// does the emission `piece` placed at offset `at` agree with w inside [0, n)
bool matches_clipped(const Word& w, const Word& piece, long at) {
    long n = static_cast<long>(w.size());
    for (long p = 0; p < static_cast<long>(piece.size()); ++p) {
        long pos = at + p;
        if (pos < 0 || pos >= n) continue;
        if (w[pos] != piece[p]) return false;
    }
    return true;
}

}  // namespace

std::vector<std::pair<long, long>> chain_cuts(const SpoCode& code,
                                              const std::vector<std::size_t>& factors) {
    std::vector<std::pair<long, long>> cuts;
    long start = 0;
    for (std::size_t k = 0; k + 1 < factors.size(); ++k) {
        const MarkedWord& m = code.words()[factors[k]];
        long ring_end = start + static_cast<long>(m.ring().size());
        long word_end = start + static_cast<long>(m.word.size());
        cuts.emplace_back(ring_end, word_end);
        start = ring_end;
    }
    return cuts;
}

std::vector<WindowParse> parse_window(const SpoCode& code, const Word& w) {
    if (w.empty()) throw DomainError("empty window");
    const long n = static_cast<long>(w.size());
    const auto& words = code.words();
    std::vector<WindowParse> out;

    std::vector<std::size_t> factors;
    std::vector<long> starts;
    // prev_end: end of the previous factor's whole word, meaningful from the
    // second factor on
    auto dfs = [&](auto&& self, std::size_t i, long s, long prev_end) -> void {
        const MarkedWord& m = words[i];
        long len = static_cast<long>(m.word.size());
        long ring = static_cast<long>(m.ring().size());
        factors.push_back(i);
        starts.push_back(s);

        // close the chain here: this factor emits its whole word
        if (s + len >= n && (factors.size() == 1 || prev_end < n) &&
            matches_clipped(w, m.word, s)) {
            WindowParse p;
            p.factors = factors;
            p.starts = starts;
            p.left_truncated = starts.front() < 0;
            p.right_truncated = s + len > n;
            out.push_back(std::move(p));
        }

        // keep chaining: this factor emits its ring only; a later factor must
        // still be needed, so the whole word has to end inside the window
        bool may_continue = s + len < n && matches_clipped(w, m.ring(), s);
        if (factors.size() == 1) may_continue = may_continue && s + ring >= 1;
        if (may_continue) {
            for (std::size_t j : code.successors(i)) {
                self(self, j, s + ring, s + len);
            }
        }

        factors.pop_back();
        starts.pop_back();
    };

    for (std::size_t i = 0; i < words.size(); ++i) {
        long len = static_cast<long>(words[i].word.size());
        for (long s = -(len - 1); s <= 0; ++s) {
            dfs(dfs, i, s, 0);
        }
    }
    return out;
}

UnambiguityReport check_unambiguous(const SpoCode& code, std::size_t horizon,
                                    std::size_t budget) {
    UnambiguityReport rep;
    rep.horizon = horizon;
    const auto& words = code.words();
    std::map<Word, std::vector<std::vector<std::size_t>>> table;

    std::vector<std::size_t> chain;
    Word acc;  // rings of the closed factors so far
    auto dfs = [&](auto&& self, std::size_t i) -> void {
        const MarkedWord& m = words[i];
        chain.push_back(i);
        if (acc.size() + m.word.size() <= horizon) {
            Word prod = acc;
            prod.insert(prod.end(), m.word.begin(), m.word.end());
            table[prod].push_back(chain);
            rep.products_checked++;
            if (rep.products_checked > budget) {
                throw ResourceError("chain enumeration exceeds the work budget");
            }
        }
        std::size_t ring = m.ring().size();
        for (std::size_t j : code.successors(i)) {
            if (acc.size() + ring + words[j].word.size() > horizon) continue;
            Word save = acc;
            const Word r = m.ring();
            acc.insert(acc.end(), r.begin(), r.end());
            self(self, j);
            acc = save;
        }
        chain.pop_back();
    };
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (words[i].word.size() <= horizon) dfs(dfs, i);
    }

    const std::vector<std::vector<std::size_t>>* bad = nullptr;
    const Word* bad_word = nullptr;
    for (const auto& [prod, chains] : table) {
        if (chains.size() < 2) continue;
        if (bad_word == nullptr || shortlex_less(prod, *bad_word)) {
            bad_word = &prod;
            bad = &chains;
        }
    }
    if (bad != nullptr) {
        rep.unambiguous = false;
        rep.witness = *bad_word;
        rep.witness_chains = *bad;
        std::sort(rep.witness_chains.begin(), rep.witness_chains.end(),
                  [](const auto& a, const auto& b) {
                      if (a.size() != b.size()) return a.size() < b.size();
                      return a < b;
                  });
        for (const auto& c : rep.witness_chains) {
            rep.witness_cuts.push_back(chain_cuts(code, c));
        }
    }
    return rep;
}

}  // namespace spokit
