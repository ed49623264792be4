#include "spokit/derived.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "spokit/engine.hpp"

namespace spokit {

HatCode hat_code(const SpoCode& code, std::size_t length_cap) {
    HatCode hat;
    hat.length_cap = length_cap;
    const auto& words = code.words();
    std::vector<bool> bullet(words.size());
    bool any_bullet = false;
    for (std::size_t i = 0; i < words.size(); ++i) {
        bullet[i] = words[i].bullet();
        any_bullet = any_bullet || bullet[i];
    }
    if (!any_bullet) {
        hat.no_bullets = true;
        return hat;
    }

    std::map<Word, std::size_t> seen;
    std::set<Word> collided;
    std::vector<std::size_t> chain;
    // product length so far, measured as rings of the closed factors plus
    // the current factor's whole word
    auto emit = [&](const MarkedWord& prod) {
        auto it = seen.find(prod.word);
        if (it == seen.end()) {
            seen[prod.word] = hat.words.size();
            hat.words.push_back(prod);
            hat.chains.push_back(chain);
        } else if (collided.insert(prod.word).second) {
            hat.collisions.push_back(prod.word);
        }
    };
    auto dfs = [&](auto&& self, std::size_t i, std::size_t rings) -> void {
        std::size_t plen = rings + words[i].word.size();
        if (plen > length_cap) {
            hat.truncated = true;
            return;
        }
        chain.push_back(i);
        if (bullet[i]) {
            std::vector<MarkedWord> seq;
            for (std::size_t k : chain) seq.push_back(words[k]);
            emit(ostar_product(seq));
        } else {
            for (std::size_t j : code.successors(i)) {
                self(self, j, rings + words[i].ring().size());
            }
        }
        chain.pop_back();
    };
    for (std::size_t i = 0; i < words.size(); ++i) dfs(dfs, i, 0);

    // shortlex by product word, chains riding along
    std::vector<std::size_t> order(hat.words.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return shortlex_less(hat.words[a].word, hat.words[b].word);
    });
    std::vector<MarkedWord> w2;
    std::vector<std::vector<std::size_t>> c2;
    for (std::size_t i : order) {
        w2.push_back(hat.words[i]);
        c2.push_back(hat.chains[i]);
    }
    hat.words.swap(w2);
    hat.chains.swap(c2);
    std::sort(hat.collisions.begin(), hat.collisions.end(), shortlex_less);
    return hat;
}

MarkovCode markov_code(const SpoCode& code, const HatCode& hat) {
    (void)code;
    MarkovCode mc;
    std::set<Word> hat_set;
    for (const auto& h : hat.words) hat_set.insert(h.word);

    std::map<std::pair<Word, Word>, std::size_t> seen;
    std::set<std::pair<Word, Word>> collided;
    for (std::size_t i = 0; i < hat.words.size(); ++i) {
        const auto& h = hat.words[i];
        std::pair<Word, Word> key{h.ring(), h.prefix_mark()};
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen[key] = mc.words.size();
            mc.words.push_back(key.first);
            mc.prefix_marks.push_back(key.second);
            mc.origin.push_back(i);
        } else if (collided.insert(key).second) {
            mc.merged.push_back(key.first);
        }
    }
    std::size_t n = mc.words.size();
    mc.transition.assign(n, std::vector<std::uint8_t>(n, 0));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            Word joined = mc.words[x];
            joined.insert(joined.end(), mc.prefix_marks[y].begin(),
                          mc.prefix_marks[y].end());
            if (hat_set.count(joined)) mc.transition[x][y] = 1;
        }
    }
    return mc;
}

EdgeShift edge_shift(const MarkovCode& mc) {
    EdgeShift es;
    std::vector<std::size_t> base;
    for (std::size_t d = 0; d < mc.words.size(); ++d) {
        base.push_back(es.states.size());
        for (std::size_t l = 1; l <= mc.words[d].size(); ++l) {
            es.states.emplace_back(d, l);
        }
    }
    std::size_t n = es.states.size();
    es.adjacency.assign(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t d = 0; d < mc.words.size(); ++d) {
        std::size_t len = mc.words[d].size();
        for (std::size_t l = 1; l < len; ++l) {
            es.adjacency[base[d] + l - 1][base[d] + l] = 1;
        }
        for (std::size_t e = 0; e < mc.words.size(); ++e) {
            if (mc.transition[d][e]) {
                es.adjacency[base[d] + len - 1][base[e]] = 1;
            }
        }
    }
    return es;
}

PhiState phi_index(const MarkovCode& mc, const SpoCode& hat_as_code,
                   const WindowParse& parse) {
    const auto& words = hat_as_code.words();
    for (std::size_t k = 0; k < parse.factors.size(); ++k) {
        const MarkedWord& m = words[parse.factors[k]];
        long s = parse.starts[k];
        long ring = static_cast<long>(m.ring().size());
        if (s <= 0 && 0 < s + ring) {
            std::pair<Word, Word> key{m.ring(), m.prefix_mark()};
            for (std::size_t d = 0; d < mc.words.size(); ++d) {
                if (mc.words[d] == key.first && mc.prefix_marks[d] == key.second) {
                    PhiState st;
                    st.markov_index = d;
                    st.offset = static_cast<std::size_t>(-s);
                    std::size_t b = 0;
                    for (std::size_t e = 0; e < d; ++e) b += mc.words[e].size();
                    st.edge_state = b + st.offset;
                    return st;
                }
            }
            throw DomainError("ring of the parse is not a recorded ring word");
        }
    }
    throw DomainError("window start is not covered by a ring");
}

EntropyGapReport entropy_gap(const Engine& eng, std::size_t n) {
    EntropyGapReport rep;
    rep.n = n;
    auto prods = eng.product_words(n);
    std::set<Word> inner;
    for (const auto& p : prods) {
        if (p.size() == n) inner.insert(p);
    }
    rep.product_count = inner.size();
    std::size_t other = 0;
    for (const auto& w : eng.language(n)) {
        if (w.size() == n && !eng.is_product_word(w)) other++;
    }
    rep.other_count = other;
    if (rep.product_count > 0) {
        rep.inner_rate = std::log(static_cast<double>(rep.product_count)) /
                         static_cast<double>(n);
    }
    if (rep.other_count > 0) {
        rep.outer_rate = std::log(static_cast<double>(rep.other_count)) /
                         static_cast<double>(n);
    }
    return rep;
}

}  // namespace spokit
