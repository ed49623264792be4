#include "spokit/bifix.hpp"

#include <algorithm>

namespace spokit {

BifixCode::BifixCode(std::vector<Word> words) : words_(std::move(words)) {
    if (words_.empty()) throw DomainError("bifix code must be nonempty");
    std::sort(words_.begin(), words_.end(), shortlex_less);
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
    for (const auto& w : words_) {
        if (w.empty()) throw DomainError("bifix code words must be nonempty");
    }
    for (const auto& a : words_) {
        for (const auto& b : words_) {
            if (a.size() >= b.size()) continue;
            if (is_prefix(a, b))
                throw DomainError("bifix violation: one word is a proper prefix of another");
            if (is_suffix(a, b))
                throw DomainError("bifix violation: one word is a proper suffix of another");
        }
    }
}

bool BifixCode::contains(const Word& w) const {
    return std::binary_search(words_.begin(), words_.end(), w,
                              [](const Word& a, const Word& b) { return shortlex_less(a, b); });
}

std::optional<MarkedWord> find_marks(const BifixCode& f, const Word& w) {
    std::optional<std::size_t> pre, suf;
    for (const auto& m : f.words()) {
        if (m.size() >= w.size()) continue;  // marks must be proper
        if (is_prefix(m, w)) pre = m.size();
        if (is_suffix(m, w)) suf = m.size();
    }
    if (!pre || !suf) return std::nullopt;
    return MarkedWord{w, *pre, *suf};
}

bool chainable(const MarkedWord& a, const MarkedWord& b) {
    return a.suffix_mark() == b.prefix_mark();
}

MarkedWord ostar(const MarkedWord& a, const MarkedWord& b) {
    MarkedWord out;
    out.word = concat(a.ring(), b.word);
    out.prefix_len = a.prefix_len;
    out.suffix_len = b.suffix_len;
    return out;
}

MarkedWord ostar_product(const std::vector<MarkedWord>& seq) {
    if (seq.empty()) throw DomainError("ostar_product requires a nonempty sequence");
    MarkedWord acc = seq.front();
    for (std::size_t i = 1; i < seq.size(); ++i) acc = ostar(acc, seq[i]);
    return acc;
}

}  // namespace spokit
