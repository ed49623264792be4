#include "spokit/spo_code.hpp"

#include <algorithm>

namespace spokit {

SpoCode::SpoCode(Alphabet alphabet, BifixCode bifix, std::vector<Word> words,
                 bool keep_flagged)
    : alphabet_(std::move(alphabet)), bifix_(std::move(bifix)) {
    std::sort(words.begin(), words.end(), shortlex_less);
    words.erase(std::unique(words.begin(), words.end()), words.end());
    for (const auto& w : words) {
        auto m = find_marks(bifix_, w);
        if (m.has_value()) {
            words_.push_back(*m);
        } else if (keep_flagged) {
            flagged_.push_back(w);
        } else {
            throw DomainError("code word '" + alphabet_.render(w) +
                              "' carries no usable end marks");
        }
    }
    if (words_.empty()) throw DomainError("code has no markable words");
}

std::vector<std::size_t> SpoCode::bullet_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i].bullet()) out.push_back(i);
    }
    return out;
}

bool SpoCode::all_bullet() const {
    return bullet_indices().size() == words_.size();
}

std::optional<std::size_t> SpoCode::index_of(const Word& w) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i].word == w) return i;
    }
    return std::nullopt;
}

std::vector<std::size_t> SpoCode::successors(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < words_.size(); ++j) {
        if (chainable(words_[i], words_[j])) out.push_back(j);
    }
    return out;
}

Presentation SpoCode::presentation() const {
    return make_spo(alphabet_, bifix_, words_, flagged_);
}

}  // namespace spokit
