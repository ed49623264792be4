#include "spokit/block_map.hpp"

namespace spokit {

BlockMap::BlockMap(Alphabet from, Alphabet to, std::size_t memory,
                   std::size_t anticipation, std::map<Word, Symbol> table)
    : from_(std::move(from)),
      to_(std::move(to)),
      memory_(memory),
      anticipation_(anticipation),
      table_(std::move(table)) {
    for (const auto& [key, val] : table_) {
        if (key.size() != window()) {
            throw DomainError("table key does not match the window size");
        }
        if (val >= to_.size()) throw DomainError("table value outside the alphabet");
        for (Symbol a : key) {
            if (a >= from_.size()) throw DomainError("table key outside the alphabet");
        }
    }
}

Word BlockMap::apply(const Word& w) const {
    if (w.size() < window()) {
        throw DomainError("word shorter than the sliding window");
    }
    Word out;
    for (std::size_t i = 0; i + window() <= w.size(); ++i) {
        Word key = subword(w, i, window());
        auto it = table_.find(key);
        if (it == table_.end()) {
            throw DomainError("window '" + from_.render(key) + "' has no image");
        }
        out.push_back(it->second);
    }
    return out;
}

}  // namespace spokit
