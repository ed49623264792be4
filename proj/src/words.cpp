#include "spokit/words.hpp"

#include <algorithm>
#include <unordered_map>

namespace spokit {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw DomainError("alphabet must be nonempty");
    for (const auto& n : names_) {
        if (n.empty()) throw DomainError("alphabet symbol name must be nonempty");
        if (n.find(',') != std::string::npos || n.find_first_of(" \t\n") != std::string::npos)
            throw DomainError("alphabet symbol name '" + n + "' contains a separator");
    }
    auto sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DomainError("alphabet contains a duplicate symbol");
}

const std::string& Alphabet::name(Symbol s) const {
    if (s >= names_.size()) throw DomainError("symbol index out of range");
    return names_[s];
}

bool Alphabet::has(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

Symbol Alphabet::index(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw DomainError("unknown symbol '" + name + "'");
    return static_cast<Symbol>(it - names_.begin());
}

std::string Alphabet::render(const Word& w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += name(w[i]);
    }
    return out;
}

Word Alphabet::parse(const std::string& text) const {
    Word out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        std::string tok = text.substr(pos, next - pos);
        if (tok.empty()) throw DomainError("empty symbol in word '" + text + "'");
        out.push_back(index(tok));
        pos = next + 1;
        if (next == text.size()) break;
    }
    return out;
}

bool is_prefix(const Word& p, const Word& w) {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

bool is_suffix(const Word& s, const Word& w) {
    return s.size() <= w.size() && std::equal(s.rbegin(), s.rend(), w.rbegin());
}

bool is_factor(const Word& f, const Word& w) {
    if (f.empty()) return true;
    if (f.size() > w.size()) return false;
    return std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end();
}

Word subword(const Word& w, std::size_t begin, std::size_t len) {
    if (begin + len > w.size()) throw DomainError("subword range out of bounds");
    return Word(w.begin() + begin, w.begin() + begin + len);
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Word repeat(const Word& w, std::size_t times) {
    Word out;
    out.reserve(w.size() * times);
    for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), w.begin(), w.end());
    return out;
}

bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace spokit
