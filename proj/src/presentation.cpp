#include "spokit/presentation.hpp"

#include <algorithm>

namespace spokit {

ListExclusions::ListExclusions(std::vector<Word> words) : words_(std::move(words)) {
    std::sort(words_.begin(), words_.end(), shortlex_less);
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

std::vector<Word> ListExclusions::words_up_to(std::size_t max_len) const {
    std::vector<Word> out;
    for (const auto& w : words_)
        if (w.size() <= max_len) out.push_back(w);
    return out;
}

const char* Presentation::variant_name() const {
    switch (data.index()) {
        case 0: return "sft";
        case 1: return "sofic";
        case 2: return "coded";
        case 3: return "spo";
        case 4: return "markov";
        default: return "exclusion";
    }
}

namespace {

void check_word(const Alphabet& a, const Word& w, const char* what) {
    if (w.empty()) throw DomainError(std::string(what) + " must be nonempty");
    for (Symbol s : w)
        if (s >= a.size()) throw DomainError(std::string(what) + " uses a symbol outside the alphabet");
}

std::size_t max_code_len(const Presentation& p) {
    std::size_t m = 1;
    if (const auto* c = std::get_if<CodedData>(&p.data)) {
        for (const auto& w : c->words) m = std::max(m, w.size());
    } else if (const auto* s = std::get_if<SpoData>(&p.data)) {
        for (const auto& w : s->words) m = std::max(m, w.word.size());
        for (const auto& w : s->flagged_words) m = std::max(m, w.size());
    } else if (const auto* mk = std::get_if<MarkovData>(&p.data)) {
        for (const auto& w : mk->words) m = std::max(m, w.size());
    } else if (const auto* e = std::get_if<ExclusionData>(&p.data)) {
        for (const auto& w : e->words) m = std::max(m, w.size());
    }
    return m;
}

}  // namespace

std::size_t Presentation::effective_margin() const {
    if (margin) return *margin;
    return max_code_len(*this);
}

void Presentation::validate() const {
    if (alphabet.size() == 0) throw DomainError("presentation needs an alphabet");
    if (const auto* s = std::get_if<SftData>(&data)) {
        for (const auto& w : s->forbidden) check_word(alphabet, w, "forbidden word");
    } else if (const auto* g = std::get_if<SoficData>(&data)) {
        int n = static_cast<int>(g->state_names.size());
        if (n == 0) throw DomainError("sofic presentation needs at least one state");
        std::vector<int> outdeg(n, 0), indeg(n, 0);
        for (const auto& e : g->edges) {
            if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n)
                throw DomainError("sofic edge endpoint out of range");
            if (e.label >= alphabet.size())
                throw DomainError("sofic edge label outside the alphabet");
            ++outdeg[e.from];
            ++indeg[e.to];
        }
        for (int v = 0; v < n; ++v)
            if (outdeg[v] == 0 || indeg[v] == 0)
                throw DomainError("sofic state '" + g->state_names[v] +
                                  "' lacks an incoming or outgoing edge");
    } else if (const auto* c = std::get_if<CodedData>(&data)) {
        if (c->words.empty()) throw DomainError("coded presentation needs code words");
        for (const auto& w : c->words) check_word(alphabet, w, "code word");
    } else if (const auto* sp = std::get_if<SpoData>(&data)) {
        if (sp->words.empty()) throw DomainError("overlap code needs marked words");
        for (const auto& m : sp->words) {
            check_word(alphabet, m.word, "code word");
            if (m.prefix_len == 0 || m.suffix_len == 0 || m.prefix_len >= m.word.size() ||
                m.suffix_len >= m.word.size())
                throw DomainError("marks must be proper nonempty blocks");
            if (!sp->bifix.contains(m.prefix_mark()) || !sp->bifix.contains(m.suffix_mark()))
                throw DomainError("marks must be members of the bifix code");
        }
        for (const auto& w : sp->flagged_words) check_word(alphabet, w, "flagged word");
    } else if (const auto* mk = std::get_if<MarkovData>(&data)) {
        if (mk->words.empty()) throw DomainError("markov code needs words");
        for (const auto& w : mk->words) check_word(alphabet, w, "markov word");
        if (mk->transition.size() != mk->words.size())
            throw DomainError("transition relation size mismatch");
        for (const auto& row : mk->transition)
            if (row.size() != mk->words.size())
                throw DomainError("transition relation size mismatch");
        if (mk->prefix_marks.size() != mk->words.size())
            throw DomainError("markov prefix mark list size mismatch");
    } else if (const auto* e = std::get_if<ExclusionData>(&data)) {
        if (e->words.empty()) throw DomainError("exclusion presentation needs code words");
        for (const auto& w : e->words) check_word(alphabet, w, "code word");
        if (!e->exclusions) throw DomainError("exclusion presentation needs an exclusion source");
    }
}

Presentation make_sft(Alphabet a, std::vector<Word> forbidden) {
    Presentation p{std::move(a), SftData{std::move(forbidden)}, 10000000, std::nullopt};
    p.validate();
    return p;
}

Presentation make_sofic(Alphabet a, std::vector<std::string> states, std::vector<LabeledEdge> edges) {
    Presentation p{std::move(a), SoficData{std::move(states), std::move(edges)}, 10000000,
                   std::nullopt};
    p.validate();
    return p;
}

Presentation make_coded(Alphabet a, std::vector<Word> words) {
    Presentation p{std::move(a), CodedData{std::move(words)}, 10000000, std::nullopt};
    p.validate();
    return p;
}

Presentation make_spo(Alphabet a, BifixCode f, std::vector<MarkedWord> words,
                      std::vector<Word> flagged) {
    Presentation p{std::move(a), SpoData{std::move(f), std::move(words), std::move(flagged)},
                   10000000, std::nullopt};
    p.validate();
    return p;
}

Presentation make_markov(Alphabet a, std::vector<Word> words, std::vector<Word> prefix_marks,
                         std::vector<std::vector<std::uint8_t>> transition) {
    Presentation p{std::move(a),
                   MarkovData{std::move(words), std::move(prefix_marks), std::move(transition)},
                   10000000, std::nullopt};
    p.validate();
    return p;
}

Presentation make_exclusion(Alphabet a, std::vector<Word> words,
                            std::shared_ptr<const ExclusionSource> exclusions) {
    Presentation p{std::move(a), ExclusionData{std::move(words), std::move(exclusions)}, 10000000,
                   std::nullopt};
    p.validate();
    return p;
}

}  // namespace spokit
