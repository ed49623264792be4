#include "spokit/presentation_file.hpp"

#include <cctype>
#include <cstddef>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "spokit/bifix.hpp"
#include "spokit/words.hpp"

namespace spokit {
namespace {

struct Token {
    std::string text;
    int column = 1;
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        if (line[i] == '#') break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::size_t parse_count(const Token& t, int line) {
    std::size_t v = 0;
    if (t.text.empty()) throw ParseError(line, t.column, "expected a number");
    for (char c : t.text) {
        if (c < '0' || c > '9')
            throw ParseError(line, t.column, "expected a number, got '" + t.text + "'");
        v = v * 10 + static_cast<std::size_t>(c - '0');
        if (v > 1000000000000ull)
            throw ParseError(line, t.column, "number out of range");
    }
    return v;
}

struct SpoWordEntry {
    Word word;
    std::optional<std::pair<std::size_t, std::size_t>> marks;
    int line = 0;
    int column = 1;
};

struct FileState {
    std::optional<Alphabet> alphabet;
    std::string variant;
    std::string builder;
    int variant_line = 1;
    std::optional<std::size_t> margin;
    std::optional<std::size_t> budget;

    std::vector<Word> forbidden;
    std::vector<std::string> state_names;
    std::vector<LabeledEdge> edges;
    std::vector<Word> plain_words;
    std::vector<Word> bifix_words;
    std::vector<SpoWordEntry> spo_words;
    std::vector<Word> excluded;

    std::vector<std::string> inner;
    std::vector<std::vector<std::size_t>> periods;
    std::optional<std::size_t> kmax;
    std::optional<std::size_t> mmax;
};

Word parse_word(const Alphabet& a, const Token& t, int line) {
    try {
        return a.parse(t.text);
    } catch (const DomainError& e) {
        throw ParseError(line, t.column, e.what());
    }
}

void need_args(const std::vector<Token>& toks, std::size_t n, int line) {
    if (toks.size() < n + 1)
        throw ParseError(line, toks[0].column,
                         "directive '" + toks[0].text + "' needs " +
                             std::to_string(n) + " argument(s)");
    if (toks.size() > n + 1)
        throw ParseError(line, toks[n + 1].column,
                         "unexpected token '" + toks[n + 1].text + "'");
}

const Alphabet& need_alphabet(const FileState& st, const std::vector<Token>& toks, int line) {
    if (!st.alphabet)
        throw ParseError(line, toks[0].column,
                         "'" + toks[0].text + "' before any 'alphabet' line");
    return *st.alphabet;
}

void need_variant(const FileState& st, const std::string& want,
                  const std::vector<Token>& toks, int line) {
    if (st.variant != want)
        throw ParseError(line, toks[0].column,
                         "directive '" + toks[0].text + "' only valid for variant '" +
                             want + "'");
}

LoadedSystem finalize(FileState& st) {
    if (st.variant.empty() && st.builder.empty())
        throw ParseError(1, 1, "file declares neither 'variant' nor 'builder'");

    LoadedSystem out{Presentation{}, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
    try {
        if (st.builder == "example1") {
            if (st.inner.empty())
                throw DomainError("builder example1 needs an 'inner' line");
            if (st.periods.empty())
                throw DomainError("builder example1 needs at least one 'period' line");
            if (!st.kmax) throw DomainError("builder example1 needs a 'kmax' line");
            out.example1 = build_example1(st.inner, st.periods, *st.kmax);
            out.code = out.example1->code;
            out.presentation = out.code->presentation();
        } else if (st.builder == "example2") {
            if (!st.kmax) throw DomainError("builder example2 needs a 'kmax' line");
            out.example2 = build_example2(*st.kmax);
            out.code = out.example2->code;
            out.presentation = out.code->presentation();
        } else if (st.builder == "charges") {
            if (!st.kmax) throw DomainError("builder charges needs a 'kmax' line");
            out.charges = build_charge_system(*st.kmax, st.mmax.value_or(2));
            out.presentation = out.charges->presentation;
        } else if (st.variant == "sft") {
            out.presentation = make_sft(*st.alphabet, std::move(st.forbidden));
        } else if (st.variant == "sofic") {
            out.presentation =
                make_sofic(*st.alphabet, std::move(st.state_names), std::move(st.edges));
        } else if (st.variant == "coded") {
            out.presentation = make_coded(*st.alphabet, std::move(st.plain_words));
        } else if (st.variant == "spo") {
            std::vector<Word> words;
            for (const auto& e : st.spo_words) words.push_back(e.word);
            SpoCode code(*st.alphabet, BifixCode(st.bifix_words), words, true);
            for (const auto& e : st.spo_words) {
                if (!e.marks) continue;
                auto idx = code.index_of(e.word);
                if (!idx)
                    throw ParseError(e.line, e.column,
                                     "explicit marks given, but the word has no bifix marking");
                const MarkedWord& mw = code.words()[*idx];
                if (mw.prefix_len != e.marks->first || mw.suffix_len != e.marks->second)
                    throw ParseError(
                        e.line, e.column,
                        "explicit marks (" + std::to_string(e.marks->first) + "," +
                            std::to_string(e.marks->second) +
                            ") disagree with the bifix marking (" +
                            std::to_string(mw.prefix_len) + "," +
                            std::to_string(mw.suffix_len) + ")");
            }
            out.code = std::move(code);
            out.presentation = out.code->presentation();
        } else if (st.variant == "exclusion") {
            out.presentation =
                make_exclusion(*st.alphabet, std::move(st.plain_words),
                               std::make_shared<ListExclusions>(std::move(st.excluded)));
        }
    } catch (const ParseError&) {
        throw;
    } catch (const DomainError& e) {
        throw ParseError(st.variant_line, 1, e.what());
    }

    if (st.margin) out.presentation.margin = *st.margin;
    if (st.budget) out.presentation.budget = *st.budget;
    if (out.charges) {
        if (st.margin) out.charges->presentation.margin = *st.margin;
        if (st.budget) out.charges->presentation.budget = *st.budget;
    }
    return out;
}

}  // namespace

LoadedSystem parse_system_text(const std::string& text) {
    FileState st;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto toks = tokenize(raw);
        if (toks.empty()) continue;
        const std::string& d = toks[0].text;

        if (d == "alphabet") {
            need_args(toks, 1, line);
            if (!st.builder.empty())
                throw ParseError(line, toks[0].column, "builders define their own alphabet");
            if (st.alphabet)
                throw ParseError(line, toks[0].column, "duplicate 'alphabet' line");
            try {
                st.alphabet = Alphabet(split_names(toks[1].text));
            } catch (const DomainError& e) {
                throw ParseError(line, toks[1].column, e.what());
            }
        } else if (d == "variant") {
            need_args(toks, 1, line);
            if (!st.variant.empty() || !st.builder.empty())
                throw ParseError(line, toks[0].column, "duplicate 'variant' or 'builder' line");
            const std::string& v = toks[1].text;
            if (v != "sft" && v != "sofic" && v != "coded" && v != "spo" && v != "exclusion")
                throw ParseError(line, toks[1].column, "unknown variant '" + v + "'");
            st.variant = v;
            st.variant_line = line;
        } else if (d == "builder") {
            need_args(toks, 1, line);
            if (!st.variant.empty() || !st.builder.empty())
                throw ParseError(line, toks[0].column, "duplicate 'variant' or 'builder' line");
            if (st.alphabet)
                throw ParseError(line, toks[0].column, "builders define their own alphabet");
            const std::string& b = toks[1].text;
            if (b != "example1" && b != "example2" && b != "charges")
                throw ParseError(line, toks[1].column, "unknown builder '" + b + "'");
            st.builder = b;
            st.variant_line = line;
        } else if (d == "margin") {
            need_args(toks, 1, line);
            st.margin = parse_count(toks[1], line);
        } else if (d == "budget") {
            need_args(toks, 1, line);
            st.budget = parse_count(toks[1], line);
        } else if (d == "forbid") {
            need_variant(st, "sft", toks, line);
            need_args(toks, 1, line);
            st.forbidden.push_back(parse_word(need_alphabet(st, toks, line), toks[1], line));
        } else if (d == "state") {
            need_variant(st, "sofic", toks, line);
            need_args(toks, 1, line);
            for (const auto& s : st.state_names)
                if (s == toks[1].text)
                    throw ParseError(line, toks[1].column,
                                     "duplicate state '" + toks[1].text + "'");
            st.state_names.push_back(toks[1].text);
        } else if (d == "edge") {
            need_variant(st, "sofic", toks, line);
            need_args(toks, 3, line);
            const Alphabet& a = need_alphabet(st, toks, line);
            auto state_id = [&](const Token& t) -> int {
                for (std::size_t i = 0; i < st.state_names.size(); ++i)
                    if (st.state_names[i] == t.text) return static_cast<int>(i);
                throw ParseError(line, t.column, "unknown state '" + t.text +
                                                     "' (declare states before edges)");
            };
            LabeledEdge e;
            e.from = state_id(toks[1]);
            e.to = state_id(toks[2]);
            if (!a.has(toks[3].text))
                throw ParseError(line, toks[3].column, "unknown symbol '" + toks[3].text + "'");
            e.label = a.index(toks[3].text);
            st.edges.push_back(e);
        } else if (d == "word") {
            if (st.variant == "coded" || st.variant == "exclusion") {
                need_args(toks, 1, line);
                st.plain_words.push_back(
                    parse_word(need_alphabet(st, toks, line), toks[1], line));
            } else if (st.variant == "spo") {
                if (toks.size() != 2 && toks.size() != 4)
                    throw ParseError(line, toks[0].column,
                                     "'word' takes a word, optionally followed by "
                                     "both mark lengths");
                SpoWordEntry e;
                e.word = parse_word(need_alphabet(st, toks, line), toks[1], line);
                e.line = line;
                e.column = toks[1].column;
                if (toks.size() == 4) {
                    std::size_t p = parse_count(toks[2], line);
                    std::size_t s = parse_count(toks[3], line);
                    if (p == 0 || s == 0 || p >= e.word.size() || s >= e.word.size())
                        throw ParseError(line, toks[2].column,
                                         "marks must be proper nonempty end blocks");
                    e.marks = {p, s};
                }
                st.spo_words.push_back(std::move(e));
            } else {
                throw ParseError(line, toks[0].column,
                                 "'word' only valid for variants coded, spo, exclusion");
            }
        } else if (d == "bifix") {
            need_variant(st, "spo", toks, line);
            need_args(toks, 1, line);
            st.bifix_words.push_back(parse_word(need_alphabet(st, toks, line), toks[1], line));
        } else if (d == "exclude") {
            need_variant(st, "exclusion", toks, line);
            need_args(toks, 1, line);
            st.excluded.push_back(parse_word(need_alphabet(st, toks, line), toks[1], line));
        } else if (d == "inner") {
            if (st.builder != "example1")
                throw ParseError(line, toks[0].column, "'inner' only valid for builder example1");
            need_args(toks, 1, line);
            st.inner = split_names(toks[1].text);
        } else if (d == "period") {
            if (st.builder != "example1")
                throw ParseError(line, toks[0].column, "'period' only valid for builder example1");
            need_args(toks, 1, line);
            if (st.inner.empty())
                throw ParseError(line, toks[0].column, "'period' before the 'inner' line");
            std::vector<std::size_t> idx;
            for (const auto& nm : split_names(toks[1].text)) {
                std::size_t i = 0;
                while (i < st.inner.size() && st.inner[i] != nm) ++i;
                if (i == st.inner.size())
                    throw ParseError(line, toks[1].column,
                                     "'" + nm + "' is not an inner symbol");
                idx.push_back(i);
            }
            st.periods.push_back(std::move(idx));
        } else if (d == "kmax") {
            if (st.builder.empty())
                throw ParseError(line, toks[0].column, "'kmax' only valid after a 'builder' line");
            need_args(toks, 1, line);
            st.kmax = parse_count(toks[1], line);
        } else if (d == "mmax") {
            if (st.builder != "charges")
                throw ParseError(line, toks[0].column, "'mmax' only valid for builder charges");
            need_args(toks, 1, line);
            st.mmax = parse_count(toks[1], line);
        } else {
            throw ParseError(line, toks[0].column, "unknown directive '" + d + "'");
        }
    }
    return finalize(st);
}

LoadedSystem load_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, 0, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_system_text(buf.str());
}

}  // namespace spokit
