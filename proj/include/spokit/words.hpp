#ifndef SPOKIT_WORDS_HPP
#define SPOKIT_WORDS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace spokit {

// Thrown when inputs violate an operation's precondition.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an enumeration exceeds the configured budget.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown by the presentation file parser; carries a source location.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + msg),
          line(line), column(column) {}
    int line;
    int column;
};

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

// Finite ordered set of named symbols. Words store indices into it.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(Symbol s) const;
    bool has(const std::string& name) const;
    Symbol index(const std::string& name) const;
    const std::vector<std::string>& names() const { return names_; }

    // Renders a word as comma-separated symbol names.
    std::string render(const Word& w) const;
    // Parses a comma-separated list of symbol names.
    Word parse(const std::string& text) const;

    bool operator==(const Alphabet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
};

bool is_prefix(const Word& p, const Word& w);
bool is_suffix(const Word& s, const Word& w);
bool is_factor(const Word& f, const Word& w);
Word subword(const Word& w, std::size_t begin, std::size_t len);
Word concat(const Word& a, const Word& b);
Word repeat(const Word& w, std::size_t times);

// Length-then-lexicographic order used everywhere words are sorted.
bool shortlex_less(const Word& a, const Word& b);

}  // namespace spokit

#endif
