#include "spokit/language.hpp"

#include <sstream>

namespace spokit {

std::string LanguageTable::serialize() const {
    std::ostringstream os;
    for (const auto& w : words) {
        os << w.size() << '\t' << alphabet.render(w) << '\n';
    }
    return os.str();
}

LanguageTable compute_language(const Engine& eng, const Alphabet& alphabet,
                               std::size_t n) {
    LanguageTable t{alphabet, n, eng.language(n)};
    return t;
}

ExtendabilityReport extendability_report(const Engine& eng,
                                         const LanguageTable& table) {
    ExtendabilityReport r;
    r.total = table.words.size();
    for (const auto& w : table.words) {
        if (!eng.extendable_right(w)) {
            r.right_blocked++;
            if (r.right_examples.size() < ExtendabilityReport::max_examples) {
                r.right_examples.push_back(w);
            }
        }
        if (!eng.extendable_left(w)) {
            r.left_blocked++;
            if (r.left_examples.size() < ExtendabilityReport::max_examples) {
                r.left_examples.push_back(w);
            }
        }
    }
    return r;
}

}  // namespace spokit
