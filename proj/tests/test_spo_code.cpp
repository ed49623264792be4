#include <string>
#include <vector>

#include "doctest.h"
#include "spokit/bifix.hpp"
#include "spokit/presentation.hpp"
#include "spokit/spo_code.hpp"

using namespace spokit;

namespace {

Word wd(const Alphabet& ab, const std::string& s) {
    Word w;
    for (char c : s) w.push_back(static_cast<Symbol>(ab.index(std::string(1, c))));
    return w;
}

Alphabet gd0() { return Alphabet({"g", "d", "0"}); }

SpoCode mixed_code() {
    Alphabet ab = gd0();
    BifixCode f({wd(ab, "gdg"), wd(ab, "gddg")});
    return SpoCode(ab, f,
                   {wd(ab, "gdgdg"), wd(ab, "gdg0gddg"), wd(ab, "gddg00gdg"),
                    wd(ab, "gddgddg")});
}

}  // namespace

TEST_CASE("code words are shortlex sorted and carry their end marks") {
    auto code = mixed_code();
    Alphabet ab = gd0();
    REQUIRE(code.words().size() == 4);
    CHECK(code.words()[0].word == wd(ab, "gdgdg"));
    CHECK(code.words()[1].word == wd(ab, "gddgddg"));
    CHECK(code.words()[2].word == wd(ab, "gdg0gddg"));
    CHECK(code.words()[3].word == wd(ab, "gddg00gdg"));
    CHECK(code.words()[0].prefix_len == 3);
    CHECK(code.words()[0].suffix_len == 3);
    CHECK(code.words()[1].prefix_len == 4);
    CHECK(code.words()[1].suffix_len == 4);
    CHECK(code.words()[2].prefix_len == 3);
    CHECK(code.words()[2].suffix_len == 4);
    CHECK(code.words()[3].prefix_len == 4);
    CHECK(code.words()[3].suffix_len == 3);
    CHECK(code.flagged().empty());
}

TEST_CASE("bullet words are those covered by their marks") {
    auto code = mixed_code();
    // gdgdg (5 <= 3+3) and gddgddg (7 <= 4+4) overlap their marks
    CHECK(code.bullet_indices() == std::vector<std::size_t>{0, 1});
    CHECK_FALSE(code.all_bullet());

    Alphabet ab({"a", "b"});
    BifixCode f({wd(ab, "ab"), wd(ab, "ba")});
    SpoCode tight(ab, f, {wd(ab, "aba"), wd(ab, "bab")});
    CHECK(tight.all_bullet());
}

TEST_CASE("unmarkable words are rejected unless kept as flagged") {
    Alphabet ab = gd0();
    BifixCode f({wd(ab, "gdg")});
    std::vector<Word> words{wd(ab, "gdg0gdg"), wd(ab, "gdg000")};
    CHECK_THROWS_AS(SpoCode(ab, f, words, false), DomainError);
    SpoCode code(ab, f, words, true);
    CHECK(code.words().size() == 1);
    REQUIRE(code.flagged().size() == 1);
    CHECK(code.flagged()[0] == wd(ab, "gdg000"));
}

TEST_CASE("successor relation follows mark agreement") {
    auto code = mixed_code();
    // suffix gdg feeds the gdg-prefixed words 0 and 2; suffix gddg
    // feeds the gddg-prefixed words 1 and 3
    CHECK(code.successors(0) == std::vector<std::size_t>{0, 2});
    CHECK(code.successors(1) == std::vector<std::size_t>{1, 3});
    CHECK(code.successors(2) == std::vector<std::size_t>{1, 3});
    CHECK(code.successors(3) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("lookup by letters") {
    auto code = mixed_code();
    Alphabet ab = gd0();
    auto i = code.index_of(wd(ab, "gddg00gdg"));
    REQUIRE(i.has_value());
    CHECK(*i == 3);
    CHECK_FALSE(code.index_of(wd(ab, "gdgd")).has_value());
}

TEST_CASE("presentation round trip keeps words and marks") {
    auto code = mixed_code();
    auto pres = code.presentation();
    const auto& d = std::get<SpoData>(pres.data);
    REQUIRE(d.words.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(d.words[i] == code.words()[i]);
    CHECK(d.flagged_words.empty());
    CHECK(pres.effective_margin() == 9);  // longest code word
}

TEST_CASE("repeated input words collapse to one entry") {
    Alphabet ab = gd0();
    BifixCode f({wd(ab, "gdg")});
    SpoCode code(ab, f, {wd(ab, "gdgdg"), wd(ab, "gdgdg")});
    CHECK(code.words().size() == 1);
}

TEST_CASE("a code needs at least one markable word") {
    Alphabet ab = gd0();
    BifixCode f({wd(ab, "gdg")});
    CHECK_THROWS_AS(SpoCode(ab, f, {wd(ab, "gdg000")}, true), DomainError);
    CHECK_THROWS_AS(SpoCode(ab, f, {}, true), DomainError);
}
