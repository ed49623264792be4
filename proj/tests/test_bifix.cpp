#include "doctest.h"
#include "spokit/bifix.hpp"

using namespace spokit;

namespace {

// two-letter alphabet words written as digit vectors
const Word gg{2, 2};          // gamma gamma
const Word gdg{2, 3, 2};      // gamma delta gamma
const Word gddg{2, 3, 3, 2};  // gamma delta delta gamma

}  // namespace

TEST_CASE("bifix code validation") {
    CHECK_NOTHROW(BifixCode({gdg, gddg}));
    // prefix violation
    CHECK_THROWS_AS(BifixCode({Word{0}, Word{0, 1}}), DomainError);
    // suffix violation
    CHECK_THROWS_AS(BifixCode({Word{1}, Word{0, 1}}), DomainError);
    CHECK_THROWS_AS(BifixCode(std::vector<Word>{}), DomainError);
    BifixCode f({gdg, gddg});
    CHECK(f.contains(gdg));
    CHECK(!f.contains(gg));
}

TEST_CASE("mark discovery") {
    BifixCode f({gdg, gddg});
    // gamma delta gamma 0 gamma delta delta gamma
    Word c{2, 3, 2, 0, 2, 3, 3, 2};
    auto m = find_marks(f, c);
    REQUIRE(m.has_value());
    CHECK(m->prefix_len == 3);
    CHECK(m->suffix_len == 4);
    CHECK(m->prefix_mark() == gdg);
    CHECK(m->suffix_mark() == gddg);
    CHECK(m->ring() == Word{2, 3, 2, 0});
    CHECK(!m->bullet());

    // no mark at either end
    CHECK(!find_marks(f, Word{0, 1, 0}).has_value());
    // whole word equal to a code word is not a proper mark
    CHECK(!find_marks(f, gdg).has_value());
}

TEST_CASE("bullet words overlap their marks") {
    BifixCode f({gdg, gddg});
    // gamma delta gamma delta gamma: marks overlap at the middle gamma
    Word c{2, 3, 2, 3, 2};
    auto m = find_marks(f, c);
    REQUIRE(m.has_value());
    CHECK(m->prefix_len == 3);
    CHECK(m->suffix_len == 3);
    CHECK(m->bullet());
    CHECK(m->ring() == Word{2, 3});
}

TEST_CASE("chaining and the overlap product") {
    BifixCode f({gdg, gddg});
    Word c1{2, 3, 2, 3, 2};           // ring gamma delta, suffix gdg
    Word c2{2, 3, 2, 0, 2, 3, 3, 2};  // prefix gdg, suffix gddg
    auto m1 = *find_marks(f, c1);
    auto m2 = *find_marks(f, c2);
    CHECK(chainable(m1, m2));
    CHECK(!chainable(m2, m1));
    auto p = ostar(m1, m2);
    CHECK(p.word == Word{2, 3, 2, 3, 2, 0, 2, 3, 3, 2});
    CHECK(p.prefix_len == m1.prefix_len);
    CHECK(p.suffix_len == m2.suffix_len);

    // left fold of three factors equals stepwise products
    auto q1 = ostar(ostar(m1, m1), m2);
    auto q2 = ostar_product({m1, m1, m2});
    CHECK(q1.word == q2.word);
    CHECK(q1.word == Word{2, 3, 2, 3, 2, 3, 2, 0, 2, 3, 3, 2});
}

TEST_CASE("product of a single factor is the word itself") {
    BifixCode f({gdg, gddg});
    auto m = *find_marks(f, Word{2, 3, 2, 3, 2});
    auto p = ostar_product({m});
    CHECK(p.word == m.word);
    CHECK_THROWS_AS(ostar_product({}), DomainError);
}
