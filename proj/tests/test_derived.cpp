#include <cmath>
#include <numeric>
#include <set>

#include "doctest.h"
#include "spokit/derived.hpp"
#include "spokit/engine.hpp"
#include "spokit/entropy.hpp"
#include "spokit/parse.hpp"
#include "spokit/spo_code.hpp"

using namespace spokit;

namespace {

Word wd(const Alphabet& ab, const std::string& s) {
    Word w;
    for (char c : s) w.push_back(static_cast<Symbol>(ab.index(std::string(1, c))));
    return w;
}

// two bullet words and two longer words over marks gdg / gddg
SpoCode mixed_code() {
    Alphabet ab({"g", "d", "0"});
    BifixCode f({wd(ab, "gdg"), wd(ab, "gddg")});
    return SpoCode(ab, f,
                   {wd(ab, "gdgdg"), wd(ab, "gddgddg"), wd(ab, "gdg0gddg"),
                    wd(ab, "gddg00gdg")});
}

SpoCode bullet_code() {
    Alphabet ab({"a", "b"});
    BifixCode f({wd(ab, "ab"), wd(ab, "ba")});
    return SpoCode(ab, f, {wd(ab, "aba"), wd(ab, "bab")});
}

}  // namespace

TEST_CASE("a code of bullet words is its own closure") {
    auto code = bullet_code();
    auto hat = hat_code(code, 20);
    REQUIRE(hat.words.size() == 2);
    CHECK(hat.words == code.words());
    CHECK(hat.chains == std::vector<std::vector<std::size_t>>{{0}, {1}});
    CHECK_FALSE(hat.truncated);
    CHECK_FALSE(hat.no_bullets);
    CHECK(hat.collisions.empty());

    auto mc = markov_code(code, hat);
    CHECK(mc.words == std::vector<Word>{wd(code.alphabet(), "a"), wd(code.alphabet(), "b")});
    CHECK(mc.prefix_marks ==
          std::vector<Word>{wd(code.alphabet(), "ab"), wd(code.alphabet(), "ba")});
    CHECK(mc.transition == std::vector<std::vector<std::uint8_t>>{{0, 1}, {1, 0}});
    CHECK(mc.merged.empty());

    auto es = edge_shift(mc);
    REQUIRE(es.states.size() == 2);
    auto h = graph_entropy(es.adjacency);
    REQUIRE(h.has_value());
    CHECK(std::abs(*h) < 1e-12);
}

TEST_CASE("closure of the mixed code stops at the cap") {
    auto code = mixed_code();
    auto hat = hat_code(code, 30);
    CHECK(hat.truncated);
    CHECK(hat.collisions.empty());
    REQUIRE(hat.words.size() == 10);

    std::vector<std::vector<std::size_t>> chains = {
        {0},          {1},          {2, 1},          {3, 0},          {2, 3, 0},
        {3, 2, 1},    {2, 3, 2, 1}, {3, 2, 3, 0},    {2, 3, 2, 3, 0}, {3, 2, 3, 2, 1}};
    CHECK(hat.chains == chains);

    std::vector<std::size_t> lens = {5, 7, 11, 11, 15, 17, 21, 21, 25, 27};
    std::vector<std::size_t> plens = {3, 4, 3, 4, 3, 4, 3, 4, 3, 4};
    std::vector<std::size_t> slens = {3, 4, 4, 3, 3, 4, 4, 3, 3, 4};
    for (std::size_t i = 0; i < 10; ++i) {
        CHECK(hat.words[i].word.size() == lens[i]);
        CHECK(hat.words[i].prefix_len == plens[i]);
        CHECK(hat.words[i].suffix_len == slens[i]);
    }
}

TEST_CASE("closure words multiply out to their chains") {
    auto code = mixed_code();
    auto hat = hat_code(code, 30);
    for (std::size_t i = 0; i < hat.words.size(); ++i) {
        std::vector<MarkedWord> seq;
        for (auto j : hat.chains[i]) seq.push_back(code.words()[j]);
        CHECK(ostar_product(seq) == hat.words[i]);
        // every closure word ends with a bullet and every proper prefix
        // of the chain does not
        CHECK(code.words()[hat.chains[i].back()].bullet());
        for (std::size_t k = 0; k + 1 < hat.chains[i].size(); ++k) {
            CHECK_FALSE(code.words()[hat.chains[i][k]].bullet());
        }
    }
}

TEST_CASE("ring words carry the transition table") {
    auto code = mixed_code();
    auto hat = hat_code(code, 30);
    auto mc = markov_code(code, hat);
    REQUIRE(mc.words.size() == 10);
    CHECK(mc.merged.empty());

    std::size_t total = 0;
    for (std::size_t i = 0; i < 10; ++i) {
        CHECK(mc.words[i] == hat.words[i].ring());
        CHECK(mc.prefix_marks[i] == hat.words[i].prefix_mark());
        CHECK(mc.origin[i] == i);
        total += mc.words[i].size();
        for (std::size_t j = 0; j < 10; ++j) {
            CHECK(mc.transition[i][j] == (chainable(hat.words[i], hat.words[j]) ? 1 : 0));
        }
    }
    CHECK(total == 125);

    auto es = edge_shift(mc);
    CHECK(es.states.size() == 125);
    // positions are counted from one; inner positions have a single
    // outgoing edge, the last position fans out along the transition row
    for (std::size_t s = 0; s < es.states.size(); ++s) {
        auto [word, pos] = es.states[s];
        std::int64_t row = 0;
        for (auto v : es.adjacency[s]) row += v;
        if (pos < mc.words[word].size()) {
            CHECK(row == 1);
        } else {
            std::int64_t fan = 0;
            for (std::size_t j = 0; j < 10; ++j) fan += mc.transition[word][j];
            CHECK(row == fan);
        }
    }
    auto h = graph_entropy(es.adjacency);
    REQUIRE(h.has_value());
    CHECK(std::abs(*h - 0.19325399962549555) < 1e-9);
}

TEST_CASE("closure products are products of the base code") {
    auto code = mixed_code();
    auto hat = hat_code(code, 30);
    std::vector<Word> hat_letters;
    for (const auto& mw : hat.words) hat_letters.push_back(mw.word);
    SpoCode hat_spo(code.alphabet(), code.bifix(), hat_letters);

    Engine base(code.presentation(), 2);
    Engine hat_eng(hat_spo.presentation(), 2);
    auto prods = hat_eng.product_words(16);
    CHECK(!prods.empty());
    for (const auto& w : prods) {
        CHECK(base.is_product_word(w));
    }
}

TEST_CASE("ring graph and closure code present the same windows") {
    auto code = mixed_code();
    auto hat = hat_code(code, 30);
    auto mc = markov_code(code, hat);

    std::vector<Word> hat_letters;
    for (const auto& mw : hat.words) hat_letters.push_back(mw.word);
    SpoCode hat_spo(code.alphabet(), code.bifix(), hat_letters);

    auto hat_pres = hat_spo.presentation();
    hat_pres.margin = 27;
    auto markov_pres = make_markov(code.alphabet(), mc.words, mc.prefix_marks,
                                   mc.transition);
    markov_pres.margin = 27;

    Engine he(hat_pres, 10);
    Engine me(markov_pres, 10);
    auto hl = he.language(10);
    auto ml = me.language(10);
    CHECK(hl == ml);
}

TEST_CASE("window starts map into the ring graph") {
    auto code = mixed_code();
    auto hat = hat_code(code, 30);
    auto mc = markov_code(code, hat);
    std::vector<Word> hat_letters;
    for (const auto& mw : hat.words) hat_letters.push_back(mw.word);
    SpoCode hat_spo(code.alphabet(), code.bifix(), hat_letters);
    const Alphabet& ab = code.alphabet();

    auto es = edge_shift(mc);

    // whole first closure word: the window starts at ring 0, offset 0
    auto parses = parse_window(hat_spo, wd(ab, "gdgdg"));
    REQUIRE(!parses.empty());
    bool found = false;
    for (const auto& p : parses) {
        if (p.starts[0] != 0) continue;
        auto ps = phi_index(mc, hat_spo, p);
        CHECK(ps.markov_index == 0);
        CHECK(ps.offset == 0);
        CHECK(es.states[ps.edge_state] == std::make_pair(std::size_t{0}, std::size_t{1}));
        found = true;
    }
    CHECK(found);

    // shifted window: position 0 sits one step into the first ring
    auto shifted = parse_window(hat_spo, wd(ab, "dgdgdg"));
    bool hit = false;
    for (const auto& p : shifted) {
        if (p.starts[0] != -1) continue;
        auto ps = phi_index(mc, hat_spo, p);
        CHECK(ps.offset == 1);
        CHECK(es.states[ps.edge_state] ==
              std::make_pair(ps.markov_index, ps.offset + 1));
        hit = true;
    }
    CHECK(hit);
}

TEST_CASE("length splits products from the other admissible words") {
    auto code = mixed_code();
    Engine eng(code.presentation(), 14);
    auto rep = entropy_gap(eng, 14);
    CHECK(rep.n == 14);
    CHECK(rep.product_count == 4);
    CHECK(rep.other_count == 96);
    REQUIRE(rep.inner_rate.has_value());
    REQUIRE(rep.outer_rate.has_value());
    CHECK(std::abs(*rep.inner_rate - std::log(4.0) / 14.0) < 1e-12);
    CHECK(std::abs(*rep.outer_rate - std::log(96.0) / 14.0) < 1e-12);
    CHECK(*rep.inner_rate < *rep.outer_rate);
}
