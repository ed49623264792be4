#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "doctest.h"
#include "spokit/bifix.hpp"
#include "spokit/engine.hpp"
#include "spokit/presentation.hpp"

using namespace spokit;

namespace {

Word wd(const Alphabet& ab, const std::string& s) {
    Word w;
    for (char c : s) w.push_back(static_cast<Symbol>(ab.index(std::string(1, c))));
    return w;
}

std::vector<Word> all_words(std::size_t q, std::size_t n) {
    std::vector<Word> out;
    std::vector<Word> layer{Word{}};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<Word> next;
        for (const auto& w : layer) {
            for (Symbol a = 0; a < q; ++a) {
                Word u = w;
                u.push_back(a);
                next.push_back(u);
                out.push_back(u);
            }
        }
        layer.swap(next);
    }
    return out;
}

}  // namespace

TEST_CASE("golden mean shift language and counts") {
    Alphabet ab({"0", "1"});
    auto p = make_sft(ab, {wd(ab, "11")});
    Engine eng(p, 12);
    CHECK(eng.exact());
    CHECK(!eng.empty_shift());

    // oracle: every word without the forbidden factor is admissible
    for (const auto& w : all_words(2, 10)) {
        bool expect = !is_factor(wd(ab, "11"), w);
        CHECK(eng.admissible(w) == expect);
    }
    auto lang = eng.language(10);
    std::size_t expect_count = 0;
    for (const auto& w : all_words(2, 10)) {
        if (!is_factor(wd(ab, "11"), w)) expect_count++;
    }
    CHECK(lang.size() == expect_count);
    CHECK(std::is_sorted(lang.begin(), lang.end(), shortlex_less));

    // counts follow the Fibonacci recurrence
    auto c = eng.counts(64);
    std::vector<std::uint64_t> fib{1, 1};
    for (int i = 2; i <= 66; ++i) fib.push_back(fib[i - 1] + fib[i - 2]);
    for (std::size_t k = 1; k <= 64; ++k) {
        CHECK(c.count[k - 1] == fib[k + 1]);
        CHECK(c.count_exact[k - 1]);
        CHECK(std::abs(c.log_count[k - 1] - std::log(static_cast<double>(fib[k + 1]))) < 1e-9);
    }

    // one step memory: every symbol resolves the state
    CHECK(eng.exact_synchronizing(wd(ab, "0"))->sync);
    CHECK(eng.exact_synchronizing(wd(ab, "1"))->sync);

    auto fol = eng.followers(wd(ab, "0"), 2);
    CHECK(fol == std::vector<Word>{wd(ab, "0"), wd(ab, "1"), wd(ab, "00"),
                                   wd(ab, "01"), wd(ab, "10")});
    auto pre = eng.predecessors(wd(ab, "1"), 1);
    CHECK(pre == std::vector<Word>{wd(ab, "0")});
}

TEST_CASE("full shift counts saturate cleanly") {
    Alphabet ab({"a", "b", "c"});
    auto p = make_sft(ab, {});
    Engine eng(p, 8);
    auto c = eng.counts(41);
    CHECK(c.count_exact[39]);
    std::uint64_t p40 = 1;
    for (int i = 0; i < 40; ++i) p40 *= 3;
    CHECK(c.count[39] == p40);
    CHECK(!c.count_exact[40]);
    CHECK(std::abs(c.log_count[40] - 41.0 * std::log(3.0)) < 1e-9);
    CHECK(eng.language(3).size() == 3 + 9 + 27);
}

TEST_CASE("even shift via its two state presentation") {
    Alphabet ab({"0", "1"});
    auto p = make_sofic(ab, {"A", "B"},
                        {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    Engine eng(p, 10);

    // oracle: collect labels of all paths in the graph
    std::set<Word> paths;
    std::function<void(int, Word&)> walk = [&](int s, Word& acc) {
        if (acc.size() >= 9) return;
        struct E {
            int to;
            Symbol a;
        };
        std::vector<std::vector<E>> out{{{0, 1}, {1, 0}}, {{0, 0}}};
        for (auto e : out[s]) {
            acc.push_back(e.a);
            paths.insert(acc);
            walk(e.to, acc);
            acc.pop_back();
        }
    };
    Word acc;
    walk(0, acc);
    walk(1, acc);
    auto lang = eng.language(9);
    std::set<Word> got(lang.begin(), lang.end());
    CHECK(got == paths);

    CHECK(eng.exact_synchronizing(wd(ab, "1"))->sync);
    auto zero = eng.exact_synchronizing(wd(ab, "0"));
    CHECK(!zero->sync);
    // refutation witness glues to an inadmissible word
    Word bad = zero->left;
    bad.push_back(wd(ab, "0")[0]);
    bad.insert(bad.end(), zero->right.begin(), zero->right.end());
    CHECK(!eng.admissible(bad));
    Word lw = zero->left;
    lw.push_back(wd(ab, "0")[0]);
    CHECK(eng.admissible(lw));
    Word rw = wd(ab, "0");
    rw.insert(rw.end(), zero->right.begin(), zero->right.end());
    CHECK(eng.admissible(rw));
    CHECK(eng.exact_synchronizing(wd(ab, "01"))->sync);
}

TEST_CASE("trimming removes stranded blocks") {
    Alphabet ab({"0", "1"});
    auto p = make_sft(ab, {wd(ab, "00"), wd(ab, "01")});
    Engine eng(p, 6);
    CHECK(!eng.empty_shift());
    CHECK(eng.admissible(wd(ab, "1")));
    CHECK(!eng.admissible(wd(ab, "0")));
    CHECK(eng.language(4) ==
          std::vector<Word>{wd(ab, "1"), wd(ab, "11"), wd(ab, "111"), wd(ab, "1111")});
}

TEST_CASE("fully forbidden alphabet leaves the empty shift") {
    Alphabet ab({"0", "1"});
    auto p = make_sft(ab, {wd(ab, "0"), wd(ab, "1")});
    Engine eng(p, 4);
    CHECK(eng.empty_shift());
    CHECK(!eng.admissible(wd(ab, "0")));
    CHECK(eng.language(3).empty());
    CHECK_THROWS_AS(eng.followers(wd(ab, "0"), 2), DomainError);
}

TEST_CASE("single letter code words give the full shift") {
    Alphabet ab({"a", "b"});
    auto p = make_coded(ab, {wd(ab, "a"), wd(ab, "b")});
    Engine eng(p, 5);
    CHECK(!eng.exact());
    CHECK(eng.margin() == 1);
    CHECK(eng.language(5).size() == 2 + 4 + 8 + 16 + 32);
    CHECK(eng.is_product_word(wd(ab, "abba")));
    auto prods = eng.product_words(3);
    CHECK(prods.size() == 2 + 4 + 8);
}

TEST_CASE("two overlapping bullet words generate the alternating system") {
    Alphabet ab({"a", "b"});
    BifixCode f({wd(ab, "ab"), wd(ab, "ba")});
    auto m1 = find_marks(f, wd(ab, "aba"));
    auto m2 = find_marks(f, wd(ab, "bab"));
    REQUIRE(m1.has_value());
    REQUIRE(m2.has_value());
    CHECK(m1->bullet());
    auto p = make_spo(ab, f, {*m1, *m2});
    Engine eng(p, 8);
    CHECK(eng.margin() == 3);

    auto lang = eng.language(8);
    std::vector<Word> expect;
    for (std::size_t k = 1; k <= 8; ++k) {
        Word u, v;
        for (std::size_t i = 0; i < k; ++i) {
            u.push_back(i % 2 == 0 ? 0 : 1);
            v.push_back(i % 2 == 0 ? 1 : 0);
        }
        expect.push_back(u);
        expect.push_back(v);
    }
    std::sort(expect.begin(), expect.end(), shortlex_less);
    CHECK(lang == expect);
    CHECK(!eng.admissible(wd(ab, "aa")));

    auto prods = eng.product_words(5);
    CHECK(prods == std::vector<Word>{wd(ab, "aba"), wd(ab, "bab"), wd(ab, "abab"),
                                     wd(ab, "baba"), wd(ab, "ababa"),
                                     wd(ab, "babab")});
    CHECK(eng.is_product_word(wd(ab, "abab")));
    CHECK(!eng.is_product_word(wd(ab, "ab")));
}

TEST_CASE("window language matches a direct concatenation oracle") {
    Alphabet ab({"g", "d", "0"});
    BifixCode f({wd(ab, "gdg"), wd(ab, "gddg")});
    std::vector<Word> code{wd(ab, "gdgdg"), wd(ab, "gdg0gddg"), wd(ab, "gddg00gdg"),
                           wd(ab, "gddgddg")};
    std::vector<MarkedWord> marked;
    for (const auto& c : code) {
        auto m = find_marks(f, c);
        REQUIRE(m.has_value());
        marked.push_back(*m);
    }
    auto p = make_spo(ab, f, marked);
    p.margin = 4;
    Engine eng(p, 7);
    std::size_t margin = eng.margin();
    CHECK(margin == 4);

    // oracle: walk chain sequences, collect every margin framed window;
    // a window of length 7 with margin 4 spans 15 symbols, and trimming a
    // witnessing product to the covering factors wastes at most ring-1
    // symbols on the left and word-1 on the right, so products up to
    // length 15 + 5 + 8 = 28 see every admissible window
    std::set<Word> admissible;
    std::function<void(std::size_t, Word)> grow = [&](std::size_t last, Word prefix) {
        Word full = prefix;
        for (std::size_t i = margin; i + margin < full.size(); ++i) {
            for (std::size_t l = 1; l <= 7 && i + l + margin <= full.size(); ++l) {
                admissible.insert(subword(full, i, l));
            }
        }
        if (prefix.size() >= 30) return;
        for (std::size_t j = 0; j < code.size(); ++j) {
            if (!chainable(marked[last], marked[j])) continue;
            Word ext = prefix;
            ext.resize(ext.size() - marked[last].suffix_len);
            for (Symbol a : code[j]) ext.push_back(a);
            grow(j, ext);
        }
    };
    for (std::size_t j = 0; j < code.size(); ++j) grow(j, code[j]);

    for (const auto& w : all_words(3, 7)) {
        CHECK(eng.admissible(w) == (admissible.count(w) > 0));
    }
}
