#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "spokit/engine.hpp"
#include "spokit/entropy.hpp"
#include "spokit/presentation.hpp"
#include "spokit/spectral.hpp"

using namespace spokit;

namespace {

Word wd(const Alphabet& ab, const std::string& s) {
    Word w;
    for (char c : s) w.push_back(static_cast<Symbol>(ab.index(std::string(1, c))));
    return w;
}

}  // namespace

TEST_CASE("characteristic polynomial of small integer matrices") {
    // golden mean transition matrix [[1,1],[1,0]]: x^2 - x - 1
    IntMatrix gm{{1, 1}, {1, 0}};
    CHECK(char_poly(gm) == std::vector<std::int64_t>{-1, -1, 1});

    IntMatrix id{{1, 0}, {0, 1}};
    CHECK(char_poly(id) == std::vector<std::int64_t>{1, -2, 1});

    IntMatrix z{{0}};
    CHECK(char_poly(z) == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("spectral radius hits the largest eigenvalue") {
    IntMatrix gm{{1, 1}, {1, 0}};
    double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(spectral_radius(gm) - phi) < 1e-10);

    IntMatrix full3{{3}};
    CHECK(std::abs(spectral_radius(full3) - 3.0) < 1e-12);

    // period two permutation: radius one
    IntMatrix perm{{0, 1}, {1, 0}};
    CHECK(std::abs(spectral_radius(perm) - 1.0) < 1e-10);
}

TEST_CASE("graph entropy is the log of the radius") {
    IntMatrix gm{{1, 1}, {1, 0}};
    double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    auto h = graph_entropy(gm);
    REQUIRE(h.has_value());
    CHECK(std::abs(*h - std::log(phi)) < 1e-8);

    IntMatrix nil{{0, 1}, {0, 0}};
    CHECK_FALSE(graph_entropy(nil).has_value());
}

TEST_CASE("engine adjacency entropy agrees with counting") {
    Alphabet ab({"0", "1"});
    auto p = make_sft(ab, {wd(ab, "11")});
    Engine eng(p, 30);
    auto h = graph_entropy(eng.adjacency());
    REQUIRE(h.has_value());
    double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(std::abs(*h - std::log(phi)) < 1e-8);

    auto est = entropy_estimate(eng, 30);
    REQUIRE(est.final_rate.has_value());
    CHECK(std::abs(*est.final_rate - std::log(phi)) < 2e-2);
}

TEST_CASE("full shift entropies are exact logs") {
    for (std::size_t q : {2, 3, 5}) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < q; ++i) names.push_back(std::to_string(i));
        auto p = make_sft(Alphabet(names), {});
        Engine eng(p, 8);
        auto h = graph_entropy(eng.adjacency());
        REQUIRE(h.has_value());
        CHECK(std::abs(*h - std::log(static_cast<double>(q))) < 1e-12);
    }
}
