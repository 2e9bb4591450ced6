#include <doctest.h>

#include <random>
#include <string>

#include "citegraph/levenshtein.hpp"
#include "support/oracles.hpp"

using citegraph::levenshtein_distance;
using citegraph::levenshtein_ratio;

namespace {

std::string random_string(std::mt19937_64& rng, std::size_t max_len) {
    static const char alphabet[] = "abcdefghij ,.\"";
    std::string s;
    const auto len = rng() % (max_len + 1);
    for (std::size_t i = 0; i < len; ++i) {
        s.push_back(alphabet[rng() % (sizeof(alphabet) - 1)]);
    }
    return s;
}

}  // namespace

TEST_CASE("kitten/sitting distance and ratio") {
    CHECK(levenshtein_distance("kitten", "sitting") == 3);
    CHECK(levenshtein_ratio("kitten", "sitting") == doctest::Approx(3.0 / 13.0));
}

TEST_CASE("identity gives zero ratio") {
    CHECK(levenshtein_ratio("", "") == 0.0);
    CHECK(levenshtein_ratio("graphene", "graphene") == 0.0);
}

TEST_CASE("empty versus non-empty is maximal") {
    CHECK(levenshtein_ratio("", "abc") == 1.0);
    CHECK(levenshtein_ratio("abc", "") == 1.0);
}

TEST_CASE("agrees with the DP oracle on random pairs") {
    std::mt19937_64 rng(0x5eedULL);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto a = random_string(rng, 64);
        const auto b = random_string(rng, 64);
        const auto d = levenshtein_distance(a, b);
        CAPTURE(a);
        CAPTURE(b);
        REQUIRE(d == oracles::levenshtein(a, b));
        REQUIRE(levenshtein_distance(b, a) == d);           // symmetry
        REQUIRE((d == 0) == (a == b));                      // zero iff equal
        REQUIRE(levenshtein_ratio(a, b) >= 0.0);
        REQUIRE(levenshtein_ratio(a, b) <= 1.0);
    }
}

TEST_CASE("triangle-like bound on random triples") {
    std::mt19937_64 rng(0x7714ULL);
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = random_string(rng, 40);
        const auto b = random_string(rng, 40);
        const auto c = random_string(rng, 40);
        REQUIRE(levenshtein_distance(a, c) <=
                levenshtein_distance(a, b) + levenshtein_distance(b, c));
    }
}
