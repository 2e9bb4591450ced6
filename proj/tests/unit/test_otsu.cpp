#include <doctest.h>

#include <random>

#include "citegraph/otsu.hpp"
#include "support/oracles.hpp"

using citegraph::Histogram;
using citegraph::otsu_split_index;
using citegraph::otsu_threshold;

TEST_CASE("two equal point masses split between them") {
    Histogram h(256);
    for (int i = 0; i < 50; ++i) h.add(0.1);
    for (int i = 0; i < 50; ++i) h.add(0.6);
    const double t = otsu_threshold(h);
    CHECK(t > 0.1);
    CHECK(t <= 0.6);
    // Exhaustive oracle agrees on the split index.
    CHECK(otsu_split_index(h.counts) == oracles::otsu_split(h.counts));
}

TEST_CASE("degenerate histograms are rejected") {
    CHECK_THROWS_AS(otsu_split_index({42}), std::invalid_argument);
    std::vector<std::uint64_t> one_bin(64, 0);
    one_bin[10] = 99;
    CHECK_THROWS_AS(otsu_split_index(one_bin), std::invalid_argument);
}

TEST_CASE("matches exhaustive within-class minimization on random histograms") {
    std::mt19937_64 rng(0x0757ULL);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t bins = 2 + rng() % 255;
        std::vector<std::uint64_t> counts(bins, 0);
        // Sparse mass so empty-bin ties show up often.
        const std::size_t filled = 2 + rng() % bins;
        for (std::size_t i = 0; i < filled; ++i) {
            counts[rng() % bins] += rng() % 100;
        }
        std::size_t nonempty = 0;
        for (auto c : counts) nonempty += c > 0 ? 1 : 0;
        if (nonempty < 2) {
            counts[0] += 1;
            counts[bins - 1] += 1;
        }
        CAPTURE(trial);
        CAPTURE(bins);
        REQUIRE(otsu_split_index(counts) == oracles::otsu_split(counts));
    }
}

TEST_CASE("histogram binning clamps to [0,1]") {
    Histogram h(4);
    h.add(-0.5);
    h.add(0.0);
    h.add(0.999);
    h.add(1.0);
    h.add(2.0);
    CHECK(h.counts[0] == 2);
    CHECK(h.counts[3] == 3);
    CHECK(h.total() == 5);
}
