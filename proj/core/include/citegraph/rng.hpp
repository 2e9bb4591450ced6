#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace citegraph {

// Unbiased bounded integer in [0, n). Written out instead of
// uniform_int_distribution so that seeded runs reproduce bit-identically
// across standard library implementations.
inline std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

// First k elements of a seeded Fisher-Yates shuffle; sampling without
// replacement over indexes [0, n).
inline std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k,
                                                           std::uint64_t seed) {
    if (k > n) k = n;
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(bounded_rand(rng, n - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    return idx;
}

}  // namespace citegraph
