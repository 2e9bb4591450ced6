// Independent reference implementations used to check the library.
// These deliberately use the slow, obvious formulations and share no
// code with the production paths.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace oracles {

// Full-matrix Wagner-Fischer edit distance.
inline std::size_t levenshtein(const std::string& a, const std::string& b) {
    const std::size_t n = a.size(), m = b.size();
    std::vector<std::vector<std::size_t>> d(n + 1, std::vector<std::size_t>(m + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) d[i][0] = i;
    for (std::size_t j = 0; j <= m; ++j) d[0][j] = j;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
            d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, d[i - 1][j - 1] + cost});
        }
    }
    return d[n][m];
}

inline double levenshtein_ratio(const std::string& a, const std::string& b) {
    if (a.empty() && b.empty()) return 0.0;
    return static_cast<double>(levenshtein(a, b)) / static_cast<double>(a.size() + b.size());
}

// Exhaustive scan minimizing the within-class sum of squares over every
// split point; ties keep the lowest split. Bin values at bin centers.
inline std::size_t otsu_split(const std::vector<std::uint64_t>& counts) {
    const std::size_t n = counts.size();
    auto class_ss = [&](std::size_t lo, std::size_t hi) {  // [lo, hi)
        double w = 0.0, sum = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            w += static_cast<double>(counts[i]);
            sum += static_cast<double>(counts[i]) * (static_cast<double>(i) + 0.5);
        }
        if (w == 0.0) return std::pair<double, double>{0.0, -1.0};
        const double mu = sum / w;
        double ss = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            const double dv = (static_cast<double>(i) + 0.5) - mu;
            ss += static_cast<double>(counts[i]) * dv * dv;
        }
        return std::pair<double, double>{ss, w};
    };

    std::size_t best_k = 0;
    double best_within = -1.0;
    for (std::size_t k = 1; k < n; ++k) {
        const auto [ss0, w0] = class_ss(0, k);
        const auto [ss1, w1] = class_ss(k, n);
        if (w0 <= 0.0 || w1 <= 0.0) continue;
        const double within = ss0 + ss1;
        if (best_within < 0.0 || within < best_within) {
            best_within = within;
            best_k = k;
        }
    }
    return best_k;
}

// Linear-interpolation quantile over order statistics.
inline double quantile(std::vector<double> v, double q) {
    std::sort(v.begin(), v.end());
    const double h = q * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

}  // namespace oracles
