#include "citegraph/levenshtein.hpp"

#include <algorithm>
#include <vector>

namespace citegraph {

std::size_t levenshtein_distance(std::string_view a, std::string_view b) {
    if (a.size() < b.size()) std::swap(a, b);  // b is the shorter string
    if (b.empty()) return a.size();

    // Two-row DP over the shorter string.
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (std::size_t i = 0; i < a.size(); ++i) {
        cur[0] = i + 1;
        for (std::size_t j = 0; j < b.size(); ++j) {
            const std::size_t sub = prev[j] + (a[i] == b[j] ? 0 : 1);
            cur[j + 1] = std::min({cur[j] + 1, prev[j + 1] + 1, sub});
        }
        prev.swap(cur);
    }
    return prev[b.size()];
}

double levenshtein_ratio(std::string_view a, std::string_view b) {
    const std::size_t total = a.size() + b.size();
    if (total == 0) return 0.0;
    return static_cast<double>(levenshtein_distance(a, b)) / static_cast<double>(total);
}

}  // namespace citegraph
