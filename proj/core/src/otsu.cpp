#include "citegraph/otsu.hpp"

#include <cmath>
#include <stdexcept>

namespace citegraph {

void Histogram::add(double value) {
    if (std::isnan(value)) return;
    if (value < 0.0) value = 0.0;
    if (value > 1.0) value = 1.0;
    auto bin = static_cast<std::size_t>(value * static_cast<double>(counts.size()));
    if (bin >= counts.size()) bin = counts.size() - 1;  // value == 1.0
    ++counts[bin];
}

std::uint64_t Histogram::total() const {
    std::uint64_t n = 0;
    for (auto c : counts) n += c;
    return n;
}

std::size_t otsu_split_index(const std::vector<std::uint64_t>& counts) {
    const std::size_t n = counts.size();
    if (n < 2) throw std::invalid_argument("degenerate histogram");

    std::size_t nonempty = 0;
    double total_weight = 0.0;
    double total_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (counts[i] > 0) ++nonempty;
        total_weight += static_cast<double>(counts[i]);
        total_sum += static_cast<double>(counts[i]) * (static_cast<double>(i) + 0.5);
    }
    if (nonempty < 2) throw std::invalid_argument("degenerate histogram");

    // Scan split points k: lower class = bins [0,k), upper = [k,n).
    // Strict > keeps the first (lowest) maximizer.
    std::size_t best_k = 1;
    double best_between = -1.0;
    double w0 = 0.0;
    double sum0 = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
        w0 += static_cast<double>(counts[k - 1]);
        sum0 += static_cast<double>(counts[k - 1]) * (static_cast<double>(k - 1) + 0.5);
        const double w1 = total_weight - w0;
        if (w0 == 0.0 || w1 == 0.0) continue;
        const double mu0 = sum0 / w0;
        const double mu1 = (total_sum - sum0) / w1;
        const double between = w0 * w1 * (mu0 - mu1) * (mu0 - mu1);
        if (between > best_between) {
            best_between = between;
            best_k = k;
        }
    }
    return best_k;
}

double otsu_threshold(const Histogram& histogram) {
    const std::size_t k = otsu_split_index(histogram.counts);
    return static_cast<double>(k) / static_cast<double>(histogram.bins());
}

}  // namespace citegraph
