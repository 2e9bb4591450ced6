#include "citegraph/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace citegraph {

double percentile(std::vector<double> values, double q) {
    if (values.empty()) throw std::invalid_argument("percentile of empty sample");
    if (q < 0.0 || q > 1.0) throw std::invalid_argument("percentile q out of [0,1]");
    std::sort(values.begin(), values.end());
    const double h = q * static_cast<double>(values.size() - 1);
    const size_t lo = static_cast<size_t>(std::floor(h));
    const size_t hi = std::min(lo + 1, values.size() - 1);
    const double frac = h - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

double mean(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("mean of empty sample");
    double s = 0.0;
    for (double v : values) s += v;
    return s / static_cast<double>(values.size());
}

double stddev_population(const std::vector<double>& values) {
    const double m = mean(values);
    double s = 0.0;
    for (double v : values) s += (v - m) * (v - m);
    return std::sqrt(s / static_cast<double>(values.size()));
}

}  // namespace citegraph
