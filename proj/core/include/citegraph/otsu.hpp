#pragma once

#include <cstdint>
#include <vector>

namespace citegraph {

// Fixed-width histogram over [0,1].
struct Histogram {
    std::vector<std::uint64_t> counts;

    explicit Histogram(std::size_t bins = 256) : counts(bins, 0) {}
    std::size_t bins() const { return counts.size(); }
    void add(double value);
    std::uint64_t total() const;
};

// Index k of the first bin of the upper class under Otsu's criterion:
// the split maximizing between-class variance, equivalently minimizing
// within-class variance. Ties break toward the lower index. Bin values
// are taken at bin centers. Throws on a histogram whose mass sits in
// fewer than two bins ("degenerate histogram").
std::size_t otsu_split_index(const std::vector<std::uint64_t>& counts);

// Threshold on the [0,1] axis: the boundary between bins k-1 and k.
double otsu_threshold(const Histogram& histogram);

}  // namespace citegraph
