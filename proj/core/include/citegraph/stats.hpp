#pragma once

#include <cstddef>
#include <vector>

namespace citegraph {

// Percentile with linear interpolation between order statistics
// (the common "type 7" rule). q in [0,1]. Input need not be sorted.
double percentile(std::vector<double> values, double q);

double mean(const std::vector<double>& values);

// Population standard deviation (divides by N).
double stddev_population(const std::vector<double>& values);

}  // namespace citegraph
