#pragma once

#include <cstddef>
#include <string_view>

namespace citegraph {

// Plain edit distance (insert/delete/substitute, unit costs) over bytes.
std::size_t levenshtein_distance(std::string_view a, std::string_view b);

// distance / (|a| + |b|), in [0,1]; 0 when both strings are empty.
double levenshtein_ratio(std::string_view a, std::string_view b);

}  // namespace citegraph
