#pragma once

#include <string>
#include <string_view>

namespace citegraph {

// Region attributed to nothing; kept as its own bucket in credit reports.
inline constexpr std::string_view kUnknownRegion = "??";

// Maps a country or patent-office name to its 2-letter code. Matching is
// case-insensitive and tolerant of trailing punctuation and zip fragments
// ("Peoples R China", "USA", "U.S.A.", "South Korea").
std::string region_from_country_name(std::string_view name);

// Region of an affiliation string: the last comma-separated token looked
// up in the gazetteer; "??" when unmatched.
std::string region_from_affiliation(std::string_view raw_affiliation);

}  // namespace citegraph
