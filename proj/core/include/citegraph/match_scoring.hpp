#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "citegraph/records.hpp"

namespace citegraph {

// One metadata-service answer for a reference query.
struct MetadataCandidate {
    std::string doi;  // normalized
    std::string title;
    std::vector<std::string> authors;
};

// The four Levenshtein ratios and their aggregate.
struct MatchScore {
    double r_full_all = 1.0;    // full reference vs all authors + title
    double r_full_first = 1.0;  // full reference vs first author + title
    double r_trunc_all = 1.0;   // truncated reference vs all authors + title
    double r_trunc_first = 1.0; // truncated reference vs first author + title
    double figure_of_merit = 1.0;
};

enum class FomAggregate {
    Min,  // default: tolerant of references with missing author/title fields
    Max,  // comparison mode
};

// Prefix of `text` up to and including the last double quotation mark
// (straight or curly); unchanged when there is none. In cleaned
// references the title conventionally ends at that quote.
std::string truncate_at_last_quote(std::string_view text);

// Scores a candidate against a reference string with four comparisons:
// {full, truncated} reference x {all authors, first author} + title.
// Author list and title are joined with single spaces. Empty candidate
// fields degrade the ratios, they never fail.
MatchScore score_candidate(const RawReference& ref, const MetadataCandidate& candidate,
                           FomAggregate aggregate = FomAggregate::Min);

}  // namespace citegraph
