#include "citegraph/match_scoring.hpp"

#include <algorithm>

#include "citegraph/levenshtein.hpp"
#include "citegraph/util.hpp"

namespace citegraph {

namespace {

// Straight quote plus the UTF-8 curly doubles.
const std::string_view kQuotes[] = {"\"", "“", "”"};

std::string join_space(const std::vector<std::string>& parts, std::string_view tail) {
    std::string out;
    for (const auto& p : parts) {
        if (p.empty()) continue;
        if (!out.empty()) out.push_back(' ');
        out += p;
    }
    if (!tail.empty()) {
        if (!out.empty()) out.push_back(' ');
        out += tail;
    }
    return out;
}

}  // namespace

std::string truncate_at_last_quote(std::string_view text) {
    size_t cut = std::string_view::npos;
    for (const auto& q : kQuotes) {
        const size_t pos = text.rfind(q);
        if (pos != std::string_view::npos) {
            const size_t end = pos + q.size();
            if (cut == std::string_view::npos || end > cut) cut = end;
        }
    }
    if (cut == std::string_view::npos) return std::string(text);
    return std::string(text.substr(0, cut));
}

MatchScore score_candidate(const RawReference& ref, const MetadataCandidate& candidate,
                           FomAggregate aggregate) {
    const std::string full = std::string(trim(ref.text));
    const std::string truncated = truncate_at_last_quote(full);

    const std::string all_authors = join_space(candidate.authors, candidate.title);
    const std::string first_author = join_space(
        candidate.authors.empty() ? std::vector<std::string>{}
                                  : std::vector<std::string>{candidate.authors.front()},
        candidate.title);

    MatchScore s;
    s.r_full_all = levenshtein_ratio(full, all_authors);
    s.r_full_first = levenshtein_ratio(full, first_author);
    s.r_trunc_all = levenshtein_ratio(truncated, all_authors);
    s.r_trunc_first = levenshtein_ratio(truncated, first_author);
    const auto [lo, hi] = std::minmax({s.r_full_all, s.r_full_first, s.r_trunc_all,
                                       s.r_trunc_first});
    s.figure_of_merit = aggregate == FomAggregate::Min ? lo : hi;
    return s;
}

}  // namespace citegraph
