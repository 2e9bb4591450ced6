#pragma once

#include <map>
#include <string>
#include <vector>

#include "citegraph/graph.hpp"
#include "citegraph/series.hpp"

namespace citegraph {

// Per-author credit shares for one paper; shares sum to 1.
struct CreditVector {
    PublicationId paper;
    std::vector<std::pair<std::string, double>> shares;  // author name -> share
};

// Collective credit allocation through co-citation: the papers co-cited
// with the target weigh each target author by how strongly the citing
// community associates them with the work. An uncited paper falls back
// to a uniform split.
CreditVector author_credit(const JournalRecord& paper, const CitationGraph& graph,
                           const Corpus& corpus);

struct RegionCredit {
    // region -> year -> credit; "??" holds unattributable shares.
    std::map<std::string, std::map<int, double>> totals;
    std::size_t papers_credited = 0;

    double total() const;
    double total_for(const std::string& region) const;
};

// Splits each author's share evenly across their affiliations on the
// paper and accumulates per region and publication year.
RegionCredit region_credit(const Corpus& corpus, const std::vector<CreditVector>& credits,
                           YearWindow window);

}  // namespace citegraph
