#pragma once

#include <cstddef>
#include <vector>

#include "citegraph/records.hpp"

namespace citegraph {

struct FundingAudit {
    std::size_t papers_total = 0;
    std::size_t papers_without_funding_info = 0;
    std::size_t funded_authors = 0;
    std::size_t unfunded_authors = 0;
    // Papers all of whose authors never acknowledged funding anywhere.
    std::size_t papers_by_unfunded_authors = 0;
};

// An author is funded iff at least one of their papers acknowledges
// funding. papers_by_unfunded_authors requires at least one author.
FundingAudit funding_audit(const std::vector<JournalRecord>& records);

}  // namespace citegraph
