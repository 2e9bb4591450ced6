#include "citegraph/funding.hpp"

#include <string>
#include <unordered_map>

namespace citegraph {

FundingAudit funding_audit(const std::vector<JournalRecord>& records) {
    FundingAudit audit;
    audit.papers_total = records.size();

    std::unordered_map<std::string, bool> author_funded;
    for (const auto& rec : records) {
        if (!rec.funding_acknowledged) ++audit.papers_without_funding_info;
        for (const auto& a : rec.authors) {
            auto [it, inserted] = author_funded.try_emplace(a.name, rec.funding_acknowledged);
            if (!inserted && rec.funding_acknowledged) it->second = true;
        }
    }

    for (const auto& [name, funded] : author_funded) {
        if (funded) {
            ++audit.funded_authors;
        } else {
            ++audit.unfunded_authors;
        }
    }

    for (const auto& rec : records) {
        if (rec.authors.empty()) continue;
        bool all_unfunded = true;
        for (const auto& a : rec.authors) {
            if (author_funded.at(a.name)) {
                all_unfunded = false;
                break;
            }
        }
        if (all_unfunded) ++audit.papers_by_unfunded_authors;
    }
    return audit;
}

}  // namespace citegraph
