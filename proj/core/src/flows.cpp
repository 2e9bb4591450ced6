#include "citegraph/flows.hpp"

#include <algorithm>

#include "citegraph/errors.hpp"
#include "citegraph/region_gazetteer.hpp"

namespace citegraph {

namespace {

const Collection& require_collection(const CollectionRegistry& registry,
                                     std::string_view name) {
    const Collection* c = registry.find(name);
    if (!c) throw ConfigError("unknown collection: " + std::string(name));
    return *c;
}

std::vector<std::string> top_regions(const std::map<std::string, double>& weights,
                                     std::size_t k) {
    std::vector<std::pair<std::string, double>> items(weights.begin(), weights.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    std::vector<std::string> out;
    for (const auto& [region, w] : items) {
        if (out.size() == k) break;
        if (region == kUnknownRegion) continue;
        out.push_back(region);
    }
    return out;
}

FlowMatrix make_matrix(std::vector<std::string> regions) {
    FlowMatrix m;
    m.regions = std::move(regions);
    m.counts.assign(m.regions.size(), std::vector<double>(m.regions.size(), 0.0));
    m.node_sizes.assign(m.regions.size(), 0.0);
    return m;
}

void finish_matrix(FlowMatrix& m) {
    m.fractions.assign(m.regions.size(), std::vector<double>(m.regions.size(), 0.0));
    for (std::size_t i = 0; i < m.regions.size(); ++i) {
        double row_total = 0.0;
        for (double c : m.counts[i]) row_total += c;
        if (row_total == 0.0) continue;
        for (std::size_t j = 0; j < m.regions.size(); ++j) {
            m.fractions[i][j] = m.counts[i][j] / row_total;
        }
    }
}

// First-author affiliation regions with equal split per affiliation;
// empty when unattributable.
std::vector<std::pair<std::string, double>> first_author_regions(const JournalRecord& rec) {
    std::vector<std::pair<std::string, double>> out;
    if (rec.authors.empty()) return out;
    const auto& affs = rec.authors.front().affiliations;
    std::vector<const Affiliation*> usable;
    for (const auto& a : affs) {
        if (a.region != kUnknownRegion) usable.push_back(&a);
    }
    if (usable.empty()) return out;
    const double w = 1.0 / static_cast<double>(usable.size());
    for (const auto* a : usable) out.emplace_back(a->region, w);
    return out;
}

}  // namespace

std::optional<std::size_t> FlowMatrix::index_of(std::string_view region) const {
    for (std::size_t i = 0; i < regions.size(); ++i) {
        if (regions[i] == region) return i;
    }
    return std::nullopt;
}

FlowMatrix patent_flow(const Corpus& corpus, const CollectionRegistry& registry,
                       std::string_view focal, std::size_t top_k,
                       const std::vector<std::string>& regions) {
    const Collection& collection = require_collection(registry, focal);
    if (collection.side != Side::Technology) {
        throw ConfigError("patent flow needs a technology collection");
    }

    std::vector<const PatentRecord*> members;
    std::map<std::string, double> patents_per_region;
    for (const auto& rec : corpus.patents()) {
        if (registry.classify(rec.id) != collection.name) continue;
        members.push_back(&rec);
        patents_per_region[rec.region] += 1.0;
    }

    FlowMatrix m = make_matrix(regions.empty() ? top_regions(patents_per_region, top_k)
                                               : regions);
    for (const auto* rec : members) {
        const auto citing = m.index_of(rec->region);
        for (const auto& ref : rec->patent_refs) {
            const std::string cited_region(patent_region(ref));
            const auto cited = m.index_of(cited_region);
            if (cited) m.node_sizes[*cited] += 1.0;
            if (citing && cited) {
                m.counts[*citing][*cited] += 1.0;
            } else if (!cited) {
                m.excluded_weight += 1.0;
            }
        }
    }
    finish_matrix(m);
    return m;
}

FlowMatrix journal_flow(const Corpus& corpus, const CitationGraph& graph,
                        const CollectionRegistry& registry, std::string_view focal,
                        std::size_t top_k, const std::vector<std::string>& regions) {
    const Collection& collection = require_collection(registry, focal);
    if (collection.side != Side::Science) {
        throw ConfigError("journal flow needs a science collection");
    }

    std::vector<const JournalRecord*> members;
    std::map<std::string, double> pubs_per_region;
    for (const auto& rec : corpus.journals()) {
        if (registry.classify(rec.id) != collection.name) continue;
        members.push_back(&rec);
        for (const auto& [region, w] : first_author_regions(rec)) {
            pubs_per_region[region] += w;
        }
    }

    FlowMatrix m =
        make_matrix(regions.empty() ? top_regions(pubs_per_region, top_k) : regions);
    for (const auto* rec : members) {
        const auto citing_regions = first_author_regions(*rec);
        const auto node = graph.node_of(rec->id);
        if (!node) continue;
        for (const auto& e : graph.out(*node)) {
            if (e.kind != EdgeKind::PaperCitesPaper) continue;
            const auto& cited_id = graph.id_of(e.other);
            // Only papers inside the Science collections have usable
            // author metadata.
            if (registry.classify(cited_id) == kOthersLabel) continue;
            const JournalRecord* cited_rec = corpus.journal(cited_id);
            if (!cited_rec) {
                m.excluded_weight += 1.0;
                continue;
            }
            const auto cited_regions = first_author_regions(*cited_rec);
            if (citing_regions.empty() || cited_regions.empty()) {
                m.excluded_weight += 1.0;
                continue;
            }
            for (const auto& [cited_region, w_cited] : cited_regions) {
                const auto cited = m.index_of(cited_region);
                if (cited) m.node_sizes[*cited] += w_cited;
                for (const auto& [citing_region, w_citing] : citing_regions) {
                    const auto citing = m.index_of(citing_region);
                    if (citing && cited) {
                        m.counts[*citing][*cited] += w_citing * w_cited;
                    }
                }
            }
        }
    }
    finish_matrix(m);
    return m;
}

RankTable rank_table(const std::map<std::string, std::map<int, double>>& scores_by_region,
                     std::size_t k) {
    std::map<int, std::vector<std::pair<std::string, double>>> by_year;
    for (const auto& [region, years] : scores_by_region) {
        for (const auto& [year, score] : years) {
            by_year[year].emplace_back(region, score);
        }
    }
    RankTable table;
    table.k = k;
    for (auto& [year, rows] : by_year) {
        std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
            return a.second != b.second ? a.second > b.second : a.first < b.first;
        });
        if (rows.size() > k) rows.resize(k);
        table.rows.emplace(year, std::move(rows));
    }
    return table;
}

LanguageTable language_table(const Corpus& corpus, const CollectionRegistry& registry,
                             std::string_view focal, const std::vector<std::string>& regions) {
    const Collection& collection = require_collection(registry, focal);
    if (collection.side != Side::Technology) {
        throw ConfigError("language table needs a technology collection");
    }

    std::map<std::string, std::map<std::string, std::uint64_t>> counts;
    std::map<std::string, double> patents_per_region;
    std::map<std::string, std::uint64_t> language_totals;
    for (const auto& rec : corpus.patents()) {
        if (registry.classify(rec.id) != collection.name) continue;
        counts[rec.region][rec.language] += 1;
        patents_per_region[rec.region] += 1.0;
        language_totals[rec.language] += 1;
    }

    LanguageTable table;
    table.regions = regions.empty() ? top_regions(patents_per_region, patents_per_region.size())
                                    : regions;

    std::vector<std::pair<std::string, std::uint64_t>> langs(language_totals.begin(),
                                                             language_totals.end());
    std::sort(langs.begin(), langs.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    for (const auto& [lang, total] : langs) table.languages.push_back(lang);

    table.counts.assign(table.regions.size(),
                        std::vector<std::uint64_t>(table.languages.size(), 0));
    for (std::size_t i = 0; i < table.regions.size(); ++i) {
        auto it = counts.find(table.regions[i]);
        if (it == counts.end()) continue;
        for (std::size_t j = 0; j < table.languages.size(); ++j) {
            auto jt = it->second.find(table.languages[j]);
            if (jt != it->second.end()) table.counts[i][j] = jt->second;
        }
    }
    return table;
}

}  // namespace citegraph
