#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "citegraph/credit.hpp"
#include "citegraph/graph.hpp"

namespace citegraph {

// Region-to-region citation flows. Rows are the citing region, columns
// the cited region; row fractions answer "of region j's references,
// what share lands in region i". Node sizes are the cited-side totals.
struct FlowMatrix {
    std::vector<std::string> regions;
    std::vector<std::vector<double>> counts;     // [citing][cited]
    std::vector<std::vector<double>> fractions;  // row-normalized
    std::vector<double> node_sizes;              // references landing in each region
    double excluded_weight = 0.0;                // references without an attributable region

    std::optional<std::size_t> index_of(std::string_view region) const;
};

// Patent references of the focal collection's patents. Regions default
// to the top_k offices by focal patent count; cited regions come from
// the cited publication number, no collection membership required.
FlowMatrix patent_flow(const Corpus& corpus, const CollectionRegistry& registry,
                       std::string_view focal, std::size_t top_k,
                       const std::vector<std::string>& regions = {});

// Journal references of the focal collection's papers, restricted to
// cited papers inside the Science collections. Citing and cited regions
// come from first-author affiliations, split equally across a
// multi-affiliated first author's affiliations.
FlowMatrix journal_flow(const Corpus& corpus, const CitationGraph& graph,
                        const CollectionRegistry& registry, std::string_view focal,
                        std::size_t top_k, const std::vector<std::string>& regions = {});

// year -> descending (region, score), truncated to k; ties break
// lexicographically by region code.
struct RankTable {
    std::size_t k = 10;
    std::map<int, std::vector<std::pair<std::string, double>>> rows;
};

RankTable rank_table(const std::map<std::string, std::map<int, double>>& scores_by_region,
                     std::size_t k = 10);

// Patent office x language counts for the focal collection.
struct LanguageTable {
    std::vector<std::string> regions;    // office rows
    std::vector<std::string> languages;  // columns, by descending total
    std::vector<std::vector<std::uint64_t>> counts;
};

LanguageTable language_table(const Corpus& corpus, const CollectionRegistry& registry,
                             std::string_view focal,
                             const std::vector<std::string>& regions = {});

}  // namespace citegraph
