#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "citegraph/graph.hpp"

namespace citegraph {

struct LabelCount {
    std::string label;
    std::uint64_t count = 0;
    double percent = 0.0;
};

// Aggregate inflow-outflow view of one collection: outbound references
// and inbound citations of the same publication kind, broken down by
// the collection of the other endpoint.
struct BowtieReport {
    std::string focal;
    std::uint64_t n_pubs = 0;
    std::uint64_t refs_total = 0;
    std::uint64_t cites_total = 0;
    std::optional<double> avg_refs;
    std::optional<double> avg_cites;
    std::optional<double> value_added;  // avg_cites / avg_refs; null when undefined
    std::vector<LabelCount> refs_breakdown;
    std::vector<LabelCount> cites_breakdown;

    // The derived averages from raw totals; breakdowns left empty.
    static BowtieReport from_totals(std::string focal, std::uint64_t n_pubs,
                                    std::uint64_t refs_total, std::uint64_t cites_total);
};

BowtieReport bowtie(const CitationGraph& graph, const Corpus& corpus,
                    const CollectionRegistry& registry, std::string_view focal);

// Cross-kind citations out of one collection (papers cited by a patent
// collection, or patents cited by a paper collection), by endpoint label.
struct CrossDomainReport {
    std::string focal;
    std::uint64_t edges_total = 0;
    std::vector<LabelCount> cited_breakdown;     // deduplicated edges
    std::vector<LabelCount> distinct_endpoints;  // distinct cited publications
};

CrossDomainReport cross_domain(const CitationGraph& graph, const Corpus& corpus,
                               const CollectionRegistry& registry, std::string_view focal);

// num/den where num = citations of A received from B and den =
// references of A pointing into B. Null when den is zero.
std::optional<double> directional_ratio(const CitationGraph& graph, const Corpus& corpus,
                                        const CollectionRegistry& registry,
                                        std::string_view a, std::string_view b);

struct DirectionalCounts {
    std::uint64_t citations_from_b = 0;
    std::uint64_t references_into_b = 0;
};

DirectionalCounts directional_counts(const CitationGraph& graph, const Corpus& corpus,
                                     const CollectionRegistry& registry,
                                     std::string_view a, std::string_view b);

// Consolidating/disrupting audit over a random sample of the focal
// technology collection (default: the two highest-priority collections
// of each side supply the roles).
struct OverlapAuditReport {
    std::string focal;            // sampled collection, e.g. "G-T"
    std::string patent_other;     // e.g. "NT-T"
    std::string science_other;    // e.g. "NT-S"
    std::uint64_t seed = 0;
    std::size_t sample_size_requested = 0;
    std::size_t sample_size = 0;
    std::size_t n_citing_other_tech = 0;
    std::size_t n_with_journal_refs = 0;
    std::size_t n_with_science_refs = 0;
    std::size_t n_no_overlap = 0;    // disrupting
    std::size_t n_with_overlap = 0;  // consolidating
    std::optional<double> overlap_mean;
    std::optional<double> overlap_stddev;  // population, over the positive fractions
    std::vector<double> overlap_fractions;
};

OverlapAuditReport overlap_audit(const CitationGraph& graph, const Corpus& corpus,
                                 const CollectionRegistry& registry,
                                 std::size_t sample_size, std::uint64_t seed);

}  // namespace citegraph
