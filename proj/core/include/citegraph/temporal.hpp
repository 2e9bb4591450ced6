#pragma once

#include <string_view>
#include <vector>

#include "citegraph/graph.hpp"
#include "citegraph/series.hpp"

namespace citegraph {

enum class YearlyMetric { Pubs, AvgRefs, AvgCites, AvgCrossRefs };

std::string_view to_string(YearlyMetric metric);

// Publication counts or per-publication averages for one collection.
// Average metrics are null on years without publications; reference and
// citation counts use deduplicated edges of the collection's own kind
// (cross refs count the cross-kind out-edges).
YearlySeries yearly_series(const CitationGraph& graph, const Corpus& corpus,
                           const CollectionRegistry& registry, YearlyMetric metric,
                           std::string_view collection, YearWindow window);

enum class ComponentSide { Refs, Citations, CrossRefs, CrossCitations };

// One series per endpoint label (collections in priority order, then
// Others); values are average edges per focal publication of that year.
// Summing the component values of a year reproduces the matching
// yearly_series average.
std::vector<YearlySeries> component_series(const CitationGraph& graph, const Corpus& corpus,
                                           const CollectionRegistry& registry,
                                           std::string_view focal, ComponentSide side,
                                           YearWindow window);

// Distribution of reference ages for one collection: per publication,
// the proportion of its dated references at each lag (citing year minus
// cited year), then 25/50/75 percentiles across publications per lag.
struct CitationProfile {
    std::string collection;
    int max_lag = 25;
    std::vector<double> p25, p50, p75;  // size max_lag + 1
    std::size_t publications = 0;       // publications with >= 1 dated reference
    std::size_t negative_lag_refs = 0;  // cited year after citing year; excluded
    std::size_t undated_refs = 0;       // endpoint year unknown; excluded

    double median_at(int lag) const {
        return lag >= 0 && lag <= max_lag ? p50[static_cast<std::size_t>(lag)] : 0.0;
    }
};

CitationProfile citation_profile(const CitationGraph& graph, const Corpus& corpus,
                                 const CollectionRegistry& registry,
                                 std::string_view collection, int max_lag = 25);

// Per-cohort-year average citations received from inside the side's
// collections (excluding Others), the observed counterpart of the
// expected-citation model.
YearlySeries in_collection_citations(const CitationGraph& graph, const Corpus& corpus,
                                     const CollectionRegistry& registry,
                                     std::string_view collection, YearWindow window);

}  // namespace citegraph
