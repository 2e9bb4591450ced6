#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "citegraph/growth.hpp"
#include "citegraph/temporal.hpp"

namespace citegraph {

// Where a collection's references go: per citing collection C, the
// average references per publication r(C) and the proportion q(C -> X)
// of those references landing in each target label.
struct ReferenceMixRow {
    std::string citing;
    std::size_t publications = 0;
    double avg_refs = 0.0;
    std::map<std::string, double> proportions;   // target label -> q, sums to 1
    std::map<int, double> avg_refs_by_year;      // filled only in per-year mode

    double q(std::string_view target) const {
        auto it = proportions.find(std::string(target));
        return it == proportions.end() ? 0.0 : it->second;
    }
    double r(int year) const {
        auto it = avg_refs_by_year.find(year);
        return it == avg_refs_by_year.end() ? avg_refs : it->second;
    }
};

struct ReferenceMix {
    Side side{Side::Science};
    std::vector<ReferenceMixRow> rows;

    const ReferenceMixRow* row(std::string_view citing) const {
        for (const auto& r : rows) {
            if (r.citing == citing) return &r;
        }
        return nullptr;
    }
};

// Same-kind references of each collection on one side, optionally
// restricted to citing publications inside a year window. With
// per_year_refs the window-constant r(C) is supplemented by per-year
// averages.
ReferenceMix reference_mix(const CitationGraph& graph, const Corpus& corpus,
                           const CollectionRegistry& registry, Side side,
                           std::optional<YearWindow> window = std::nullopt,
                           bool per_year_refs = false);

// collection -> year -> publication count (doubles so that forecast
// counts slot in beside observed ones).
using CohortCounts = std::map<std::string, std::map<int, double>>;

CohortCounts collection_year_counts(const Corpus& corpus, const CollectionRegistry& registry,
                                    Side side, YearWindow window);

// Expected average citations received by the target cohort of year p:
//   sum over citing collections C and citing years y in the window of
//   N_C(y) * r(C) * q(C->target) * profile_C(y - p), divided by N_target(p).
// Median profiles supply the point estimate. Throws when a collection
// with q > 0 has no profile.
YearlySeries expected_citations(const CohortCounts& counts, const ReferenceMix& mix,
                                const std::map<std::string, CitationProfile>& profiles,
                                std::string_view target, YearWindow window, int max_lag = 25);

struct InterestPoint {
    int year = 0;
    std::optional<double> actual;
    std::optional<double> expected;
    std::optional<double> ratio;  // actual / expected; null when expected is 0 or null
};

// Actual over expected average citations; the interest level per cohort
// year. Windows must match.
struct InterestSeries {
    std::string collection;
    YearWindow window;
    std::vector<InterestPoint> points;
};

InterestSeries interest_ratio(const YearlySeries& actual, const YearlySeries& expected);

// Envelope of possible average citations once simulated future
// references (forecast counts x profile bands) are added to the
// observed citations of each cohort.
struct FutureBandsInput {
    CohortCounts observed_counts;                     // window years
    std::map<std::string, ForecastSeries> forecasts;  // horizon years per collection
    std::map<std::string, CitationProfile> profiles;
    ReferenceMix mix;
    YearlySeries actual;  // observed in-collection avg citations per cohort
    std::string target;
    YearWindow window;
    int horizon = 4;
    int max_lag = 25;
};

// Point uses the forecast point counts with median profiles; the band
// is the pointwise min/max over {low, point, high} counts x
// {p25, p50, p75} profiles.
BandedYearlySeries future_citation_bands(const FutureBandsInput& input);

}  // namespace citegraph
