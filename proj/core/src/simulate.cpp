#include "citegraph/simulate.hpp"

#include "citegraph/errors.hpp"

namespace citegraph {

ReferenceMix reference_mix(const CitationGraph& graph, const Corpus& corpus,
                           const CollectionRegistry& registry, Side side,
                           std::optional<YearWindow> window, bool per_year_refs) {
    ReferenceMix mix;
    mix.side = side;
    const EdgeKind kind =
        side == Side::Science ? EdgeKind::PaperCitesPaper : EdgeKind::PatentCitesPatent;

    auto labels = registry.labels(side);
    labels.emplace_back(kOthersLabel);

    for (const auto& collection : registry.side(side)) {
        ReferenceMixRow row;
        row.citing = collection.name;
        std::map<std::string, std::uint64_t> counts;
        std::uint64_t total = 0;
        std::map<int, std::pair<std::uint64_t, std::uint64_t>> per_year;  // pubs, refs

        auto consider = [&](const PublicationId& id, int year) {
            if (window && !window->contains(year)) return;
            if (registry.classify(id) != collection.name) return;
            ++row.publications;
            if (per_year_refs) ++per_year[year].first;
            const auto node = graph.node_of(id);
            if (!node) return;
            for (const auto& e : graph.out(*node)) {
                if (e.kind != kind) continue;
                ++counts[std::string(registry.classify(graph.id_of(e.other)))];
                ++total;
                if (per_year_refs) ++per_year[year].second;
            }
        };
        if (side == Side::Science) {
            for (const auto& rec : corpus.journals()) consider(rec.id, rec.year);
        } else {
            for (const auto& rec : corpus.patents()) consider(rec.id, rec.year);
        }

        row.avg_refs = row.publications == 0
                           ? 0.0
                           : static_cast<double>(total) / static_cast<double>(row.publications);
        for (const auto& [year, pr] : per_year) {
            if (pr.first > 0) {
                row.avg_refs_by_year[year] =
                    static_cast<double>(pr.second) / static_cast<double>(pr.first);
            }
        }
        for (const auto& label : labels) {
            auto it = counts.find(label);
            const double c = it == counts.end() ? 0.0 : static_cast<double>(it->second);
            row.proportions[label] = total == 0 ? 0.0 : c / static_cast<double>(total);
        }
        mix.rows.push_back(std::move(row));
    }
    return mix;
}

CohortCounts collection_year_counts(const Corpus& corpus, const CollectionRegistry& registry,
                                    Side side, YearWindow window) {
    CohortCounts counts;
    for (const auto& collection : registry.side(side)) counts[collection.name] = {};
    auto consider = [&](const PublicationId& id, int year) {
        if (!window.contains(year)) return;
        const std::string label(registry.classify(id));
        if (label == kOthersLabel) return;
        counts[label][year] += 1.0;
    };
    if (side == Side::Science) {
        for (const auto& rec : corpus.journals()) consider(rec.id, rec.year);
    } else {
        for (const auto& rec : corpus.patents()) consider(rec.id, rec.year);
    }
    return counts;
}

namespace {

double count_at(const CohortCounts& counts, const std::string& collection, int year) {
    auto it = counts.find(collection);
    if (it == counts.end()) return 0.0;
    auto jt = it->second.find(year);
    return jt == it->second.end() ? 0.0 : jt->second;
}

// One cohort's simulated citations from citing years [from, to].
double simulated_contribution(const CohortCounts& counts, const ReferenceMix& mix,
                              const std::map<std::string, const std::vector<double>*>& bands,
                              const std::string& target, int cohort_year, int from, int to,
                              int max_lag) {
    double total = 0.0;
    for (const auto& row : mix.rows) {
        const double q = row.q(target);
        if (q == 0.0) continue;
        const auto band_it = bands.find(row.citing);
        if (band_it == bands.end()) {
            throw DataError("missing citation profile for collection " + row.citing);
        }
        const auto& profile = *band_it->second;
        for (int y = std::max(from, cohort_year); y <= to; ++y) {
            const int lag = y - cohort_year;
            if (lag > max_lag) break;
            const double n = count_at(counts, row.citing, y);
            if (n == 0.0) continue;
            total += n * row.r(y) * q * profile[static_cast<std::size_t>(lag)];
        }
    }
    return total;
}

}  // namespace

YearlySeries expected_citations(const CohortCounts& counts, const ReferenceMix& mix,
                                const std::map<std::string, CitationProfile>& profiles,
                                std::string_view target, YearWindow window, int max_lag) {
    std::map<std::string, const std::vector<double>*> medians;
    for (const auto& row : mix.rows) {
        if (row.q(target) == 0.0) continue;
        auto it = profiles.find(row.citing);
        if (it == profiles.end()) {
            throw DataError("missing citation profile for collection " + row.citing);
        }
        medians[row.citing] = &it->second.p50;
    }

    YearlySeries series(std::string(target), "expected_avg_cites", window);
    const std::string target_name(target);
    for (int p = window.start; p <= window.end; ++p) {
        const double n_target = count_at(counts, target_name, p);
        if (n_target == 0.0) {
            series.set(p, std::nullopt);
            continue;
        }
        const double total = simulated_contribution(counts, mix, medians, target_name, p,
                                                    window.start, window.end, max_lag);
        series.set(p, total / n_target);
    }
    return series;
}

InterestSeries interest_ratio(const YearlySeries& actual, const YearlySeries& expected) {
    if (actual.window.start != expected.window.start ||
        actual.window.end != expected.window.end) {
        throw DataError("actual and expected series cover different windows");
    }
    InterestSeries out;
    out.collection = actual.collection;
    out.window = actual.window;
    for (int year = actual.window.start; year <= actual.window.end; ++year) {
        InterestPoint p;
        p.year = year;
        p.actual = actual.at(year);
        p.expected = expected.at(year);
        if (p.actual && p.expected && *p.expected > 0.0) {
            p.ratio = *p.actual / *p.expected;
        }
        out.points.push_back(p);
    }
    return out;
}

BandedYearlySeries future_citation_bands(const FutureBandsInput& input) {
    // Forecast counts per collection for each band choice.
    enum CountBand { Low = 0, Point = 1, High = 2 };
    auto forecast_counts = [&](CountBand band) {
        CohortCounts counts;
        for (const auto& [collection, series] : input.forecasts) {
            for (const auto& p : series.points) {
                counts[collection][p.year] =
                    band == Low ? p.low : (band == High ? p.high : p.point);
            }
        }
        return counts;
    };
    const CohortCounts horizon_counts[3] = {forecast_counts(Low), forecast_counts(Point),
                                            forecast_counts(High)};

    auto bands_for = [&](int which) {
        std::map<std::string, const std::vector<double>*> out;
        for (const auto& [name, profile] : input.profiles) {
            out[name] = which == 0 ? &profile.p25 : (which == 1 ? &profile.p50 : &profile.p75);
        }
        return out;
    };

    const int horizon_start = input.window.end + 1;
    const int horizon_end = input.window.end + input.horizon;

    BandedYearlySeries out;
    out.point = YearlySeries(input.target, "future_avg_cites", input.window);
    out.low = YearlySeries(input.target, "future_avg_cites_low", input.window);
    out.high = YearlySeries(input.target, "future_avg_cites_high", input.window);

    for (int p = input.window.start; p <= input.window.end; ++p) {
        const auto base = input.actual.at(p);
        const double n_target = count_at(input.observed_counts, input.target, p);
        if (!base || n_target == 0.0) continue;

        std::optional<double> lo, hi;
        double point_extra = 0.0;
        for (int cb = 0; cb < 3; ++cb) {
            for (int pb = 0; pb < 3; ++pb) {
                const double extra =
                    simulated_contribution(horizon_counts[cb], input.mix, bands_for(pb),
                                           input.target, p, horizon_start, horizon_end,
                                           input.max_lag) /
                    n_target;
                if (cb == Point && pb == 1) point_extra = extra;
                if (!lo || extra < *lo) lo = extra;
                if (!hi || extra > *hi) hi = extra;
            }
        }
        out.point.set(p, *base + point_extra);
        out.low.set(p, *base + *lo);
        out.high.set(p, *base + *hi);
    }
    return out;
}

}  // namespace citegraph
