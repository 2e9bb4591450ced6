#include "citegraph/temporal.hpp"

#include <map>

#include "citegraph/errors.hpp"
#include "citegraph/stats.hpp"

namespace citegraph {

namespace {

struct FocalRecords {
    const Collection* collection = nullptr;
    // (id, year) of corpus records classified into the collection.
    std::vector<std::pair<const PublicationId*, int>> records;
    std::vector<std::uint64_t> pubs_per_year;  // indexed by year - window.start
};

FocalRecords collect_focal(const Corpus& corpus, const CollectionRegistry& registry,
                           std::string_view focal, YearWindow window) {
    if (window.end < window.start) throw ConfigError("empty analysis window");
    FocalRecords out;
    out.collection = registry.find(focal);
    if (!out.collection) throw ConfigError("unknown collection: " + std::string(focal));
    out.pubs_per_year.assign(static_cast<std::size_t>(window.span()), 0);

    auto consider = [&](const PublicationId& id, int year) {
        if (!window.contains(year)) return;
        if (registry.classify(id) != out.collection->name) return;
        out.records.emplace_back(&id, year);
        ++out.pubs_per_year[static_cast<std::size_t>(year - window.start)];
    };
    if (out.collection->side == Side::Science) {
        for (const auto& rec : corpus.journals()) consider(rec.id, rec.year);
    } else {
        for (const auto& rec : corpus.patents()) consider(rec.id, rec.year);
    }
    return out;
}

EdgeKind own_kind(const Collection& c) {
    return c.side == Side::Science ? EdgeKind::PaperCitesPaper : EdgeKind::PatentCitesPatent;
}

EdgeKind cross_kind(const Collection& c) {
    return c.side == Side::Science ? EdgeKind::PaperCitesPatent : EdgeKind::PatentCitesPaper;
}

}  // namespace

std::string_view to_string(YearlyMetric metric) {
    switch (metric) {
        case YearlyMetric::Pubs: return "pubs";
        case YearlyMetric::AvgRefs: return "avg_refs";
        case YearlyMetric::AvgCites: return "avg_cites";
        case YearlyMetric::AvgCrossRefs: return "avg_cross_refs";
    }
    return "pubs";
}

YearlySeries yearly_series(const CitationGraph& graph, const Corpus& corpus,
                           const CollectionRegistry& registry, YearlyMetric metric,
                           std::string_view collection, YearWindow window) {
    const auto focal = collect_focal(corpus, registry, collection, window);
    YearlySeries series(std::string(collection), std::string(to_string(metric)), window);

    if (metric == YearlyMetric::Pubs) {
        for (int year = window.start; year <= window.end; ++year) {
            series.set(year, static_cast<double>(
                                 focal.pubs_per_year[static_cast<std::size_t>(year - window.start)]));
        }
        return series;
    }

    std::vector<std::uint64_t> totals(static_cast<std::size_t>(window.span()), 0);
    for (const auto& [id, year] : focal.records) {
        const auto node = graph.node_of(*id);
        if (!node) continue;
        std::uint64_t n = 0;
        switch (metric) {
            case YearlyMetric::AvgRefs:
                for (const auto& e : graph.out(*node)) {
                    if (e.kind == own_kind(*focal.collection)) ++n;
                }
                break;
            case YearlyMetric::AvgCites:
                for (const auto& e : graph.in(*node)) {
                    if (e.kind == own_kind(*focal.collection)) ++n;
                }
                break;
            case YearlyMetric::AvgCrossRefs:
                for (const auto& e : graph.out(*node)) {
                    if (e.kind == cross_kind(*focal.collection)) ++n;
                }
                break;
            case YearlyMetric::Pubs: break;
        }
        totals[static_cast<std::size_t>(year - window.start)] += n;
    }

    for (int year = window.start; year <= window.end; ++year) {
        const auto i = static_cast<std::size_t>(year - window.start);
        if (focal.pubs_per_year[i] == 0) {
            series.set(year, std::nullopt);
        } else {
            series.set(year, static_cast<double>(totals[i]) /
                                 static_cast<double>(focal.pubs_per_year[i]));
        }
    }
    return series;
}

std::vector<YearlySeries> component_series(const CitationGraph& graph, const Corpus& corpus,
                                           const CollectionRegistry& registry,
                                           std::string_view focal, ComponentSide side,
                                           YearWindow window) {
    const auto records = collect_focal(corpus, registry, focal, window);
    const Collection& c = *records.collection;
    const bool outgoing = side == ComponentSide::Refs || side == ComponentSide::CrossRefs;
    const bool cross = side == ComponentSide::CrossRefs || side == ComponentSide::CrossCitations;
    // Incoming cross edges carry the opposite cross kind: patents citing
    // a paper collection arrive as PatentCitesPaper.
    const EdgeKind kind = !cross ? own_kind(c)
                          : outgoing
                              ? cross_kind(c)
                              : (c.side == Side::Science ? EdgeKind::PatentCitesPaper
                                                         : EdgeKind::PaperCitesPatent);
    const Side label_side =
        !cross ? c.side : (c.side == Side::Science ? Side::Technology : Side::Science);

    auto labels = registry.labels(label_side);
    labels.emplace_back(kOthersLabel);

    std::map<std::string, std::vector<std::uint64_t>> totals;
    for (const auto& label : labels) {
        totals[label].assign(static_cast<std::size_t>(window.span()), 0);
    }

    for (const auto& [id, year] : records.records) {
        const auto node = graph.node_of(*id);
        if (!node) continue;
        const auto edges = outgoing ? graph.out(*node) : graph.in(*node);
        for (const auto& e : edges) {
            if (e.kind != kind) continue;
            const std::string label(registry.classify(graph.id_of(e.other)));
            ++totals[label][static_cast<std::size_t>(year - window.start)];
        }
    }

    const char* metric = nullptr;
    switch (side) {
        case ComponentSide::Refs: metric = "component_refs"; break;
        case ComponentSide::Citations: metric = "component_cites"; break;
        case ComponentSide::CrossRefs: metric = "component_cross_refs"; break;
        case ComponentSide::CrossCitations: metric = "component_cross_cites"; break;
    }

    std::vector<YearlySeries> out;
    for (const auto& label : labels) {
        YearlySeries series(std::string(focal), metric, window);
        series.label = label;
        for (int year = window.start; year <= window.end; ++year) {
            const auto i = static_cast<std::size_t>(year - window.start);
            if (records.pubs_per_year[i] == 0) {
                series.set(year, std::nullopt);
            } else {
                series.set(year, static_cast<double>(totals[label][i]) /
                                     static_cast<double>(records.pubs_per_year[i]));
            }
        }
        out.push_back(std::move(series));
    }
    return out;
}

CitationProfile citation_profile(const CitationGraph& graph, const Corpus& corpus,
                                 const CollectionRegistry& registry,
                                 std::string_view collection, int max_lag) {
    const Collection* c = registry.find(collection);
    if (!c) throw ConfigError("unknown collection: " + std::string(collection));
    if (max_lag < 0) throw ConfigError("max_lag must be non-negative");
    const EdgeKind kind = own_kind(*c);

    CitationProfile profile;
    profile.collection = c->name;
    profile.max_lag = max_lag;

    // Per-lag proportions across publications.
    std::vector<std::vector<double>> per_lag(static_cast<std::size_t>(max_lag) + 1);

    auto consider = [&](const PublicationId& id, int year) {
        if (registry.classify(id) != c->name) return;
        const auto node = graph.node_of(id);
        if (!node) return;
        std::map<int, std::uint64_t> lag_counts;
        std::uint64_t dated = 0;
        for (const auto& e : graph.out(*node)) {
            if (e.kind != kind) continue;
            const auto other_year = corpus.year_of(graph.id_of(e.other));
            if (!other_year) {
                ++profile.undated_refs;
                continue;
            }
            const int lag = year - *other_year;
            if (lag < 0) {
                ++profile.negative_lag_refs;
                continue;
            }
            ++lag_counts[lag];
            ++dated;
        }
        if (dated == 0) return;
        ++profile.publications;
        // Proportions over all non-negative lags sum to 1; only lags up
        // to max_lag enter the percentile curves.
        for (int lag = 0; lag <= max_lag; ++lag) {
            auto it = lag_counts.find(lag);
            const double p = it == lag_counts.end()
                                 ? 0.0
                                 : static_cast<double>(it->second) / static_cast<double>(dated);
            per_lag[static_cast<std::size_t>(lag)].push_back(p);
        }
    };

    if (c->side == Side::Science) {
        for (const auto& rec : corpus.journals()) consider(rec.id, rec.year);
    } else {
        for (const auto& rec : corpus.patents()) consider(rec.id, rec.year);
    }

    profile.p25.assign(static_cast<std::size_t>(max_lag) + 1, 0.0);
    profile.p50.assign(static_cast<std::size_t>(max_lag) + 1, 0.0);
    profile.p75.assign(static_cast<std::size_t>(max_lag) + 1, 0.0);
    if (profile.publications == 0) return profile;
    for (int lag = 0; lag <= max_lag; ++lag) {
        const auto& samples = per_lag[static_cast<std::size_t>(lag)];
        profile.p25[static_cast<std::size_t>(lag)] = percentile(samples, 0.25);
        profile.p50[static_cast<std::size_t>(lag)] = percentile(samples, 0.50);
        profile.p75[static_cast<std::size_t>(lag)] = percentile(samples, 0.75);
    }
    return profile;
}

YearlySeries in_collection_citations(const CitationGraph& graph, const Corpus& corpus,
                                     const CollectionRegistry& registry,
                                     std::string_view collection, YearWindow window) {
    const auto focal = collect_focal(corpus, registry, collection, window);
    const EdgeKind kind = own_kind(*focal.collection);

    std::vector<std::uint64_t> totals(static_cast<std::size_t>(window.span()), 0);
    for (const auto& [id, year] : focal.records) {
        const auto node = graph.node_of(*id);
        if (!node) continue;
        for (const auto& e : graph.in(*node)) {
            if (e.kind != kind) continue;
            if (registry.classify(graph.id_of(e.other)) == kOthersLabel) continue;
            ++totals[static_cast<std::size_t>(year - window.start)];
        }
    }

    YearlySeries series(std::string(collection), "actual_avg_cites", window);
    for (int year = window.start; year <= window.end; ++year) {
        const auto i = static_cast<std::size_t>(year - window.start);
        if (focal.pubs_per_year[i] == 0) {
            series.set(year, std::nullopt);
        } else {
            series.set(year, static_cast<double>(totals[i]) /
                                 static_cast<double>(focal.pubs_per_year[i]));
        }
    }
    return series;
}

}  // namespace citegraph
