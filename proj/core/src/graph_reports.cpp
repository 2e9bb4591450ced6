#include "citegraph/graph_reports.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "citegraph/errors.hpp"
#include "citegraph/rng.hpp"
#include "citegraph/stats.hpp"

namespace citegraph {

namespace {

// Labels in registry priority order, then "Others".
std::vector<std::string> labels_for(const CollectionRegistry& registry, Side side) {
    auto labels = registry.labels(side);
    labels.emplace_back(kOthersLabel);
    return labels;
}

std::vector<LabelCount> breakdown_from(const std::vector<std::string>& order,
                                       const std::map<std::string, std::uint64_t>& counts,
                                       std::uint64_t total) {
    std::vector<LabelCount> out;
    for (const auto& label : order) {
        auto it = counts.find(label);
        const std::uint64_t c = it == counts.end() ? 0 : it->second;
        LabelCount lc;
        lc.label = label;
        lc.count = c;
        lc.percent = total == 0 ? 0.0
                                : 100.0 * static_cast<double>(c) / static_cast<double>(total);
        out.push_back(std::move(lc));
    }
    return out;
}

const Collection& require_collection(const CollectionRegistry& registry,
                                     std::string_view name) {
    const Collection* c = registry.find(name);
    if (!c) throw ConfigError("unknown collection: " + std::string(name));
    return *c;
}

// Corpus records classified into the focal collection.
std::vector<const PublicationId*> focal_members(const Corpus& corpus,
                                                const CollectionRegistry& registry,
                                                const Collection& focal) {
    std::vector<const PublicationId*> out;
    if (focal.side == Side::Science) {
        for (const auto& rec : corpus.journals()) {
            if (registry.classify(rec.id) == focal.name) out.push_back(&rec.id);
        }
    } else {
        for (const auto& rec : corpus.patents()) {
            if (registry.classify(rec.id) == focal.name) out.push_back(&rec.id);
        }
    }
    return out;
}

}  // namespace

BowtieReport BowtieReport::from_totals(std::string focal, std::uint64_t n_pubs,
                                       std::uint64_t refs_total, std::uint64_t cites_total) {
    BowtieReport r;
    r.focal = std::move(focal);
    r.n_pubs = n_pubs;
    r.refs_total = refs_total;
    r.cites_total = cites_total;
    if (n_pubs > 0) {
        r.avg_refs = static_cast<double>(refs_total) / static_cast<double>(n_pubs);
        r.avg_cites = static_cast<double>(cites_total) / static_cast<double>(n_pubs);
        if (*r.avg_refs > 0.0) r.value_added = *r.avg_cites / *r.avg_refs;
    }
    return r;
}

BowtieReport bowtie(const CitationGraph& graph, const Corpus& corpus,
                    const CollectionRegistry& registry, std::string_view focal) {
    const Collection& collection = require_collection(registry, focal);
    const auto members = focal_members(corpus, registry, collection);
    const EdgeKind kind = collection.side == Side::Science ? EdgeKind::PaperCitesPaper
                                                           : EdgeKind::PatentCitesPatent;

    std::map<std::string, std::uint64_t> refs, cites;
    std::uint64_t refs_total = 0, cites_total = 0;
    for (const auto* id : members) {
        const auto node = graph.node_of(*id);
        if (!node) continue;
        for (const auto& e : graph.out(*node)) {
            if (e.kind != kind) continue;
            ++refs[std::string(registry.classify(graph.id_of(e.other)))];
            ++refs_total;
        }
        for (const auto& e : graph.in(*node)) {
            if (e.kind != kind) continue;
            ++cites[std::string(registry.classify(graph.id_of(e.other)))];
            ++cites_total;
        }
    }

    BowtieReport r = BowtieReport::from_totals(collection.name, members.size(), refs_total,
                                               cites_total);
    const auto order = labels_for(registry, collection.side);
    r.refs_breakdown = breakdown_from(order, refs, refs_total);
    r.cites_breakdown = breakdown_from(order, cites, cites_total);
    return r;
}

CrossDomainReport cross_domain(const CitationGraph& graph, const Corpus& corpus,
                               const CollectionRegistry& registry, std::string_view focal) {
    const Collection& collection = require_collection(registry, focal);
    const auto members = focal_members(corpus, registry, collection);
    const EdgeKind kind = collection.side == Side::Technology ? EdgeKind::PatentCitesPaper
                                                              : EdgeKind::PaperCitesPatent;
    const Side other_side =
        collection.side == Side::Technology ? Side::Science : Side::Technology;

    std::map<std::string, std::uint64_t> edges;
    std::map<std::string, std::unordered_set<PublicationId>> distinct;
    std::uint64_t total = 0;
    for (const auto* id : members) {
        const auto node = graph.node_of(*id);
        if (!node) continue;
        for (const auto& e : graph.out(*node)) {
            if (e.kind != kind) continue;
            const auto& other = graph.id_of(e.other);
            const std::string label(registry.classify(other));
            ++edges[label];
            distinct[label].insert(other);
            ++total;
        }
    }

    CrossDomainReport r;
    r.focal = collection.name;
    r.edges_total = total;
    const auto order = labels_for(registry, other_side);
    r.cited_breakdown = breakdown_from(order, edges, total);
    std::map<std::string, std::uint64_t> distinct_counts;
    std::uint64_t distinct_total = 0;
    for (const auto& [label, set] : distinct) {
        distinct_counts[label] = set.size();
        distinct_total += set.size();
    }
    r.distinct_endpoints = breakdown_from(order, distinct_counts, distinct_total);
    return r;
}

DirectionalCounts directional_counts(const CitationGraph& graph, const Corpus& corpus,
                                     const CollectionRegistry& registry,
                                     std::string_view a, std::string_view b) {
    const Collection& ca = require_collection(registry, a);
    const Collection& cb = require_collection(registry, b);
    if (ca.side != cb.side) throw ConfigError("directional ratio requires same-side collections");
    const EdgeKind kind = ca.side == Side::Science ? EdgeKind::PaperCitesPaper
                                                   : EdgeKind::PatentCitesPatent;

    DirectionalCounts counts;
    for (const auto* id : focal_members(corpus, registry, ca)) {
        const auto node = graph.node_of(*id);
        if (!node) continue;
        for (const auto& e : graph.in(*node)) {
            if (e.kind == kind && registry.classify(graph.id_of(e.other)) == cb.name) {
                ++counts.citations_from_b;
            }
        }
        for (const auto& e : graph.out(*node)) {
            if (e.kind == kind && registry.classify(graph.id_of(e.other)) == cb.name) {
                ++counts.references_into_b;
            }
        }
    }
    return counts;
}

std::optional<double> directional_ratio(const CitationGraph& graph, const Corpus& corpus,
                                        const CollectionRegistry& registry,
                                        std::string_view a, std::string_view b) {
    const auto counts = directional_counts(graph, corpus, registry, a, b);
    if (counts.references_into_b == 0) return std::nullopt;
    return static_cast<double>(counts.citations_from_b) /
           static_cast<double>(counts.references_into_b);
}

OverlapAuditReport overlap_audit(const CitationGraph& graph, const Corpus& corpus,
                                 const CollectionRegistry& registry,
                                 std::size_t sample_size, std::uint64_t seed) {
    const auto& tech = registry.side(Side::Technology);
    const auto& sci = registry.side(Side::Science);
    if (tech.size() < 2 || sci.size() < 2) {
        throw ConfigError("overlap audit needs two technology and two science collections");
    }
    const std::string focal = tech[0].name;
    const std::string patent_other = tech[1].name;
    const std::string science_other = sci[1].name;

    // Deterministic population order, then a seeded draw.
    std::vector<const PublicationId*> population =
        focal_members(corpus, registry, tech[0]);
    std::sort(population.begin(), population.end(),
              [](const PublicationId* x, const PublicationId* y) { return *x < *y; });

    OverlapAuditReport r;
    r.focal = focal;
    r.patent_other = patent_other;
    r.science_other = science_other;
    r.seed = seed;
    r.sample_size_requested = sample_size;

    const auto picks =
        sample_without_replacement(population.size(), sample_size, seed);
    r.sample_size = picks.size();

    auto science_refs_of = [&](CitationGraph::Node node) {
        std::unordered_set<PublicationId> out;
        for (const auto& e : graph.out(node)) {
            if (e.kind != EdgeKind::PatentCitesPaper) continue;
            const auto& other = graph.id_of(e.other);
            if (registry.classify(other) == science_other) out.insert(other);
        }
        return out;
    };

    for (const auto pick : picks) {
        const auto node = graph.node_of(*population[pick]);
        if (!node) continue;

        std::vector<CitationGraph::Node> other_tech_refs;
        for (const auto& e : graph.out(*node)) {
            if (e.kind == EdgeKind::PatentCitesPatent &&
                registry.classify(graph.id_of(e.other)) == patent_other) {
                other_tech_refs.push_back(e.other);
            }
        }
        if (other_tech_refs.empty()) continue;
        ++r.n_citing_other_tech;

        bool has_journal_refs = false;
        for (const auto& e : graph.out(*node)) {
            if (e.kind == EdgeKind::PatentCitesPaper) {
                has_journal_refs = true;
                break;
            }
        }
        if (!has_journal_refs) continue;
        ++r.n_with_journal_refs;

        const auto own_science_refs = science_refs_of(*node);
        if (own_science_refs.empty()) continue;
        ++r.n_with_science_refs;

        std::unordered_set<PublicationId> cited_by_patent_refs;
        for (const auto q : other_tech_refs) {
            for (const auto& id : science_refs_of(q)) cited_by_patent_refs.insert(id);
        }
        std::size_t shared = 0;
        for (const auto& id : own_science_refs) {
            if (cited_by_patent_refs.contains(id)) ++shared;
        }
        const double fraction =
            static_cast<double>(shared) / static_cast<double>(own_science_refs.size());
        if (fraction == 0.0) {
            ++r.n_no_overlap;
        } else {
            ++r.n_with_overlap;
            r.overlap_fractions.push_back(fraction);
        }
    }

    if (!r.overlap_fractions.empty()) {
        r.overlap_mean = mean(r.overlap_fractions);
        r.overlap_stddev = stddev_population(r.overlap_fractions);
    }
    return r;
}

}  // namespace citegraph
