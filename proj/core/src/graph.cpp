#include "citegraph/graph.hpp"

#include <algorithm>

#include "citegraph/patent_match.hpp"

namespace citegraph {

std::optional<CitationGraph::Node> CitationGraph::node_of(const PublicationId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::span<const CitationGraph::HalfEdge> CitationGraph::out(Node n) const {
    return {out_edges_.data() + out_offsets_[n],
            out_edges_.data() + out_offsets_[n + 1]};
}

std::span<const CitationGraph::HalfEdge> CitationGraph::in(Node n) const {
    return {in_edges_.data() + in_offsets_[n], in_edges_.data() + in_offsets_[n + 1]};
}

std::uint32_t CitationGraph::unresolved_of(Node n) const {
    auto it = unresolved_.find(n);
    return it == unresolved_.end() ? 0 : it->second;
}

CitationGraph::Node CitationGraph::Builder::intern(const PublicationId& id) {
    auto it = index_.find(id);
    if (it != index_.end()) return it->second;
    const Node n = static_cast<Node>(ids_.size());
    ids_.push_back(id);
    index_.emplace(id, n);
    return n;
}

void CitationGraph::Builder::add_edge(const PublicationId& src, const PublicationId& dst,
                                      EdgeKind kind) {
    if (src == dst) {
        ++self_loops_;
        return;
    }
    edges_.emplace_back(intern(src), intern(dst), kind);
}

void CitationGraph::Builder::add_unresolved(const PublicationId& src, std::uint32_t n) {
    unresolved_[intern(src)] += n;
}

CitationGraph CitationGraph::Builder::build() && {
    std::sort(edges_.begin(), edges_.end());
    const auto last = std::unique(edges_.begin(), edges_.end());
    duplicates_ += static_cast<std::uint64_t>(std::distance(last, edges_.end()));
    edges_.erase(last, edges_.end());

    CitationGraph g;
    g.ids_ = std::move(ids_);
    g.index_ = std::move(index_);
    g.unresolved_ = std::move(unresolved_);
    for (const auto& [node, count] : g.unresolved_) g.unresolved_total_ += count;
    g.edge_count_ = edges_.size();

    const std::size_t n = g.ids_.size();
    g.out_offsets_.assign(n + 1, 0);
    g.in_offsets_.assign(n + 1, 0);
    for (const auto& [src, dst, kind] : edges_) {
        ++g.out_offsets_[src + 1];
        ++g.in_offsets_[dst + 1];
    }
    for (std::size_t i = 0; i < n; ++i) {
        g.out_offsets_[i + 1] += g.out_offsets_[i];
        g.in_offsets_[i + 1] += g.in_offsets_[i];
    }
    g.out_edges_.resize(edges_.size());
    g.in_edges_.resize(edges_.size());
    std::vector<std::uint64_t> out_pos(g.out_offsets_.begin(), g.out_offsets_.end() - 1);
    std::vector<std::uint64_t> in_pos(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
    for (const auto& [src, dst, kind] : edges_) {
        g.out_edges_[out_pos[src]++] = {dst, kind};
        g.in_edges_[in_pos[dst]++] = {src, kind};
    }
    return g;
}

GraphBuildResult build_graph(const Corpus& corpus, const CollectionRegistry& registry,
                             const std::vector<Resolution>& resolutions) {
    CitationGraph::Builder builder;
    GraphBuildStats stats;

    // Accepted resolver output keyed by (citing id value, reference text).
    std::unordered_map<std::string, const Resolution*> accepted;
    for (const auto& res : resolutions) {
        const PublicationId journal_key{PubKind::Journal, res.citing};
        const PublicationId patent_key{PubKind::Patent, res.citing};
        if (!corpus.contains(journal_key) && !corpus.contains(patent_key)) {
            ++stats.unknown_citing;
            if (stats.warnings.size() < 10) {
                stats.warnings.push_back("resolution for unknown citing id: " + res.citing);
            }
            continue;
        }
        if (res.status == ResolutionStatus::Accepted && res.doi) {
            accepted.emplace(res.citing + '\x1f' + res.ref_text, &res);
        }
    }

    const PatentRefMatcher matcher(registry);

    auto resolved_doi = [&](const std::string& citing,
                            const std::string& text) -> const Resolution* {
        auto it = accepted.find(citing + '\x1f' + text);
        return it == accepted.end() ? nullptr : it->second;
    };

    for (const auto& rec : corpus.journals()) {
        for (const auto& ref : rec.raw_refs) {
            if (ref.embedded_doi) {
                builder.add_edge(rec.id, PublicationId{PubKind::Journal, *ref.embedded_doi},
                                 EdgeKind::PaperCitesPaper);
                continue;
            }
            if (ref.embedded_patent) {
                const auto match = matcher.match(*ref.embedded_patent);
                if (match.id) {
                    builder.add_edge(rec.id, *match.id, EdgeKind::PaperCitesPatent);
                } else {
                    builder.add_unresolved(rec.id);
                }
                continue;
            }
            if (const auto* res = resolved_doi(rec.id.value, ref.text)) {
                builder.add_edge(rec.id, PublicationId{PubKind::Journal, *res->doi},
                                 EdgeKind::PaperCitesPaper);
            } else {
                builder.add_unresolved(rec.id);
            }
        }
    }

    for (const auto& rec : corpus.patents()) {
        for (const auto& ref : rec.patent_refs) {
            builder.add_edge(rec.id, ref, EdgeKind::PatentCitesPatent);
        }
        for (const auto& doi : rec.resolved_npl) {
            builder.add_edge(rec.id, PublicationId{PubKind::Journal, doi},
                             EdgeKind::PatentCitesPaper);
        }
        for (const auto& ref : rec.npl_refs) {
            if (ref.embedded_doi) {
                builder.add_edge(rec.id, PublicationId{PubKind::Journal, *ref.embedded_doi},
                                 EdgeKind::PatentCitesPaper);
                continue;
            }
            if (const auto* res = resolved_doi(rec.id.value, ref.text)) {
                builder.add_edge(rec.id, PublicationId{PubKind::Journal, *res->doi},
                                 EdgeKind::PatentCitesPaper);
            } else {
                builder.add_unresolved(rec.id);
            }
        }
    }

    CitationGraph graph = std::move(builder).build();
    stats.edges = graph.edge_count();
    stats.unresolved_refs = graph.unresolved_total();
    stats.duplicates_collapsed = builder.duplicates_collapsed();
    stats.self_loops_dropped = builder.self_loops_dropped();
    return {std::move(graph), std::move(stats)};
}

}  // namespace citegraph
