#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "citegraph/collections.hpp"
#include "citegraph/corpus.hpp"
#include "citegraph/resolve.hpp"

namespace citegraph {

enum class EdgeKind : std::uint8_t {
    PaperCitesPaper,
    PatentCitesPatent,
    PatentCitesPaper,
    PaperCitesPatent,
};

inline bool same_kind_edge(EdgeKind k) {
    return k == EdgeKind::PaperCitesPaper || k == EdgeKind::PatentCitesPatent;
}

// Typed citation graph over interned publication ids. Endpoints need
// not be corpus records; anything with a resolvable id gets a node.
// Edge set is deduplicated, self-loops are dropped at construction.
class CitationGraph {
public:
    using Node = std::uint32_t;

    struct HalfEdge {
        Node other;
        EdgeKind kind;
    };

    std::optional<Node> node_of(const PublicationId& id) const;
    const PublicationId& id_of(Node n) const { return ids_[n]; }
    std::size_t node_count() const { return ids_.size(); }
    std::uint64_t edge_count() const { return edge_count_; }

    std::span<const HalfEdge> out(Node n) const;
    std::span<const HalfEdge> in(Node n) const;

    // References of a record that matched nothing; excluded from averages.
    std::uint32_t unresolved_of(Node n) const;
    std::uint64_t unresolved_total() const { return unresolved_total_; }

    class Builder {
    public:
        void add_edge(const PublicationId& src, const PublicationId& dst, EdgeKind kind);
        void add_unresolved(const PublicationId& src, std::uint32_t n = 1);
        CitationGraph build() &&;

        std::uint64_t self_loops_dropped() const { return self_loops_; }
        std::uint64_t duplicates_collapsed() const { return duplicates_; }

    private:
        Node intern(const PublicationId& id);
        std::vector<PublicationId> ids_;
        std::unordered_map<PublicationId, Node> index_;
        std::vector<std::tuple<Node, Node, EdgeKind>> edges_;
        std::unordered_map<Node, std::uint32_t> unresolved_;
        std::uint64_t self_loops_ = 0;
        std::uint64_t duplicates_ = 0;
    };

private:
    std::vector<PublicationId> ids_;
    std::unordered_map<PublicationId, Node> index_;
    std::vector<std::uint64_t> out_offsets_, in_offsets_;
    std::vector<HalfEdge> out_edges_, in_edges_;
    std::unordered_map<Node, std::uint32_t> unresolved_;
    std::uint64_t unresolved_total_ = 0;
    std::uint64_t edge_count_ = 0;
};

struct GraphBuildStats {
    std::uint64_t edges = 0;
    std::uint64_t duplicates_collapsed = 0;
    std::uint64_t self_loops_dropped = 0;
    std::uint64_t unresolved_refs = 0;
    std::uint64_t unknown_citing = 0;  // resolutions whose citing id is not in the corpus
    std::vector<std::string> warnings;
};

struct GraphBuildResult {
    CitationGraph graph;
    GraphBuildStats stats;
};

// Assembles all four edge kinds: journal references (explicit DOIs,
// embedded patent numbers, and resolver output), patent references, and
// patent NPL links. References that match nothing are tallied per
// citing record as unresolved.
GraphBuildResult build_graph(const Corpus& corpus, const CollectionRegistry& registry,
                             const std::vector<Resolution>& resolutions);

}  // namespace citegraph
