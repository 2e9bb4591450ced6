#include <doctest.h>

#include "citegraph/graph.hpp"
#include "support/builders.hpp"

using namespace citegraph;
using testing::jid;
using testing::paper;
using testing::patent;
using testing::pid;

TEST_CASE("empty corpus builds an empty graph") {
    Corpus corpus;
    CollectionRegistry reg;
    const auto result = build_graph(corpus, reg, {});
    CHECK(result.graph.node_count() == 0);
    CHECK(result.graph.edge_count() == 0);
}

TEST_CASE("duplicate references collapse to one edge") {
    Corpus corpus;
    // Three records, four embedded references, one of them repeated.
    auto a = paper("10.1/a", 2010, {"10.1/b", "10.1/c", "10.1/c"});
    auto b = paper("10.1/b", 2009, {"10.1/c"});
    auto c = paper("10.1/c", 2008);
    corpus.add_journals({a, b, c});
    CollectionRegistry reg;
    const auto result = build_graph(corpus, reg, {});
    CHECK(result.graph.edge_count() == 3);
    CHECK(result.stats.duplicates_collapsed == 1);
}

TEST_CASE("self-citations are dropped") {
    Corpus corpus;
    corpus.add_journals({paper("10.1/a", 2010, {"10.1/a", "10.1/b"})});
    CollectionRegistry reg;
    const auto result = build_graph(corpus, reg, {});
    CHECK(result.graph.edge_count() == 1);
    CHECK(result.stats.self_loops_dropped == 1);
}

TEST_CASE("unresolvable references are tallied per record") {
    Corpus corpus;
    JournalRecord rec = paper("10.1/a", 2010);
    RawReference raw;
    raw.text = "some unresolvable string";
    rec.raw_refs.push_back(raw);
    rec.raw_refs.push_back(raw);
    corpus.add_journals({rec});
    CollectionRegistry reg;
    const auto result = build_graph(corpus, reg, {});
    CHECK(result.graph.edge_count() == 0);
    const auto node = result.graph.node_of(jid("10.1/a"));
    REQUIRE(node);
    CHECK(result.graph.unresolved_of(*node) == 2);
    CHECK(result.stats.unresolved_refs == 2);
}

TEST_CASE("resolver output and embedded patent refs become typed edges") {
    Corpus corpus;
    JournalRecord rec = paper("10.1/a", 2010);
    RawReference resolved;
    resolved.text = "A. One \"Title one\" J 1 (2001)";
    rec.raw_refs.push_back(resolved);
    RawReference pat;
    pat.text = "US7409759B2";
    pat.embedded_patent = "US7409759B2";
    rec.raw_refs.push_back(pat);
    corpus.add_journals({rec});
    corpus.add_patents({patent("US7409759", 2008, {"US9999999"}, {"10.1/a"})});

    CollectionRegistry reg;
    reg.add(testing::collection("G-T", Side::Technology, 0, {pid("US7409759")}));
    reg.add(testing::collection("G-S", Side::Science, 0, {jid("10.1/a")}));

    std::vector<Resolution> resolutions(1);
    resolutions[0] = {"10.1/a", resolved.text, std::string("10.9/found"), 0.1,
                      ResolutionStatus::Accepted};

    const auto result = build_graph(corpus, reg, resolutions);
    // paper->paper (resolved), paper->patent (embedded), patent->patent,
    // patent->paper (resolved npl).
    CHECK(result.graph.edge_count() == 4);

    const auto a = result.graph.node_of(jid("10.1/a"));
    REQUIRE(a);
    int paper_refs = 0, patent_refs = 0, cites_from_patents = 0;
    for (const auto& e : result.graph.out(*a)) {
        if (e.kind == EdgeKind::PaperCitesPaper) ++paper_refs;
        if (e.kind == EdgeKind::PaperCitesPatent) ++patent_refs;
    }
    for (const auto& e : result.graph.in(*a)) {
        if (e.kind == EdgeKind::PatentCitesPaper) ++cites_from_patents;
    }
    CHECK(paper_refs == 1);
    CHECK(patent_refs == 1);
    CHECK(cites_from_patents == 1);
}

TEST_CASE("resolutions for unknown citing ids are skipped with a warning") {
    Corpus corpus;
    corpus.add_journals({paper("10.1/a", 2010)});
    CollectionRegistry reg;
    std::vector<Resolution> resolutions(1);
    resolutions[0] = {"10.1/ghost", "text", std::string("10.2/x"), 0.0,
                      ResolutionStatus::Accepted};
    const auto result = build_graph(corpus, reg, resolutions);
    CHECK(result.stats.unknown_citing == 1);
    CHECK(!result.stats.warnings.empty());
    CHECK(result.graph.edge_count() == 0);
}
