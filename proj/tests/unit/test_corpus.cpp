#include <doctest.h>

#include <fstream>

#include "citegraph/corpus.hpp"
#include "citegraph/io.hpp"
#include "support/builders.hpp"

using namespace citegraph;

namespace {

std::filesystem::path write_lines(const testing::TempDir& dir, const std::string& name,
                                  const std::vector<std::string>& lines) {
    auto path = dir.path() / name;
    std::string body;
    for (const auto& l : lines) {
        body += l;
        body += '\n';
    }
    atomic_write_file(path, body);
    return path;
}

std::string journal_line(const std::string& doi, const std::string& year) {
    return R"({"doi": ")" + doi + R"(", "year": )" + year +
           R"(, "title": "t", "authors": [], "refs": [], "funded": false})";
}

}  // namespace

TEST_CASE("journal loader rejects records missing year or doi, accepts the rest") {
    testing::TempDir dir;
    std::vector<std::string> lines;
    for (int i = 0; i < 8; ++i) {
        lines.push_back(journal_line("10.1/p" + std::to_string(i), "2010"));
    }
    lines.insert(lines.begin() + 3, R"({"doi": "10.1/noyear", "title": "x"})");
    lines.push_back(R"({"doi": "10.1/null-year", "year": null})");
    const auto path = write_lines(dir, "j.jsonl", lines);

    const auto result = load_journal_records(path);
    CHECK(result.records.size() == 8);
    CHECK(result.report.accepted == 8);
    REQUIRE(result.report.rejections.size() == 2);
    CHECK(result.report.rejections[0].reason == "missing year");
    CHECK(result.report.rejections[0].line == 4);
    CHECK(result.report.rejections[1].reason == "missing year");
}

TEST_CASE("empty file loads to empty corpus with empty report") {
    testing::TempDir dir;
    const auto path = write_lines(dir, "empty.jsonl", {});
    const auto result = load_journal_records(path);
    CHECK(result.records.empty());
    CHECK(result.report.rejections.empty());
}

TEST_CASE("unreadable file is fatal") {
    CHECK_THROWS_AS(load_journal_records("/nonexistent/nope.jsonl"), DataError);
    CHECK_THROWS_AS(load_patent_records("/nonexistent/nope.jsonl"), DataError);
}

TEST_CASE("patent loader rejects missing fields and collapses duplicates") {
    testing::TempDir dir;
    const auto path = write_lines(
        dir, "p.jsonl",
        {
            R"({"pub_number": "US1234567", "year": 2010, "language": "EN", "patent_refs": [], "npl_refs": []})",
            R"({"pub_number": "US1234567"})",
            R"({"pub_number": "US1234567A1", "year": 2011})",
            R"({"pub_number": "CN88881111", "year": 2012, "language": "ZH"})",
        });
    const auto result = load_patent_records(path);
    // Line 2 lacks a year; line 3 is the same publication modulo kind code.
    CHECK(result.records.size() == 2);
    CHECK(result.report.duplicates == 1);
    REQUIRE(result.report.rejections.size() == 2);
    CHECK(result.report.rejections[0].reason == "missing year");
    CHECK(result.report.rejections[1].reason == "duplicate publication number");
    CHECK(result.records[0].region == "US");
    CHECK(result.records[1].language == "ZH");
}

TEST_CASE("dois and regions are normalized at load") {
    testing::TempDir dir;
    const auto jpath = write_lines(
        dir, "j.jsonl",
        {R"({"doi": "https://doi.org/10.1038/NMAT1849", "year": 2007, "refs": [{"raw": "r", "doi": "DOI.ORG/10.1/X", "patent": null}]})"});
    const auto result = load_journal_records(jpath);
    REQUIRE(result.records.size() == 1);
    CHECK(result.records[0].id.value == "10.1038/nmat1849");
    REQUIRE(result.records[0].raw_refs.size() == 1);
    CHECK(result.records[0].raw_refs[0].embedded_doi == "10.1/x");
}

TEST_CASE("loading the same file twice is bit-identical") {
    testing::TempDir dir;
    std::vector<std::string> lines;
    for (int i = 0; i < 20; ++i) {
        lines.push_back(journal_line("10.9/r" + std::to_string(i), std::to_string(2000 + i % 5)));
    }
    const auto path = write_lines(dir, "j.jsonl", lines);

    Corpus a, b;
    a.add_journals(load_journal_records(path).records);
    b.add_journals(load_journal_records(path).records);
    CHECK(a.serialize() == b.serialize());
    CHECK(!a.serialize().empty());
}

TEST_CASE("corpus lookups by id") {
    Corpus corpus;
    corpus.add_journals({testing::paper("10.1/a", 2005)});
    corpus.add_patents({testing::patent("US1111111", 2008)});
    CHECK(corpus.journal(testing::jid("10.1/a")) != nullptr);
    CHECK(corpus.patent(testing::pid("US1111111")) != nullptr);
    CHECK(corpus.year_of(testing::jid("10.1/a")) == 2005);
    CHECK(corpus.year_of(testing::pid("US1111111")) == 2008);
    CHECK(!corpus.year_of(testing::jid("10.1/missing")));
    CHECK(corpus.size() == 2);
}
