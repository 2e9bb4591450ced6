#include <doctest.h>

#include "citegraph/funding.hpp"
#include "support/builders.hpp"

using namespace citegraph;
using testing::author;
using testing::paper;

TEST_CASE("author funded by one paper stays funded everywhere") {
    // x appears on one funded and one unfunded paper; y and z never on a
    // funded one.
    std::vector<JournalRecord> records = {
        paper("10.1/f1", 2010, {}, {author("x, a"), author("y, b")}, true),
        paper("10.1/u1", 2011, {}, {author("x, a")}, false),
        paper("10.1/u2", 2012, {}, {author("y, b"), author("z, c")}, false),
        paper("10.1/u3", 2013, {}, {author("z, c")}, false),
    };
    const auto audit = funding_audit(records);
    CHECK(audit.papers_total == 4);
    CHECK(audit.papers_without_funding_info == 3);
    CHECK(audit.funded_authors == 2);   // x and y
    CHECK(audit.unfunded_authors == 1); // z
    // Only u3 has exclusively never-funded authors.
    CHECK(audit.papers_by_unfunded_authors == 1);
}

TEST_CASE("all-funded corpus has no unfunded authors") {
    std::vector<JournalRecord> records = {
        paper("10.1/a", 2010, {}, {author("p, q")}, true),
        paper("10.1/b", 2010, {}, {author("r, s")}, true),
    };
    const auto audit = funding_audit(records);
    CHECK(audit.unfunded_authors == 0);
    CHECK(audit.papers_by_unfunded_authors == 0);
    CHECK(audit.papers_without_funding_info == 0);
}

TEST_CASE("marking more papers funded never moves authors to unfunded") {
    std::vector<JournalRecord> records = {
        paper("10.1/a", 2010, {}, {author("m, a"), author("n, b")}, false),
        paper("10.1/b", 2011, {}, {author("n, b")}, false),
        paper("10.1/c", 2012, {}, {author("o, c")}, true),
    };
    const auto before = funding_audit(records);
    for (std::size_t flip = 0; flip < records.size(); ++flip) {
        auto copy = records;
        copy[flip].funding_acknowledged = true;
        const auto after = funding_audit(copy);
        CHECK(after.funded_authors >= before.funded_authors);
        CHECK(after.unfunded_authors <= before.unfunded_authors);
        CHECK(after.papers_by_unfunded_authors <= before.papers_by_unfunded_authors);
    }
}
