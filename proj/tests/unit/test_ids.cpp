#include <doctest.h>

#include "citegraph/ids.hpp"

using namespace citegraph;

TEST_CASE("doi normalization lower-cases and strips resolver prefixes") {
    CHECK(normalize_doi("10.1038/NMAT1849") == "10.1038/nmat1849");
    CHECK(normalize_doi("  https://doi.org/10.1038/nmat1849 ") == "10.1038/nmat1849");
    CHECK(normalize_doi("doi:10.1038/nmat1849") == "10.1038/nmat1849");
    CHECK(!normalize_doi("not-a-doi"));
    CHECK(!normalize_doi(""));
}

TEST_CASE("patent numbers split into region, serial, kind") {
    auto p = parse_patent_number("US7409759B2");
    REQUIRE(p);
    CHECK(p->region == "US");
    CHECK(p->serial == "7409759");
    CHECK(p->kind == "B2");

    p = parse_patent_number("2008-169255");
    REQUIRE(p);
    CHECK(p->region == "");
    CHECK(p->serial == "2008169255");
    CHECK(p->kind == "");

    p = parse_patent_number("cn104201119a");
    REQUIRE(p);
    CHECK(p->region == "CN");
    CHECK(p->serial == "104201119");
    CHECK(p->kind == "A");

    CHECK(!parse_patent_number(""));
    CHECK(!parse_patent_number("garbage text, not a number"));
}

TEST_CASE("patent ids need a region and four serial digits") {
    auto id = make_patent_id("US1234567");
    REQUIRE(id);
    CHECK(id->value == "US1234567");
    CHECK(patent_region(*id) == "US");
    CHECK(!make_patent_id("123456"));  // no region
    CHECK(!make_patent_id("US123"));   // too short
}
