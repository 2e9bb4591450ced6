#include <doctest.h>

#include "citegraph/patent_match.hpp"
#include "support/builders.hpp"

using namespace citegraph;
using testing::jid;
using testing::pid;

namespace {

CollectionRegistry matcher_registry() {
    CollectionRegistry reg;
    reg.add(testing::collection("G-T", Side::Technology, 0,
                                {pid("US7409759"), pid("CN10420111")}));
    reg.add(testing::collection("NT-T", Side::Technology, 1,
                                {pid("US7409759"), pid("JP20081692")}));
    reg.add(testing::collection("G-S", Side::Science, 0, {jid("10.1/7409759")}));
    return reg;
}

}  // namespace

TEST_CASE("short identifying numbers are not patents") {
    const auto reg = matcher_registry();
    CHECK(parse_patent_reference("123", reg).kind == PatentRefKind::NotAPatent);
    CHECK(parse_patent_reference("US123", reg).kind == PatentRefKind::NotAPatent);
    CHECK(parse_patent_reference("", reg).kind == PatentRefKind::NotAPatent);
}

TEST_CASE("kind codes are ignored for membership matching") {
    const auto reg = matcher_registry();
    const auto m = parse_patent_reference("US7409759B2", reg);
    CHECK(m.kind == PatentRefKind::InCollection);
    REQUIRE(m.id);
    CHECK(m.id->value == "US7409759");
    CHECK(m.collection == "G-T");  // priority over NT-T
}

TEST_CASE("region-less references match members by serial digits") {
    const auto reg = matcher_registry();
    const auto m = parse_patent_reference("7409759", reg);
    CHECK(m.kind == PatentRefKind::InCollection);
    REQUIRE(m.id);
    CHECK(m.id->value == "US7409759");

    const auto jp = parse_patent_reference("2008-1692", reg);
    CHECK(jp.kind == PatentRefKind::InCollection);
    CHECK(jp.collection == "NT-T");
}

TEST_CASE("unmatched long numbers are Others patents") {
    const auto reg = matcher_registry();
    const auto m = parse_patent_reference("DE99999999", reg);
    CHECK(m.kind == PatentRefKind::OthersPatent);
    REQUIRE(m.id);
    CHECK(m.id->value == "DE99999999");

    // Without a region the reference cannot be keyed.
    const auto anon = parse_patent_reference("99999999", reg);
    CHECK(anon.kind == PatentRefKind::OthersPatent);
    CHECK(!anon.id);
}

TEST_CASE("science collections are never matched") {
    const auto reg = matcher_registry();
    // The G-S member shares the digits 7409759; a patent reference must
    // not reach it. The match goes to the technology side only.
    const auto m = parse_patent_reference("US7409759", reg);
    CHECK(m.kind == PatentRefKind::InCollection);
    CHECK(m.collection == "G-T");

    const auto other = parse_patent_reference("GB7409759", reg);
    CHECK(other.kind == PatentRefKind::OthersPatent);
}

TEST_CASE("region mismatch falls through to Others") {
    const auto reg = matcher_registry();
    const auto m = parse_patent_reference("KR10420111", reg);
    CHECK(m.kind == PatentRefKind::OthersPatent);
    REQUIRE(m.id);
    CHECK(m.id->value == "KR10420111");
}
