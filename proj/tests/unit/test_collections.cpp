#include <doctest.h>

#include <fstream>

#include "citegraph/collections.hpp"
#include "citegraph/io.hpp"
#include "support/builders.hpp"

using namespace citegraph;
using testing::jid;
using testing::pid;

namespace {

CollectionRegistry two_sided_registry() {
    CollectionRegistry reg;
    reg.add(testing::collection("G-S", Side::Science, 0, {jid("10.1/a"), jid("10.1/b")}));
    reg.add(testing::collection("NT-S", Side::Science, 1, {jid("10.1/b"), jid("10.1/c")}));
    reg.add(testing::collection("G-T", Side::Technology, 0, {pid("US1000001")}));
    reg.add(testing::collection("NT-T", Side::Technology, 1,
                                {pid("US1000001"), pid("US1000002")}));
    reg.add(testing::collection("(2D+TMO+TMD)-T", Side::Technology, 2,
                                {pid("US1000002"), pid("US1000003")}));
    return reg;
}

}  // namespace

TEST_CASE("classification follows priority order") {
    const auto reg = two_sided_registry();
    CHECK(reg.classify(jid("10.1/b")) == "G-S");       // in both G-S and NT-S
    CHECK(reg.classify(jid("10.1/c")) == "NT-S");
    CHECK(reg.classify(jid("10.1/zzz")) == "Others");
    CHECK(reg.classify(pid("US1000002")) == "NT-T");   // NT-T beats the 2D group
    CHECK(reg.classify(pid("US1000003")) == "(2D+TMO+TMD)-T");
}

TEST_CASE("journal ids never match technology collections") {
    const auto reg = two_sided_registry();
    // Same digits as a G-T member, but a journal id.
    CHECK(reg.classify(PublicationId{PubKind::Journal, "us1000001"}) == "Others");
}

TEST_CASE("adding to a lower-priority collection never changes a higher-priority label") {
    CollectionRegistry reg;
    reg.add(testing::collection("G-S", Side::Science, 0, {jid("10.1/a")}));
    reg.add(testing::collection("NT-S", Side::Science, 1, {}));
    CHECK(reg.classify(jid("10.1/a")) == "G-S");

    CollectionRegistry reg2;
    reg2.add(testing::collection("G-S", Side::Science, 0, {jid("10.1/a")}));
    reg2.add(testing::collection("NT-S", Side::Science, 1, {jid("10.1/a")}));
    CHECK(reg2.classify(jid("10.1/a")) == "G-S");
}

TEST_CASE("duplicate priorities and names are rejected") {
    CollectionRegistry reg;
    reg.add(testing::collection("G-S", Side::Science, 0, {}));
    CHECK_THROWS_AS(reg.add(testing::collection("X-S", Side::Science, 0, {})), ConfigError);
    CHECK_THROWS_AS(reg.add(testing::collection("G-S", Side::Science, 1, {})), ConfigError);
}

TEST_CASE("overlap matrix counts planted intersections symmetrically") {
    CollectionRegistry reg;
    reg.add(testing::collection("A-S", Side::Science, 0,
                                {jid("10.1/1"), jid("10.1/2"), jid("10.1/3")}));
    reg.add(testing::collection("B-S", Side::Science, 1,
                                {jid("10.1/2"), jid("10.1/3"), jid("10.1/4")}));
    reg.add(testing::collection("C-S", Side::Science, 2, {jid("10.1/4"), jid("10.1/5")}));

    const auto m = overlap_matrix(reg, Side::Science);
    REQUIRE(m.names.size() == 3);
    CHECK(m.counts[0][1] == 2);  // A∩B
    CHECK(m.counts[1][2] == 1);  // B∩C
    CHECK(m.counts[0][2] == 0);  // A∩C
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(m.counts[i][j] == m.counts[j][i]);
        }
    }
}

TEST_CASE("disjoint collections give an all-zero overlap matrix") {
    CollectionRegistry reg;
    reg.add(testing::collection("A-T", Side::Technology, 0, {pid("US1000001")}));
    reg.add(testing::collection("B-T", Side::Technology, 1, {pid("US2000002")}));
    const auto m = overlap_matrix(reg, Side::Technology);
    CHECK(m.counts[0][1] == 0);
    CHECK(m.counts[1][0] == 0);
}

TEST_CASE("registry loads .ids files with canonical family order") {
    testing::TempDir dir;
    atomic_write_file(dir.path() / "NT-S.ids", "10.2/a\n10.2/b\n");
    atomic_write_file(dir.path() / "G-S.ids", "10.1/a\n");
    atomic_write_file(dir.path() / "(2D+TMO+TMD)-S.ids", "10.3/a\n");
    atomic_write_file(dir.path() / "G-T.ids", "US1234567\nUS7654321B2\n# comment\n");

    const auto reg = CollectionRegistry::load_directory(dir.path());
    const auto& science = reg.side(Side::Science);
    REQUIRE(science.size() == 3);
    CHECK(science[0].name == "G-S");
    CHECK(science[1].name == "NT-S");
    CHECK(science[2].name == "(2D+TMO+TMD)-S");
    CHECK(science[1].members.size() == 2);
    const auto& tech = reg.side(Side::Technology);
    REQUIRE(tech.size() == 1);
    // Kind codes stripped from membership ids.
    CHECK(tech[0].members.contains(pid("US7654321")));
}

TEST_CASE("classification partitions a corpus") {
    const auto reg = two_sided_registry();
    std::vector<PublicationId> ids = {jid("10.1/a"), jid("10.1/b"), jid("10.1/c"),
                                      jid("10.1/d"), pid("US1000001"), pid("US1000002"),
                                      pid("US9999999")};
    std::map<std::string, int> counts;
    for (const auto& id : ids) ++counts[std::string(reg.classify(id))];
    int total = 0;
    for (const auto& [label, n] : counts) total += n;
    CHECK(total == static_cast<int>(ids.size()));
}
