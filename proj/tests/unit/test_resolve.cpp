#include <doctest.h>

#include "citegraph/errors.hpp"
#include "citegraph/resolve.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace citegraph;

namespace {

// Client whose every call trips the test: lets fixture-mode paths prove
// they never reach the network.
class PoisonClient : public MetadataClient {
public:
    std::vector<MetadataCandidate> query_works(const std::string&, int) override {
        FAIL("metadata client contacted in a test that forbids it");
        return {};
    }
};

MetadataCandidate candidate(const std::string& doi, const std::string& title,
                            std::vector<std::string> authors) {
    MetadataCandidate c;
    c.doi = doi;
    c.title = title;
    c.authors = std::move(authors);
    return c;
}

}  // namespace

TEST_CASE("embedded DOI short-circuits without a query") {
    PoisonClient client;
    RawReference ref;
    ref.text = "Smith, J. Something. doi:10.5/abc";
    ref.embedded_doi = "10.5/abc";
    const auto r = resolve_reference(ref, client, 0.281);
    CHECK(r.status == ResolutionStatus::Accepted);
    CHECK(r.doi == "10.5/abc");
    CHECK(r.score == 0.0);
}

TEST_CASE("candidate above threshold is rejected, clean match accepted") {
    testing::TempDir dir;
    const std::string good = "A. Author \"A compelling study of things\" J. Stuff 1 (2001)";
    const std::string bad = "B. Writer \"Completely unrelated words\" Elsewhere 2 (2002)";
    testing::write_metadata_fixture(
        dir.path(), good,
        {candidate("10.5/good", "A compelling study of things", {"A. Author"})});
    testing::write_metadata_fixture(
        dir.path(), bad,
        {candidate("10.5/other", "Different topic entirely and then some", {"Z. Zed"})});
    FixtureMetadataClient client(dir.path());

    RawReference ok;
    ok.text = good;
    const auto accepted = resolve_reference(ok, client, 0.281);
    CHECK(accepted.status == ResolutionStatus::Accepted);
    CHECK(accepted.doi == "10.5/good");
    CHECK(accepted.score < 0.05);

    RawReference nope;
    nope.text = bad;
    const auto rejected = resolve_reference(nope, client, 0.281);
    CHECK(rejected.status == ResolutionStatus::Rejected);
    CHECK(!rejected.doi);
    CHECK(rejected.score >= 0.281);
}

TEST_CASE("missing fixture resolves to rejected, not an error") {
    testing::TempDir dir;
    FixtureMetadataClient client(dir.path());
    RawReference ref;
    ref.text = "nobody knows this reference";
    const auto r = resolve_reference(ref, client, 0.5);
    CHECK(r.status == ResolutionStatus::Rejected);
}

TEST_CASE("raising the threshold never un-accepts a reference") {
    testing::TempDir dir;
    const std::string text = "C. Person \"Partially matching title\" Venue 9 (2009)";
    testing::write_metadata_fixture(
        dir.path(), text, {candidate("10.5/partial", "Partially matching title", {})});
    FixtureMetadataClient client(dir.path());
    RawReference ref;
    ref.text = text;

    bool accepted_before = false;
    for (double threshold : {0.05, 0.15, 0.3, 0.5, 0.7, 0.9}) {
        const auto r = resolve_reference(ref, client, threshold);
        const bool accepted = r.status == ResolutionStatus::Accepted;
        if (accepted_before) CHECK(accepted);
        accepted_before = accepted_before || accepted;
    }
    CHECK(accepted_before);
}

TEST_CASE("strip_doi_suffix removes the trailing identifier") {
    CHECK(strip_doi_suffix("Smith \"T\" J 1 (2000). DOI: 10.1/x") == "Smith \"T\" J 1 (2000)");
    CHECK(strip_doi_suffix("Smith \"T\" J 1 (2000), doi:10.1/x") == "Smith \"T\" J 1 (2000)");
    CHECK(strip_doi_suffix("no identifier here") == "no identifier here");
}

TEST_CASE("calibration separates a noiseless sample with zero misclassifications") {
    testing::TempDir dir;
    std::vector<LabeledReference> labeled;
    for (int i = 0; i < 30; ++i) {
        const std::string title = "study number " + std::to_string(i) + " of many";
        const std::string author = "A. Person" + std::to_string(i);
        const std::string doi = "10.7/ref" + std::to_string(i);
        const std::string query = author + " \"" + title + "\" Journal 1 (2010)";
        LabeledReference ref;
        ref.text = query + ". DOI: " + doi;
        ref.doi = doi;
        labeled.push_back(ref);
        if (i % 3 == 2) {
            // Wrong record entirely.
            testing::write_metadata_fixture(
                dir.path(), query,
                {candidate("10.7/wrong" + std::to_string(i),
                           "an entirely different matter altogether with more words",
                           {"Q. Stranger"})});
        } else {
            testing::write_metadata_fixture(dir.path(), query,
                                            {candidate(doi, title, {author})});
        }
    }
    FixtureMetadataClient client(dir.path());
    const auto cal = calibrate_threshold(labeled, client);
    REQUIRE(cal.completed);
    REQUIRE(cal.threshold);

    // Threshold cleanly separates the two classes.
    for (const auto& s : cal.samples) {
        if (s.correct) {
            CHECK(s.figure_of_merit < *cal.threshold);
        } else {
            CHECK(s.figure_of_merit >= *cal.threshold);
        }
    }
}

TEST_CASE("calibration aborts with a partial report on heavy transport failure") {
    class FlakyClient : public MetadataClient {
    public:
        std::vector<MetadataCandidate> query_works(const std::string&, int) override {
            throw TransportError("down");
        }
    };
    FlakyClient client;
    std::vector<LabeledReference> labeled(5, LabeledReference{"x \"y\" DOI: 10.1/z", "10.1/z"});
    const auto cal = calibrate_threshold(labeled, client);
    CHECK(!cal.completed);
    CHECK(!cal.threshold);
    CHECK(cal.transport_failures == 5);
    CHECK(cal.samples.size() == 5);
    CHECK(!cal.abort_reason.empty());
}

TEST_CASE("resolution JSONL round-trips") {
    testing::TempDir dir;
    std::vector<Resolution> rs(3);
    rs[0] = {"10.1/src", "some ref", std::string("10.2/dst"), 0.125, ResolutionStatus::Accepted};
    rs[1] = {"10.1/src", "bad ref", std::nullopt, 0.9, ResolutionStatus::Rejected};
    rs[2] = {"US1234567", "npl ref", std::nullopt, 1.0, ResolutionStatus::TransportError};
    const auto path = dir.path() / "r.jsonl";
    atomic_write_file(path, resolutions_to_jsonl(rs));
    const auto loaded = resolutions_from_jsonl_file(path);
    REQUIRE(loaded.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(loaded[i].citing == rs[i].citing);
        CHECK(loaded[i].ref_text == rs[i].ref_text);
        CHECK(loaded[i].doi == rs[i].doi);
        CHECK(loaded[i].score == rs[i].score);
        CHECK(loaded[i].status == rs[i].status);
    }
}
