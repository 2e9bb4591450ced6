#include <doctest.h>

#include "citegraph/match_scoring.hpp"
#include "support/oracles.hpp"

using citegraph::FomAggregate;
using citegraph::MetadataCandidate;
using citegraph::RawReference;
using citegraph::score_candidate;
using citegraph::truncate_at_last_quote;

TEST_CASE("truncation keeps the prefix through the last quote") {
    CHECK(truncate_at_last_quote("Smith, J. \"Graphene films\" Nature 2005") ==
          "Smith, J. \"Graphene films\"");
    CHECK(truncate_at_last_quote("no quotes here") == "no quotes here");
    CHECK(truncate_at_last_quote("ends with a quote\"") == "ends with a quote\"");
    // Curly quotes count too.
    CHECK(truncate_at_last_quote("a “title” trailing") == "a “title”");
}

TEST_CASE("exact author-title concatenation scores zero") {
    RawReference ref;
    ref.text = "A. Geim K. Novoselov Rise of graphene";
    MetadataCandidate cand;
    cand.doi = "10.1/x";
    cand.title = "Rise of graphene";
    cand.authors = {"A. Geim", "K. Novoselov"};
    const auto s = score_candidate(ref, cand);
    CHECK(s.figure_of_merit == 0.0);
    CHECK(s.r_full_all == 0.0);
}

TEST_CASE("four ratios match the DP oracle on a quoted reference") {
    RawReference ref;
    ref.text = "A. Geim, K. Novoselov \"Rise of graphene\" Nat. Mater.";
    MetadataCandidate cand;
    cand.doi = "10.1/x";
    cand.title = "Rise of graphene";
    cand.authors = {"A. Geim", "K. Novoselov"};

    const std::string full = ref.text;
    const std::string trunc = "A. Geim, K. Novoselov \"Rise of graphene\"";
    const std::string all = "A. Geim K. Novoselov Rise of graphene";
    const std::string first = "A. Geim Rise of graphene";

    const auto s = score_candidate(ref, cand);
    CHECK(s.r_full_all == doctest::Approx(oracles::levenshtein_ratio(full, all)));
    CHECK(s.r_full_first == doctest::Approx(oracles::levenshtein_ratio(full, first)));
    CHECK(s.r_trunc_all == doctest::Approx(oracles::levenshtein_ratio(trunc, all)));
    CHECK(s.r_trunc_first == doctest::Approx(oracles::levenshtein_ratio(trunc, first)));
    const double lo = std::min({s.r_full_all, s.r_full_first, s.r_trunc_all, s.r_trunc_first});
    CHECK(s.figure_of_merit == lo);

    const auto sm = score_candidate(ref, cand, FomAggregate::Max);
    const double hi = std::max({sm.r_full_all, sm.r_full_first, sm.r_trunc_all,
                                sm.r_trunc_first});
    CHECK(sm.figure_of_merit == hi);
}

TEST_CASE("trailing whitespace on the reference does not change the score") {
    RawReference a, b;
    a.text = "J. Doe \"Some result\" J. Things 3, 14 (2005)";
    b.text = a.text + "   \t ";
    MetadataCandidate cand;
    cand.doi = "10.1/y";
    cand.title = "Some result";
    cand.authors = {"J. Doe"};
    CHECK(score_candidate(a, cand).figure_of_merit ==
          score_candidate(b, cand).figure_of_merit);
}

TEST_CASE("missing candidate fields degrade but do not fail") {
    RawReference ref;
    ref.text = "X. Writer \"A very long and descriptive article title\" Venue 1999";
    MetadataCandidate no_title;
    no_title.doi = "10.1/z";
    no_title.authors = {"X. Writer"};
    const auto s1 = score_candidate(ref, no_title);
    CHECK(s1.figure_of_merit > 0.0);
    CHECK(s1.figure_of_merit <= 1.0);

    MetadataCandidate empty;
    empty.doi = "10.1/w";
    const auto s2 = score_candidate(ref, empty);
    CHECK(s2.figure_of_merit == 1.0);
}
