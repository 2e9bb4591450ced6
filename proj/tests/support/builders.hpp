// Small fixture builders shared by the unit and acceptance suites.
#pragma once

#include <atomic>
#include <filesystem>
#include <random>
#include <string>
#include <unistd.h>
#include <vector>

#include <nlohmann/json.hpp>

#include "citegraph/collections.hpp"
#include "citegraph/corpus.hpp"
#include "citegraph/graph.hpp"
#include "citegraph/io.hpp"
#include "citegraph/metadata_client.hpp"
#include "citegraph/util.hpp"

namespace testing {

// Self-deleting scratch directory.
class TempDir {
public:
    TempDir() {
        const auto base = std::filesystem::temp_directory_path();
        static std::atomic<unsigned> counter{0};
        path_ = base / ("citegraph-test-" + std::to_string(::getpid()) + "-" +
                        std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

inline citegraph::PublicationId jid(const std::string& doi) {
    return *citegraph::make_journal_id(doi);
}

inline citegraph::PublicationId pid(const std::string& number) {
    return *citegraph::make_patent_id(number);
}

inline citegraph::Author author(const std::string& name,
                                const std::vector<std::string>& regions = {}) {
    citegraph::Author a;
    a.name = citegraph::to_lower(name);
    for (const auto& r : regions) a.affiliations.push_back({"somewhere, " + r, r});
    return a;
}

inline citegraph::JournalRecord paper(const std::string& doi, int year,
                                      const std::vector<std::string>& ref_dois = {},
                                      const std::vector<citegraph::Author>& authors = {},
                                      bool funded = false) {
    citegraph::JournalRecord rec;
    rec.id = jid(doi);
    rec.year = year;
    rec.title = "title of " + doi;
    rec.authors = authors;
    rec.funding_acknowledged = funded;
    for (const auto& d : ref_dois) {
        citegraph::RawReference ref;
        ref.text = "ref " + d;
        ref.embedded_doi = *citegraph::normalize_doi(d);
        rec.raw_refs.push_back(std::move(ref));
    }
    return rec;
}

inline citegraph::PatentRecord patent(const std::string& number, int year,
                                      const std::vector<std::string>& patent_refs = {},
                                      const std::vector<std::string>& npl_dois = {},
                                      const std::string& language = "EN") {
    citegraph::PatentRecord rec;
    rec.id = pid(number);
    rec.region = std::string(citegraph::patent_region(rec.id));
    rec.year = year;
    rec.language = language;
    for (const auto& p : patent_refs) rec.patent_refs.push_back(pid(p));
    for (const auto& d : npl_dois) rec.resolved_npl.push_back(*citegraph::normalize_doi(d));
    return rec;
}

inline citegraph::Collection collection(const std::string& name, citegraph::Side side,
                                        int priority,
                                        const std::vector<citegraph::PublicationId>& members) {
    citegraph::Collection c;
    c.name = name;
    c.side = side;
    c.priority = priority;
    c.members.insert(members.begin(), members.end());
    return c;
}

// Canned works-API response body for one query.
inline std::string works_response(const std::vector<citegraph::MetadataCandidate>& items) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& item : items) {
        nlohmann::json j;
        j["DOI"] = item.doi;
        if (!item.title.empty()) j["title"] = {item.title};
        nlohmann::json authors = nlohmann::json::array();
        for (const auto& a : item.authors) authors.push_back({{"name", a}});
        if (!authors.empty()) j["author"] = std::move(authors);
        arr.push_back(std::move(j));
    }
    return nlohmann::json{{"message", {{"items", std::move(arr)}}}}.dump();
}

inline void write_metadata_fixture(const std::filesystem::path& dir, const std::string& query,
                                   const std::vector<citegraph::MetadataCandidate>& items) {
    citegraph::atomic_write_file(
        dir / (citegraph::metadata_query_key(query) + ".json"), works_response(items));
}

}  // namespace testing
