#pragma once

#include <chrono>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "citegraph/match_scoring.hpp"

namespace citegraph {

// Key under which a query's response is cached and looked up in fixture
// directories: FNV-1a of the exact query text, as 16 hex digits.
std::string metadata_query_key(std::string_view query);

// Parses a works-query JSON body ({"message":{"items":[{DOI,title,author}]}})
// into candidates. Malformed items are skipped, not fatal.
std::vector<MetadataCandidate> parse_works_response(const std::string& body);

// Shared interface for the works-metadata service. Implementations must
// be safe to call from multiple workers.
class MetadataClient {
public:
    virtual ~MetadataClient() = default;

    // Top candidates for a free-text reference query, most relevant
    // first. Empty result means the service knows nothing. Throws
    // TransportError when the service cannot be reached.
    virtual std::vector<MetadataCandidate> query_works(const std::string& query, int rows) = 0;
};

// Serves canned responses from a directory of `<key>.json` files; never
// touches the network. Missing fixture -> empty result.
class FixtureMetadataClient : public MetadataClient {
public:
    explicit FixtureMetadataClient(std::filesystem::path dir);
    std::vector<MetadataCandidate> query_works(const std::string& query, int rows) override;

    const std::filesystem::path& directory() const { return dir_; }

private:
    std::filesystem::path dir_;
};

struct HttpClientOptions {
    std::string base_url;                     // e.g. "https://api.crossref.org"
    std::optional<std::filesystem::path> cache_dir;
    double requests_per_second = 2.0;
    int max_attempts = 3;                     // with exponential backoff
    int timeout_seconds = 30;
    std::string user_agent = "citegraph/0.1 (batch bibliometrics; mailto:ops@localhost)";
};

// Live client: GET {base}/works?query.bibliographic=<text>&rows=<k>.
// Responses are cached verbatim on disk keyed by query hash, a global
// rate limiter spaces requests, and failures retry with backoff before
// surfacing as TransportError.
class HttpMetadataClient : public MetadataClient {
public:
    explicit HttpMetadataClient(HttpClientOptions options);
    ~HttpMetadataClient() override;

    std::vector<MetadataCandidate> query_works(const std::string& query, int rows) override;

private:
    std::string fetch(const std::string& query, int rows);
    std::optional<std::string> cache_get(const std::string& key) const;
    void cache_put(const std::string& key, const std::string& body) const;

    HttpClientOptions options_;
    std::mutex rate_mutex_;
    std::chrono::steady_clock::time_point next_allowed_;
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace citegraph
