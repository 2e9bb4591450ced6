#include "citegraph/metadata_client.hpp"

#include <chrono>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "citegraph/errors.hpp"
#include "citegraph/io.hpp"
#include "citegraph/util.hpp"

namespace citegraph {

using nlohmann::json;

std::string metadata_query_key(std::string_view query) {
    return fnv1a64_hex(query);
}

std::vector<MetadataCandidate> parse_works_response(const std::string& body) {
    std::vector<MetadataCandidate> out;
    json j = json::parse(body, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return out;
    const json* items = nullptr;
    if (j.contains("message") && j["message"].is_object() &&
        j["message"].contains("items") && j["message"]["items"].is_array()) {
        items = &j["message"]["items"];
    } else if (j.contains("items") && j["items"].is_array()) {
        items = &j["items"];
    }
    if (!items) return out;

    for (const auto& item : *items) {
        if (!item.is_object() || !item.contains("DOI") || !item["DOI"].is_string()) continue;
        auto doi = normalize_doi(item["DOI"].get<std::string>());
        if (!doi) continue;
        MetadataCandidate c;
        c.doi = std::move(*doi);
        if (item.contains("title")) {
            if (item["title"].is_array() && !item["title"].empty() &&
                item["title"][0].is_string()) {
                c.title = item["title"][0].get<std::string>();
            } else if (item["title"].is_string()) {
                c.title = item["title"].get<std::string>();
            }
        }
        if (item.contains("author") && item["author"].is_array()) {
            for (const auto& a : item["author"]) {
                if (!a.is_object()) continue;
                std::string name;
                if (a.contains("given") && a["given"].is_string()) {
                    name = a["given"].get<std::string>();
                }
                if (a.contains("family") && a["family"].is_string()) {
                    if (!name.empty()) name.push_back(' ');
                    name += a["family"].get<std::string>();
                }
                if (name.empty() && a.contains("name") && a["name"].is_string()) {
                    name = a["name"].get<std::string>();
                }
                if (!name.empty()) c.authors.push_back(std::move(name));
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

FixtureMetadataClient::FixtureMetadataClient(std::filesystem::path dir) : dir_(std::move(dir)) {
    if (!std::filesystem::is_directory(dir_)) {
        throw ConfigError("metadata fixture directory not found: " + dir_.string());
    }
}

std::vector<MetadataCandidate> FixtureMetadataClient::query_works(const std::string& query,
                                                                  int rows) {
    const auto path = dir_ / (metadata_query_key(query) + ".json");
    if (!std::filesystem::exists(path)) return {};
    auto candidates = parse_works_response(read_file(path));
    if (rows > 0 && candidates.size() > static_cast<std::size_t>(rows)) {
        candidates.resize(static_cast<std::size_t>(rows));
    }
    return candidates;
}

// Splits "https://api.example.org/v1" into scheme/host/prefix.
struct HttpMetadataClient::Impl {
    std::string host;
    std::string path_prefix;
    bool https = false;

    explicit Impl(const std::string& url) {
        std::string rest = url;
        if (rest.starts_with("https://")) {
            https = true;
            rest = rest.substr(8);
        } else if (rest.starts_with("http://")) {
            rest = rest.substr(7);
        } else {
            throw ConfigError("metadata base url must start with http:// or https://: " + url);
        }
        const auto slash = rest.find('/');
        host = rest.substr(0, slash);
        path_prefix = slash == std::string::npos ? "" : rest.substr(slash);
        while (path_prefix.size() > 1 && path_prefix.back() == '/') {
            path_prefix.pop_back();
        }
        if (host.empty()) throw ConfigError("metadata base url has no host: " + url);
    }
};

namespace {

std::string url_encode(std::string_view s) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    out.reserve(s.size());
    for (unsigned char c : s) {
        if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
            c == '-' || c == '_' || c == '.' || c == '~') {
            out.push_back(static_cast<char>(c));
        } else if (c == ' ') {
            out.push_back('+');
        } else {
            out.push_back('%');
            out.push_back(hex[c >> 4]);
            out.push_back(hex[c & 0xf]);
        }
    }
    return out;
}

}  // namespace

HttpMetadataClient::HttpMetadataClient(HttpClientOptions options)
    : options_(std::move(options)),
      next_allowed_(std::chrono::steady_clock::now()),
      impl_(std::make_unique<Impl>(options_.base_url)) {
    if (options_.requests_per_second <= 0) {
        throw ConfigError("requests_per_second must be positive");
    }
}

HttpMetadataClient::~HttpMetadataClient() = default;

std::optional<std::string> HttpMetadataClient::cache_get(const std::string& key) const {
    if (!options_.cache_dir) return std::nullopt;
    const auto path = *options_.cache_dir / (key + ".json");
    if (!std::filesystem::exists(path)) return std::nullopt;
    return read_file(path);
}

void HttpMetadataClient::cache_put(const std::string& key, const std::string& body) const {
    if (!options_.cache_dir) return;
    atomic_write_file(*options_.cache_dir / (key + ".json"), body);
}

std::string HttpMetadataClient::fetch(const std::string& query, int rows) {
    const std::string target = impl_->path_prefix + "/works?query.bibliographic=" +
                               url_encode(query) + "&rows=" + std::to_string(rows);

    std::string last_error;
    for (int attempt = 0; attempt < options_.max_attempts; ++attempt) {
        if (attempt > 0) {
            std::this_thread::sleep_for(std::chrono::milliseconds(250) * (1 << attempt));
        }
        // Rate limiter: one token per 1/rps seconds, shared by all workers.
        {
            std::unique_lock lock(rate_mutex_);
            const auto now = std::chrono::steady_clock::now();
            if (next_allowed_ > now) {
                const auto wait = next_allowed_ - now;
                lock.unlock();
                std::this_thread::sleep_for(wait);
                lock.lock();
            }
            next_allowed_ = std::max(next_allowed_, std::chrono::steady_clock::now()) +
                            std::chrono::microseconds(
                                static_cast<long>(1e6 / options_.requests_per_second));
        }

        auto do_request = [&](auto& client) -> std::optional<std::string> {
            client.set_connection_timeout(options_.timeout_seconds);
            client.set_read_timeout(options_.timeout_seconds);
            httplib::Headers headers = {{"User-Agent", options_.user_agent}};
            auto res = client.Get(target, headers);
            if (!res) {
                last_error = "connection failed";
                return std::nullopt;
            }
            if (res->status != 200) {
                last_error = "http status " + std::to_string(res->status);
                return std::nullopt;
            }
            return res->body;
        };

        std::optional<std::string> body;
#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
        if (impl_->https) {
            httplib::SSLClient client(impl_->host);
            body = do_request(client);
        } else
#endif
        {
            if (impl_->https) {
                throw ConfigError("https metadata url requires TLS support in this build");
            }
            httplib::Client client(impl_->host);
            body = do_request(client);
        }
        if (body) return *body;
    }
    throw TransportError("metadata query failed after " +
                         std::to_string(options_.max_attempts) + " attempts: " + last_error);
}

std::vector<MetadataCandidate> HttpMetadataClient::query_works(const std::string& query,
                                                               int rows) {
    const std::string key = metadata_query_key(query);
    std::string body;
    if (auto cached = cache_get(key)) {
        body = std::move(*cached);
    } else {
        body = fetch(query, rows);
        cache_put(key, body);
    }
    auto candidates = parse_works_response(body);
    if (rows > 0 && candidates.size() > static_cast<std::size_t>(rows)) {
        candidates.resize(static_cast<std::size_t>(rows));
    }
    return candidates;
}

}  // namespace citegraph
