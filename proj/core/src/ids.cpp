#include "citegraph/ids.hpp"

#include <cctype>

#include "citegraph/util.hpp"

namespace citegraph {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

}  // namespace

std::optional<std::string> normalize_doi(std::string_view raw) {
    std::string s = to_lower(trim(raw));
    for (std::string_view prefix :
         {"https://doi.org/", "http://doi.org/", "https://dx.doi.org/",
          "http://dx.doi.org/", "doi.org/", "doi:"}) {
        if (s.starts_with(prefix)) {
            s = std::string(trim(std::string_view(s).substr(prefix.size())));
            break;
        }
    }
    if (s.empty() || s.find('/') == std::string::npos) return std::nullopt;
    return s;
}

std::optional<PublicationId> make_journal_id(std::string_view raw_doi) {
    auto doi = normalize_doi(raw_doi);
    if (!doi) return std::nullopt;
    return PublicationId{PubKind::Journal, std::move(*doi)};
}

std::optional<PatentNumberParts> parse_patent_number(std::string_view raw) {
    const std::string s = to_upper(trim(raw));
    if (s.empty()) return std::nullopt;

    size_t pos = 0;
    std::string region;
    if (s.size() >= 2 && is_alpha(s[0]) && is_alpha(s[1])) {
        region = s.substr(0, 2);
        pos = 2;
    }

    // Digit block; '-', '/', and spaces inside the block are separators.
    std::string serial;
    while (pos < s.size()) {
        const char c = s[pos];
        if (is_digit(c)) {
            serial.push_back(c);
        } else if (c != '-' && c != '/' && c != ' ') {
            break;
        }
        ++pos;
    }
    if (serial.empty()) return std::nullopt;

    // Kind code: trailing letter plus optional digit.
    std::string kind;
    if (pos < s.size() && is_alpha(s[pos])) {
        kind.push_back(s[pos]);
        ++pos;
        if (pos < s.size() && is_digit(s[pos])) {
            kind.push_back(s[pos]);
            ++pos;
        }
    }
    if (pos != s.size()) return std::nullopt;

    return PatentNumberParts{std::move(region), std::move(serial), std::move(kind)};
}

std::optional<PublicationId> make_patent_id(std::string_view raw_number) {
    auto parts = parse_patent_number(raw_number);
    if (!parts || parts->region.empty() || parts->serial.size() < 4) return std::nullopt;
    return PublicationId{PubKind::Patent, parts->region + parts->serial};
}

}  // namespace citegraph
