#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace citegraph {

enum class PubKind : std::uint8_t { Journal, Patent };

// Canonical key for any publication. Journals use the lower-cased DOI;
// patents use the upper-cased region code followed by the serial digits
// (kind codes are stored on the record, never in the id).
struct PublicationId {
    PubKind kind{PubKind::Journal};
    std::string value;

    friend bool operator==(const PublicationId&, const PublicationId&) = default;
    friend auto operator<=>(const PublicationId&, const PublicationId&) = default;
};

// Lower-cases, trims, and strips resolver prefixes ("https://doi.org/",
// "doi:"). Returns nullopt unless the result is non-empty and contains
// a '/' separator.
std::optional<std::string> normalize_doi(std::string_view raw);

std::optional<PublicationId> make_journal_id(std::string_view raw_doi);

struct PatentNumberParts {
    std::string region;  // empty when the reference omitted the office code
    std::string serial;  // digits only
    std::string kind;    // trailing kind code, possibly empty
};

// Splits a patent publication number into region / serial digits / kind
// code. Accepts numbers without a region prefix ("7409759B2") and with
// separators inside the digit block ("2008-169255").
std::optional<PatentNumberParts> parse_patent_number(std::string_view raw);

// Full id for a patent record; requires a region code and >= 4 digits.
std::optional<PublicationId> make_patent_id(std::string_view raw_number);

inline std::string_view patent_region(const PublicationId& id) {
    return std::string_view(id.value).substr(0, 2);
}

}  // namespace citegraph

template <>
struct std::hash<citegraph::PublicationId> {
    std::size_t operator()(const citegraph::PublicationId& id) const noexcept {
        return std::hash<std::string>()(id.value) * 3 +
               static_cast<std::size_t>(id.kind);
    }
};
