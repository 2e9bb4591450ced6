#pragma once

#include <optional>
#include <string>
#include <vector>

#include "citegraph/ids.hpp"

namespace citegraph {

struct Affiliation {
    std::string raw;
    std::string region;  // 2-letter code or "??"
};

struct Author {
    std::string name;  // normalized: lower-cased "surname, initials"
    std::vector<Affiliation> affiliations;
};

// Verbatim reference string, with whatever explicit identifiers the
// source already carried.
struct RawReference {
    std::string text;
    std::optional<std::string> embedded_doi;     // normalized
    std::optional<std::string> embedded_patent;  // verbatim patent number
};

struct JournalRecord {
    PublicationId id;
    int year = 0;
    std::string title;
    std::vector<Author> authors;
    std::vector<RawReference> raw_refs;
    bool funding_acknowledged = false;
};

struct PatentRecord {
    PublicationId id;
    std::string region;
    std::optional<std::string> kind_code;
    int year = 0;
    std::string language;  // 2-letter code or "XX"
    std::vector<PublicationId> patent_refs;
    std::vector<RawReference> npl_refs;
    std::vector<std::string> resolved_npl;  // DOIs already linked upstream
};

}  // namespace citegraph
