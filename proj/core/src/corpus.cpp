#include "citegraph/corpus.hpp"

#include <fstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "citegraph/errors.hpp"
#include "citegraph/region_gazetteer.hpp"
#include "citegraph/util.hpp"

namespace citegraph {

using nlohmann::json;

namespace {

constexpr int kMinYear = 1900;
constexpr int kMaxYear = 2100;

std::optional<int> get_year(const json& j) {
    if (!j.contains("year") || j["year"].is_null()) return std::nullopt;
    if (j["year"].is_number_integer()) return j["year"].get<int>();
    return std::nullopt;
}

std::string normalize_author_name(std::string_view raw) {
    return to_lower(collapse_spaces(raw));
}

std::vector<Author> parse_authors(const json& j, RejectionReport& report) {
    std::vector<Author> out;
    if (!j.contains("authors") || !j["authors"].is_array()) return out;
    for (const auto& a : j["authors"]) {
        if (!a.is_object() || !a.contains("name")) continue;
        Author author;
        author.name = normalize_author_name(a["name"].get<std::string>());
        if (author.name.empty()) continue;
        if (a.contains("affiliations") && a["affiliations"].is_array()) {
            for (const auto& aff : a["affiliations"]) {
                if (!aff.is_object()) continue;
                Affiliation af;
                af.raw = aff.value("raw", std::string());
                std::string region = to_upper(trim(aff.value("region", std::string())));
                if (region.size() == 2) {
                    af.region = region;
                } else {
                    af.region = region_from_affiliation(af.raw);
                }
                author.affiliations.push_back(std::move(af));
            }
        }
        out.push_back(std::move(author));
    }
    (void)report;
    return out;
}

std::vector<RawReference> parse_journal_refs(const json& j, RejectionReport& report) {
    std::vector<RawReference> out;
    if (!j.contains("refs") || !j["refs"].is_array()) return out;
    for (const auto& r : j["refs"]) {
        if (!r.is_object()) {
            ++report.dropped_refs;
            continue;
        }
        RawReference ref;
        ref.text = std::string(trim(r.value("raw", std::string())));
        if (r.contains("doi") && r["doi"].is_string()) {
            ref.embedded_doi = normalize_doi(r["doi"].get<std::string>());
        }
        if (r.contains("patent") && r["patent"].is_string()) {
            std::string p = std::string(trim(r["patent"].get<std::string>()));
            if (!p.empty()) ref.embedded_patent = std::move(p);
        }
        if (ref.text.empty() && !ref.embedded_doi && !ref.embedded_patent) {
            ++report.dropped_refs;
            continue;
        }
        if (ref.text.empty()) {
            ref.text = ref.embedded_doi ? *ref.embedded_doi : *ref.embedded_patent;
        }
        out.push_back(std::move(ref));
    }
    return out;
}

}  // namespace

JournalLoadResult load_journal_records(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open journal file: " + path.string());

    JournalLoadResult result;
    std::unordered_set<PublicationId> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) {
            result.report.rejections.push_back({line_no, "malformed json"});
            continue;
        }
        auto id = j.contains("doi") && j["doi"].is_string()
                      ? make_journal_id(j["doi"].get<std::string>())
                      : std::nullopt;
        if (!id) {
            result.report.rejections.push_back({line_no, "missing doi"});
            continue;
        }
        const auto year = get_year(j);
        if (!year) {
            result.report.rejections.push_back({line_no, "missing year"});
            continue;
        }
        if (*year < kMinYear || *year > kMaxYear) {
            result.report.rejections.push_back({line_no, "year out of range"});
            continue;
        }
        if (!seen.insert(*id).second) {
            result.report.rejections.push_back({line_no, "duplicate doi"});
            ++result.report.duplicates;
            continue;
        }

        JournalRecord rec;
        rec.id = std::move(*id);
        rec.year = *year;
        rec.title = j.value("title", std::string());
        rec.authors = parse_authors(j, result.report);
        rec.raw_refs = parse_journal_refs(j, result.report);
        rec.funding_acknowledged = j.value("funded", false);
        result.records.push_back(std::move(rec));
        ++result.report.accepted;
    }
    return result;
}

PatentLoadResult load_patent_records(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open patent file: " + path.string());

    PatentLoadResult result;
    std::unordered_set<PublicationId> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) {
            result.report.rejections.push_back({line_no, "malformed json"});
            continue;
        }
        if (!j.contains("pub_number") || !j["pub_number"].is_string() ||
            trim(j["pub_number"].get<std::string>()).empty()) {
            result.report.rejections.push_back({line_no, "missing publication number"});
            continue;
        }
        const std::string pub_number = j["pub_number"].get<std::string>();
        auto id = make_patent_id(pub_number);
        if (!id) {
            result.report.rejections.push_back({line_no, "invalid publication number"});
            continue;
        }
        const auto year = get_year(j);
        if (!year) {
            result.report.rejections.push_back({line_no, "missing year"});
            continue;
        }
        if (*year < kMinYear || *year > kMaxYear) {
            result.report.rejections.push_back({line_no, "year out of range"});
            continue;
        }
        if (!seen.insert(*id).second) {
            result.report.rejections.push_back({line_no, "duplicate publication number"});
            ++result.report.duplicates;
            continue;
        }

        PatentRecord rec;
        rec.id = std::move(*id);
        rec.region = std::string(patent_region(rec.id));
        if (j.contains("kind") && j["kind"].is_string()) {
            rec.kind_code = to_upper(trim(j["kind"].get<std::string>()));
        } else if (auto parts = parse_patent_number(pub_number); parts && !parts->kind.empty()) {
            rec.kind_code = parts->kind;
        }
        rec.year = *year;
        std::string lang = to_upper(trim(j.value("language", std::string())));
        rec.language = lang.size() == 2 ? lang : "XX";
        if (j.contains("patent_refs") && j["patent_refs"].is_array()) {
            for (const auto& pr : j["patent_refs"]) {
                if (!pr.is_string()) {
                    ++result.report.dropped_refs;
                    continue;
                }
                if (auto ref_id = make_patent_id(pr.get<std::string>())) {
                    rec.patent_refs.push_back(std::move(*ref_id));
                } else {
                    ++result.report.dropped_refs;
                }
            }
        }
        if (j.contains("npl_refs") && j["npl_refs"].is_array()) {
            for (const auto& nr : j["npl_refs"]) {
                if (!nr.is_string()) continue;
                RawReference ref;
                ref.text = std::string(trim(nr.get<std::string>()));
                if (ref.text.empty()) {
                    ++result.report.dropped_refs;
                    continue;
                }
                rec.npl_refs.push_back(std::move(ref));
            }
        }
        if (j.contains("resolved_npl") && j["resolved_npl"].is_array()) {
            for (const auto& rd : j["resolved_npl"]) {
                if (!rd.is_string()) continue;
                if (auto doi = normalize_doi(rd.get<std::string>())) {
                    rec.resolved_npl.push_back(std::move(*doi));
                }
            }
        }
        result.records.push_back(std::move(rec));
        ++result.report.accepted;
    }
    return result;
}

void Corpus::add_journals(std::vector<JournalRecord> records) {
    for (auto& rec : records) {
        if (journal_index_.contains(rec.id)) continue;
        journal_index_.emplace(rec.id, journals_.size());
        journals_.push_back(std::move(rec));
    }
}

void Corpus::add_patents(std::vector<PatentRecord> records) {
    for (auto& rec : records) {
        if (patent_index_.contains(rec.id)) continue;
        patent_index_.emplace(rec.id, patents_.size());
        patents_.push_back(std::move(rec));
    }
}

const JournalRecord* Corpus::journal(const PublicationId& id) const {
    auto it = journal_index_.find(id);
    return it == journal_index_.end() ? nullptr : &journals_[it->second];
}

const PatentRecord* Corpus::patent(const PublicationId& id) const {
    auto it = patent_index_.find(id);
    return it == patent_index_.end() ? nullptr : &patents_[it->second];
}

bool Corpus::contains(const PublicationId& id) const {
    return id.kind == PubKind::Journal ? journal_index_.contains(id)
                                       : patent_index_.contains(id);
}

std::optional<int> Corpus::year_of(const PublicationId& id) const {
    if (id.kind == PubKind::Journal) {
        const auto* rec = journal(id);
        return rec ? std::optional<int>(rec->year) : std::nullopt;
    }
    const auto* rec = patent(id);
    return rec ? std::optional<int>(rec->year) : std::nullopt;
}

std::string Corpus::serialize() const {
    std::string out;
    for (const auto& rec : journals_) {
        json j;
        j["doi"] = rec.id.value;
        j["year"] = rec.year;
        j["title"] = rec.title;
        json authors = json::array();
        for (const auto& a : rec.authors) {
            json ja;
            ja["name"] = a.name;
            json affs = json::array();
            for (const auto& af : a.affiliations) {
                affs.push_back({{"raw", af.raw}, {"region", af.region}});
            }
            ja["affiliations"] = std::move(affs);
            authors.push_back(std::move(ja));
        }
        j["authors"] = std::move(authors);
        json refs = json::array();
        for (const auto& r : rec.raw_refs) {
            json jr;
            jr["raw"] = r.text;
            jr["doi"] = r.embedded_doi ? json(*r.embedded_doi) : json(nullptr);
            jr["patent"] = r.embedded_patent ? json(*r.embedded_patent) : json(nullptr);
            refs.push_back(std::move(jr));
        }
        j["refs"] = std::move(refs);
        j["funded"] = rec.funding_acknowledged;
        out += j.dump();
        out += '\n';
    }
    for (const auto& rec : patents_) {
        json j;
        j["pub_number"] = rec.id.value;
        j["kind"] = rec.kind_code ? json(*rec.kind_code) : json(nullptr);
        j["year"] = rec.year;
        j["language"] = rec.language;
        json prefs = json::array();
        for (const auto& pr : rec.patent_refs) prefs.push_back(pr.value);
        j["patent_refs"] = std::move(prefs);
        json nrefs = json::array();
        for (const auto& nr : rec.npl_refs) nrefs.push_back(nr.text);
        j["npl_refs"] = std::move(nrefs);
        j["resolved_npl"] = rec.resolved_npl;
        out += j.dump();
        out += '\n';
    }
    return out;
}

}  // namespace citegraph
