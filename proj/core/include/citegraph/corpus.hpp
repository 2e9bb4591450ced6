#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "citegraph/records.hpp"

namespace citegraph {

struct Rejection {
    std::size_t line = 0;
    std::string reason;
};

struct RejectionReport {
    std::vector<Rejection> rejections;
    std::size_t accepted = 0;
    std::size_t duplicates = 0;    // rejected as duplicate ids (first occurrence wins)
    std::size_t dropped_refs = 0;  // empty or unparseable reference entries

    std::size_t rejected() const { return rejections.size(); }
};

struct JournalLoadResult {
    std::vector<JournalRecord> records;
    RejectionReport report;
};

struct PatentLoadResult {
    std::vector<PatentRecord> records;
    RejectionReport report;
};

// One JSON object per line. Records missing a DOI or year are rejected
// line by line; an unreadable file is fatal.
JournalLoadResult load_journal_records(const std::filesystem::path& path);

// Records missing a publication number or year are rejected.
PatentLoadResult load_patent_records(const std::filesystem::path& path);

// Immutable after load; safe for concurrent readers.
class Corpus {
public:
    void add_journals(std::vector<JournalRecord> records);
    void add_patents(std::vector<PatentRecord> records);

    const std::vector<JournalRecord>& journals() const { return journals_; }
    const std::vector<PatentRecord>& patents() const { return patents_; }

    const JournalRecord* journal(const PublicationId& id) const;
    const PatentRecord* patent(const PublicationId& id) const;
    bool contains(const PublicationId& id) const;
    std::optional<int> year_of(const PublicationId& id) const;

    std::size_t size() const { return journals_.size() + patents_.size(); }

    // Canonical JSONL of the loaded corpus; loading a file twice must
    // reproduce this byte for byte.
    std::string serialize() const;

private:
    std::vector<JournalRecord> journals_;
    std::vector<PatentRecord> patents_;
    std::unordered_map<PublicationId, std::size_t> journal_index_;
    std::unordered_map<PublicationId, std::size_t> patent_index_;
};

}  // namespace citegraph
