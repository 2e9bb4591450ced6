#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "citegraph/series.hpp"

namespace citegraph {

enum class MetadataMode { Fixture, Live };

// Flat key=value configuration; CLI flags override file values, file
// values override defaults.
struct ProjectConfig {
    std::filesystem::path journal_jsonl;
    std::filesystem::path patent_jsonl;
    std::filesystem::path collections_dir;
    std::filesystem::path out_dir = "out";
    std::optional<std::filesystem::path> calibration_sample;  // labeled refs JSONL

    YearWindow window{2004, 2017};
    int horizon = 4;
    double threshold = 0.281;
    int max_lag = 25;
    int top_k = 10;
    int flow_top_k = 6;  // regions in the citation-flow matrices
    std::uint64_t seed = 42;
    std::size_t overlap_sample_size = 1000;
    unsigned jobs = 0;  // 0 = number of processors

    MetadataMode metadata_mode = MetadataMode::Fixture;
    std::optional<std::filesystem::path> metadata_fixtures;
    double rate_limit_rps = 2.0;
    bool fom_use_max = false;    // score aggregate: max instead of min
    bool per_year_refs = false;  // year-dependent r(C) in the simulation

    // Focal collections; empty = highest priority collection per side.
    std::string focal_science;
    std::string focal_technology;

    static ProjectConfig from_file(const std::filesystem::path& path);
    void apply_override(const std::string& key, const std::string& value);

    // Every violation found: missing paths, range errors, unknown keys
    // recorded during parsing.
    std::vector<std::string> validate() const;

    // Deterministic key=value snapshot (sorted keys).
    std::string snapshot() const;

    std::vector<std::string> unknown_keys;  // retained for validate()
};

}  // namespace citegraph
