#include "citegraph/config.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>

#include "citegraph/errors.hpp"
#include "citegraph/util.hpp"

namespace citegraph {

namespace {

bool parse_bool(const std::string& value) {
    const std::string v = to_lower(value);
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError("not a boolean: " + value);
}

template <typename T>
T parse_number(const std::string& value) {
    T out{};
    const auto* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc() || ptr != end) throw ConfigError("not a number: " + value);
    return out;
}

double parse_double(const std::string& value) {
    try {
        std::size_t pos = 0;
        const double out = std::stod(value, &pos);
        if (pos != value.size()) throw ConfigError("not a number: " + value);
        return out;
    } catch (const std::exception&) {
        throw ConfigError("not a number: " + value);
    }
}

}  // namespace

void ProjectConfig::apply_override(const std::string& key, const std::string& value) {
    if (key == "journal_jsonl") {
        journal_jsonl = value;
    } else if (key == "patent_jsonl") {
        patent_jsonl = value;
    } else if (key == "collections_dir") {
        collections_dir = value;
    } else if (key == "out_dir") {
        out_dir = value;
    } else if (key == "calibration_sample") {
        calibration_sample = value;
    } else if (key == "window_start") {
        window.start = parse_number<int>(value);
    } else if (key == "window_end") {
        window.end = parse_number<int>(value);
    } else if (key == "horizon") {
        horizon = parse_number<int>(value);
    } else if (key == "threshold") {
        threshold = parse_double(value);
    } else if (key == "max_lag") {
        max_lag = parse_number<int>(value);
    } else if (key == "top_k") {
        top_k = parse_number<int>(value);
    } else if (key == "flow_top_k") {
        flow_top_k = parse_number<int>(value);
    } else if (key == "seed") {
        seed = parse_number<std::uint64_t>(value);
    } else if (key == "overlap_sample_size") {
        overlap_sample_size = parse_number<std::size_t>(value);
    } else if (key == "jobs") {
        jobs = parse_number<unsigned>(value);
    } else if (key == "metadata_mode") {
        const std::string v = to_lower(value);
        if (v == "fixture") {
            metadata_mode = MetadataMode::Fixture;
        } else if (v == "live") {
            metadata_mode = MetadataMode::Live;
        } else {
            throw ConfigError("metadata_mode must be fixture or live: " + value);
        }
    } else if (key == "metadata_fixtures") {
        metadata_fixtures = value;
    } else if (key == "rate_limit_rps") {
        rate_limit_rps = parse_double(value);
    } else if (key == "fom_use_max") {
        fom_use_max = parse_bool(value);
    } else if (key == "per_year_refs") {
        per_year_refs = parse_bool(value);
    } else if (key == "focal_science") {
        focal_science = value;
    } else if (key == "focal_technology") {
        focal_technology = value;
    } else {
        unknown_keys.push_back(key);
    }
}

ProjectConfig ProjectConfig::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file: " + path.string());
    ProjectConfig config;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("expected key=value at " + path.string() + ":" +
                              std::to_string(line_no));
        }
        const std::string key(trim(t.substr(0, eq)));
        const std::string value(trim(t.substr(eq + 1)));
        config.apply_override(key, value);
    }

    // Relative paths resolve against the config file's directory.
    const auto base = path.parent_path();
    auto resolve = [&](std::filesystem::path& p) {
        if (!p.empty() && p.is_relative()) p = base / p;
    };
    resolve(config.journal_jsonl);
    resolve(config.patent_jsonl);
    resolve(config.collections_dir);
    resolve(config.out_dir);
    if (config.calibration_sample) resolve(*config.calibration_sample);
    if (config.metadata_fixtures) resolve(*config.metadata_fixtures);
    return config;
}

std::vector<std::string> ProjectConfig::validate() const {
    std::vector<std::string> violations;
    auto need_file = [&](const std::filesystem::path& p, const char* key) {
        if (p.empty()) {
            violations.push_back(std::string(key) + " is not set");
        } else if (!std::filesystem::exists(p)) {
            violations.push_back(std::string(key) + " missing path: " + p.string());
        }
    };
    need_file(journal_jsonl, "journal_jsonl");
    need_file(patent_jsonl, "patent_jsonl");
    need_file(collections_dir, "collections_dir");
    if (calibration_sample) need_file(*calibration_sample, "calibration_sample");
    if (metadata_mode == MetadataMode::Fixture) {
        if (!metadata_fixtures) {
            violations.push_back("metadata_mode=fixture requires metadata_fixtures");
        } else {
            need_file(*metadata_fixtures, "metadata_fixtures");
        }
    }
    if (!(threshold > 0.0 && threshold < 1.0)) {
        violations.push_back("threshold out of (0,1)");
    }
    if (window.start > window.end) violations.push_back("window start after end");
    if (horizon < 0) violations.push_back("horizon must be non-negative");
    if (max_lag < 0) violations.push_back("max_lag must be non-negative");
    if (top_k <= 0) violations.push_back("top_k must be positive");
    if (flow_top_k <= 0) violations.push_back("flow_top_k must be positive");
    if (rate_limit_rps <= 0.0) violations.push_back("rate_limit_rps must be positive");
    for (const auto& key : unknown_keys) violations.push_back("unknown key: " + key);
    return violations;
}

std::string ProjectConfig::snapshot() const {
    std::map<std::string, std::string> kv;
    kv["journal_jsonl"] = journal_jsonl.string();
    kv["patent_jsonl"] = patent_jsonl.string();
    kv["collections_dir"] = collections_dir.string();
    kv["out_dir"] = out_dir.string();
    if (calibration_sample) kv["calibration_sample"] = calibration_sample->string();
    kv["window_start"] = std::to_string(window.start);
    kv["window_end"] = std::to_string(window.end);
    kv["horizon"] = std::to_string(horizon);
    {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6g", threshold);
        kv["threshold"] = buf;
    }
    kv["max_lag"] = std::to_string(max_lag);
    kv["top_k"] = std::to_string(top_k);
    kv["flow_top_k"] = std::to_string(flow_top_k);
    kv["seed"] = std::to_string(seed);
    kv["overlap_sample_size"] = std::to_string(overlap_sample_size);
    kv["metadata_mode"] = metadata_mode == MetadataMode::Fixture ? "fixture" : "live";
    if (metadata_fixtures) kv["metadata_fixtures"] = metadata_fixtures->string();
    kv["fom_use_max"] = fom_use_max ? "true" : "false";
    kv["per_year_refs"] = per_year_refs ? "true" : "false";
    if (!focal_science.empty()) kv["focal_science"] = focal_science;
    if (!focal_technology.empty()) kv["focal_technology"] = focal_technology;

    std::string out;
    for (const auto& [k, v] : kv) {
        out += k;
        out.push_back('=');
        out += v;
        out.push_back('\n');
    }
    return out;
}

}  // namespace citegraph
