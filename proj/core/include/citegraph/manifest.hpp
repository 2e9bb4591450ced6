#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace citegraph {

// Record of one run: config snapshot, input fingerprints, and the
// produced files with their hashes. Step timings are informational and
// excluded from reproducibility comparisons.
struct RunManifest {
    std::string tool_version;
    std::string config_snapshot;
    std::vector<std::pair<std::string, std::string>> inputs;   // path, fingerprint
    std::vector<std::pair<std::string, std::string>> outputs;  // relative path, fingerprint
    std::vector<std::pair<std::string, double>> step_millis;

    void add_input(const std::filesystem::path& path);
    // Paths are stored relative to the output root.
    void add_output(const std::filesystem::path& root, const std::filesystem::path& path);

    std::string to_json() const;
};

}  // namespace citegraph
