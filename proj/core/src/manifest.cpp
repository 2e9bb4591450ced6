#include "citegraph/manifest.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "citegraph/io.hpp"
#include "citegraph/version.hpp"

namespace citegraph {

using nlohmann::json;

void RunManifest::add_input(const std::filesystem::path& path) {
    inputs.emplace_back(path.string(), file_fingerprint(path));
}

void RunManifest::add_output(const std::filesystem::path& root,
                             const std::filesystem::path& path) {
    outputs.emplace_back(std::filesystem::relative(path, root).generic_string(),
                         file_fingerprint(path));
}

std::string RunManifest::to_json() const {
    json j;
    j["tool_version"] = tool_version.empty() ? kVersion : tool_version;
    j["config"] = config_snapshot;

    auto sorted = [](std::vector<std::pair<std::string, std::string>> items) {
        std::sort(items.begin(), items.end());
        return items;
    };
    json in = json::object();
    for (const auto& [path, hash] : sorted(inputs)) in[path] = hash;
    j["inputs"] = std::move(in);
    json out = json::object();
    for (const auto& [path, hash] : sorted(outputs)) out[path] = hash;
    j["outputs"] = std::move(out);

    json steps = json::array();
    for (const auto& [name, ms] : step_millis) {
        steps.push_back({{"step", name}, {"millis", ms}});
    }
    j["timings"] = std::move(steps);
    return j.dump(2) + "\n";
}

}  // namespace citegraph
