// citegraph: batch analytics over normalized journal and patent records.
// Subcommands run pipeline steps against a project config; see the
// README for the config schema and output layout.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "citegraph/errors.hpp"
#include "citegraph/pipeline.hpp"
#include "citegraph/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitData = 2;
constexpr int kExitUsage = 64;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"citegraph: citation-corpus analytics pipeline"};
    app.set_version_flag("--version", citegraph::kVersion);
    app.fallthrough();
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::string metadata_fixtures;
    std::string seed;
    std::string jobs;
    std::string threshold;
    app.add_option("--config", config_path, "project config file (key=value lines)");
    app.add_option("--out", out_dir, "output directory (overrides config)");
    app.add_option("--metadata-fixtures", metadata_fixtures,
                   "canned metadata responses; implies fixture mode");
    app.add_option("--seed", seed, "seed for randomized steps");
    app.add_option("--jobs", jobs, "worker pool size (0 = processors)");
    app.add_option("--threshold", threshold, "resolver accept threshold");

    for (const auto& name : citegraph::pipeline_subcommands()) {
        app.add_subcommand(name, "run the " + name + " step");
    }
    app.add_subcommand("validate", "check the config and report violations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const std::string subcommand = app.get_subcommands().front()->get_name();

    citegraph::ProjectConfig config;
    try {
        if (!config_path.empty()) {
            config = citegraph::ProjectConfig::from_file(config_path);
        }
        if (!out_dir.empty()) config.apply_override("out_dir", out_dir);
        if (!metadata_fixtures.empty()) {
            config.apply_override("metadata_mode", "fixture");
            config.apply_override("metadata_fixtures", metadata_fixtures);
        }
        if (!seed.empty()) config.apply_override("seed", seed);
        if (!jobs.empty()) config.apply_override("jobs", jobs);
        if (!threshold.empty()) config.apply_override("threshold", threshold);
    } catch (const citegraph::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitValidation;
    }

    const auto violations = config.validate();
    if (subcommand == "validate") {
        for (const auto& v : violations) std::cout << v << "\n";
        std::cout << (violations.empty() ? "config ok\n"
                                         : std::to_string(violations.size()) +
                                               " violation(s) found\n");
        return kExitOk;
    }
    if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << "config: " << v << "\n";
        return kExitValidation;
    }

    try {
        citegraph::Pipeline pipeline(std::move(config));
        pipeline.run(subcommand);
    } catch (const citegraph::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitOk;
}
