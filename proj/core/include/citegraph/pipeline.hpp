#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "citegraph/config.hpp"
#include "citegraph/corpus.hpp"
#include "citegraph/credit.hpp"
#include "citegraph/graph.hpp"
#include "citegraph/manifest.hpp"
#include "citegraph/metadata_client.hpp"

namespace citegraph {

// Names accepted by Pipeline::run, in execution order of `all`.
const std::vector<std::string>& pipeline_subcommands();

// Drives the batch pipeline over a project directory. Each step writes
// its artifacts under <out_dir>/<step>/ and registers them in the run
// manifest; `run` finishes by writing <out_dir>/manifest.json.
class Pipeline {
public:
    explicit Pipeline(ProjectConfig config);
    ~Pipeline();

    // Throws ConfigError / DataError; the CLI maps these to exit codes.
    void run(const std::string& subcommand);

    const ProjectConfig& config() const { return config_; }

    // Step bodies, usable directly from tests.
    void step_ingest();
    void step_calibrate();
    void step_link();
    void step_graph();
    void step_bowtie();
    void step_temporal();
    void step_simulate();
    void step_interest();
    void step_geo();
    void step_flows();
    void step_ranks();
    void step_audit_overlap();
    void step_audit_funding();

private:
    void ensure_corpus();
    void ensure_graph();
    std::string focal(Side side);
    std::unique_ptr<MetadataClient> make_client() const;
    const std::vector<CreditVector>& ensure_credits();
    void write_artifact(const std::string& step, const std::string& filename,
                        const std::string& content);
    void run_step(const std::string& name);

    ProjectConfig config_;
    RunManifest manifest_;
    bool corpus_loaded_ = false;
    Corpus corpus_;
    CollectionRegistry registry_;
    RejectionReport journal_report_;
    RejectionReport patent_report_;
    std::optional<CitationGraph> graph_;
    GraphBuildStats graph_stats_;
    std::optional<std::vector<CreditVector>> credits_;
};

}  // namespace citegraph
