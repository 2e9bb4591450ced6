#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "citegraph/metadata_client.hpp"
#include "citegraph/otsu.hpp"

namespace citegraph {

enum class ResolutionStatus { Accepted, Rejected, TransportError };

struct Resolution {
    std::string citing;  // id value of the citing record
    std::string ref_text;
    std::optional<std::string> doi;
    double score = 0.0;
    ResolutionStatus status = ResolutionStatus::Rejected;
};

std::string_view to_string(ResolutionStatus status);

// Resolves one reference. An embedded DOI is returned as accepted with
// score 0 and no query; otherwise the top candidate is scored and
// accepted iff figure_of_merit < threshold. Transport failures come
// back as status transport_error, never as exceptions.
Resolution resolve_reference(const RawReference& ref, MetadataClient& client,
                             double threshold, FomAggregate aggregate = FomAggregate::Min);

struct LabeledReference {
    std::string text;  // full reference, ending in an explicit DOI suffix
    std::string doi;   // normalized ground truth
};

struct CalibrationSample {
    double figure_of_merit = 1.0;
    bool correct = false;         // candidate DOI equals the known DOI
    bool transport_failed = false;
    std::string query;
};

struct ThresholdCalibration {
    std::vector<CalibrationSample> samples;
    Histogram histogram{256};
    std::optional<double> threshold;  // empty when calibration aborted
    std::size_t transport_failures = 0;
    bool completed = false;
    std::string abort_reason;
};

// Fig.-2-style protocol: strip the "DOI ..." suffix from each labeled
// reference, query the client, score the top candidate, and mark it
// correct iff the DOIs agree. The accept threshold is Otsu's split over
// the figure-of-merit histogram. Aborts (completed = false, partial
// samples retained) when more than `max_failure_rate` of the queries
// fail at the transport level.
ThresholdCalibration calibrate_threshold(const std::vector<LabeledReference>& labeled,
                                         MetadataClient& client,
                                         FomAggregate aggregate = FomAggregate::Min,
                                         double max_failure_rate = 0.10);

// Cuts the reference text at its trailing DOI marker ("DOI", "doi:", ...),
// the way the calibration protocol prepares query strings.
std::string strip_doi_suffix(std::string_view text);

// JSONL with keys citing, ref_text, doi, score, status.
std::string resolutions_to_jsonl(const std::vector<Resolution>& resolutions);
std::vector<Resolution> resolutions_from_jsonl_file(const std::filesystem::path& path);

std::vector<LabeledReference> labeled_references_from_jsonl_file(
    const std::filesystem::path& path);

}  // namespace citegraph
