#include "citegraph/resolve.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "citegraph/errors.hpp"
#include "citegraph/util.hpp"

namespace citegraph {

using nlohmann::json;

std::string_view to_string(ResolutionStatus status) {
    switch (status) {
        case ResolutionStatus::Accepted: return "accepted";
        case ResolutionStatus::Rejected: return "rejected";
        case ResolutionStatus::TransportError: return "transport_error";
    }
    return "rejected";
}

Resolution resolve_reference(const RawReference& ref, MetadataClient& client,
                             double threshold, FomAggregate aggregate) {
    Resolution r;
    r.ref_text = ref.text;
    if (ref.embedded_doi) {
        r.doi = ref.embedded_doi;
        r.score = 0.0;
        r.status = ResolutionStatus::Accepted;
        return r;
    }

    std::vector<MetadataCandidate> candidates;
    try {
        candidates = client.query_works(ref.text, 1);
    } catch (const TransportError&) {
        r.score = 1.0;
        r.status = ResolutionStatus::TransportError;
        return r;
    }
    if (candidates.empty()) {
        r.score = 1.0;
        r.status = ResolutionStatus::Rejected;
        return r;
    }

    const MatchScore score = score_candidate(ref, candidates.front(), aggregate);
    r.score = score.figure_of_merit;
    if (score.figure_of_merit < threshold) {
        r.doi = candidates.front().doi;
        r.status = ResolutionStatus::Accepted;
    } else {
        r.status = ResolutionStatus::Rejected;
    }
    return r;
}

std::string strip_doi_suffix(std::string_view text) {
    // Case-insensitive search for the last "doi" token; everything from
    // there on is the explicit identifier we must not leak into queries.
    const std::string lower = to_lower(text);
    const size_t pos = lower.rfind("doi");
    if (pos == std::string::npos) return std::string(trim(text));
    std::string_view head = text.substr(0, pos);
    // Drop the separator punctuation that usually precedes the marker.
    while (!head.empty() &&
           (head.back() == ' ' || head.back() == '.' || head.back() == ',' ||
            head.back() == ';' || head.back() == '(' || head.back() == '[')) {
        head.remove_suffix(1);
    }
    return std::string(trim(head));
}

ThresholdCalibration calibrate_threshold(const std::vector<LabeledReference>& labeled,
                                         MetadataClient& client, FomAggregate aggregate,
                                         double max_failure_rate) {
    ThresholdCalibration cal;
    for (const auto& ref : labeled) {
        CalibrationSample sample;
        sample.query = strip_doi_suffix(ref.text);

        std::vector<MetadataCandidate> candidates;
        try {
            candidates = client.query_works(sample.query, 1);
        } catch (const TransportError&) {
            sample.transport_failed = true;
            ++cal.transport_failures;
            cal.samples.push_back(std::move(sample));
            continue;
        }

        if (candidates.empty()) {
            sample.figure_of_merit = 1.0;
            sample.correct = false;
        } else {
            RawReference raw;
            raw.text = sample.query;
            const MatchScore score = score_candidate(raw, candidates.front(), aggregate);
            sample.figure_of_merit = score.figure_of_merit;
            sample.correct = candidates.front().doi == ref.doi;
        }
        cal.histogram.add(sample.figure_of_merit);
        cal.samples.push_back(std::move(sample));
    }

    if (!labeled.empty() &&
        static_cast<double>(cal.transport_failures) >
            max_failure_rate * static_cast<double>(labeled.size())) {
        cal.abort_reason = "transport failures on " + std::to_string(cal.transport_failures) +
                           " of " + std::to_string(labeled.size()) + " queries";
        return cal;
    }

    try {
        cal.threshold = otsu_threshold(cal.histogram);
    } catch (const std::invalid_argument& e) {
        cal.abort_reason = e.what();
        return cal;
    }
    cal.completed = true;
    return cal;
}

std::string resolutions_to_jsonl(const std::vector<Resolution>& resolutions) {
    std::string out;
    for (const auto& r : resolutions) {
        json j;
        j["citing"] = r.citing;
        j["ref_text"] = r.ref_text;
        j["doi"] = r.doi ? json(*r.doi) : json(nullptr);
        j["score"] = r.score;
        j["status"] = std::string(to_string(r.status));
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::vector<Resolution> resolutions_from_jsonl_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open resolutions file: " + path.string());
    std::vector<Resolution> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) {
            throw DataError("malformed resolution at " + path.string() + ":" +
                            std::to_string(line_no));
        }
        Resolution r;
        r.citing = j.value("citing", std::string());
        r.ref_text = j.value("ref_text", std::string());
        if (j.contains("doi") && j["doi"].is_string()) r.doi = j["doi"].get<std::string>();
        r.score = j.value("score", 1.0);
        const std::string status = j.value("status", std::string("rejected"));
        if (status == "accepted") {
            r.status = ResolutionStatus::Accepted;
        } else if (status == "transport_error") {
            r.status = ResolutionStatus::TransportError;
        } else {
            r.status = ResolutionStatus::Rejected;
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<LabeledReference> labeled_references_from_jsonl_file(
    const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open labeled reference file: " + path.string());
    std::vector<LabeledReference> out;
    std::string line;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) continue;
        LabeledReference ref;
        ref.text = j.value("text", std::string());
        auto doi = normalize_doi(j.value("doi", std::string()));
        if (ref.text.empty() || !doi) continue;
        ref.doi = std::move(*doi);
        out.push_back(std::move(ref));
    }
    return out;
}

}  // namespace citegraph
