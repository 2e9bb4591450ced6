#include "citegraph/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "citegraph/csv.hpp"
#include "citegraph/errors.hpp"
#include "citegraph/flows.hpp"
#include "citegraph/funding.hpp"
#include "citegraph/graph_reports.hpp"
#include "citegraph/io.hpp"
#include "citegraph/parallel.hpp"
#include "citegraph/patent_match.hpp"
#include "citegraph/resolve.hpp"
#include "citegraph/simulate.hpp"
#include "citegraph/temporal.hpp"
#include "citegraph/util.hpp"
#include "citegraph/version.hpp"

namespace citegraph {

using nlohmann::json;

namespace {

json label_counts_json(const std::vector<LabelCount>& breakdown) {
    json arr = json::array();
    for (const auto& lc : breakdown) {
        arr.push_back({{"label", lc.label}, {"count", lc.count}, {"percent", lc.percent}});
    }
    return arr;
}

std::string rejections_csv(const RejectionReport& report) {
    CsvWriter w;
    w.row({"line", "reason"});
    for (const auto& r : report.rejections) {
        w.row({CsvWriter::cell(static_cast<long long>(r.line)), CsvWriter::cell(r.reason)});
    }
    return w.str();
}

std::string overlap_csv(const OverlapMatrix& m) {
    CsvWriter w;
    std::vector<std::string> header{"collection"};
    for (const auto& name : m.names) header.push_back(CsvWriter::cell(name));
    w.row(header);
    for (std::size_t i = 0; i < m.names.size(); ++i) {
        std::vector<std::string> row{CsvWriter::cell(m.names[i])};
        for (std::size_t j = 0; j < m.names.size(); ++j) {
            row.push_back(i == j ? "-"
                                 : CsvWriter::cell(static_cast<long long>(m.counts[i][j])));
        }
        w.row(row);
    }
    return w.str();
}

json bowtie_json(const BowtieReport& r) {
    json j;
    j["focal"] = r.focal;
    j["n_pubs"] = r.n_pubs;
    j["refs_total"] = r.refs_total;
    j["cites_total"] = r.cites_total;
    j["avg_refs"] = r.avg_refs ? json(*r.avg_refs) : json(nullptr);
    j["avg_cites"] = r.avg_cites ? json(*r.avg_cites) : json(nullptr);
    j["value_added"] = r.value_added ? json(*r.value_added) : json(nullptr);
    j["refs_breakdown"] = label_counts_json(r.refs_breakdown);
    j["cites_breakdown"] = label_counts_json(r.cites_breakdown);
    j["counting"] = "deduplicated (src,dst,kind) edges per citing record";
    return j;
}

std::string bowtie_csv(const BowtieReport& r) {
    CsvWriter w;
    w.row({"label", "side", "count", "percent"});
    for (const auto& lc : r.refs_breakdown) {
        w.row({CsvWriter::cell(lc.label), "refs",
               CsvWriter::cell(static_cast<long long>(lc.count)),
               CsvWriter::cell(lc.percent)});
    }
    for (const auto& lc : r.cites_breakdown) {
        w.row({CsvWriter::cell(lc.label), "citations",
               CsvWriter::cell(static_cast<long long>(lc.count)),
               CsvWriter::cell(lc.percent)});
    }
    return w.str();
}

void append_profile_csv(std::string& out, const CitationProfile& p) {
    CsvWriter w;
    const struct {
        const char* label;
        const std::vector<double>* values;
    } bands[] = {{"p25", &p.p25}, {"p50", &p.p50}, {"p75", &p.p75}};
    for (const auto& band : bands) {
        for (int lag = 0; lag <= p.max_lag; ++lag) {
            w.row({CsvWriter::cell(p.collection), "profile", band.label,
                   CsvWriter::cell(static_cast<long long>(lag)),
                   CsvWriter::cell((*band.values)[static_cast<std::size_t>(lag)]), "", ""});
        }
    }
    out += w.str();
}

}  // namespace

const std::vector<std::string>& pipeline_subcommands() {
    static const std::vector<std::string> names = {
        "ingest",  "calibrate", "link",          "graph",
        "bowtie",  "temporal",  "simulate",      "interest",
        "geo",     "flows",     "ranks",         "audit-overlap",
        "audit-funding", "all",
    };
    return names;
}

Pipeline::Pipeline(ProjectConfig config) : config_(std::move(config)) {
    manifest_.tool_version = kVersion;
    manifest_.config_snapshot = config_.snapshot();
}

Pipeline::~Pipeline() = default;

void Pipeline::write_artifact(const std::string& step, const std::string& filename,
                              const std::string& content) {
    const auto path = config_.out_dir / step / filename;
    atomic_write_file(path, content);
    manifest_.add_output(config_.out_dir, path);
}

std::string Pipeline::focal(Side side) {
    ensure_corpus();
    const std::string& configured =
        side == Side::Science ? config_.focal_science : config_.focal_technology;
    if (!configured.empty()) {
        if (!registry_.find(configured)) {
            throw ConfigError("unknown focal collection: " + configured);
        }
        return configured;
    }
    const auto& list = registry_.side(side);
    if (list.empty()) throw DataError("no collections loaded for one side");
    return list.front().name;
}

std::unique_ptr<MetadataClient> Pipeline::make_client() const {
    if (config_.metadata_mode == MetadataMode::Fixture) {
        if (!config_.metadata_fixtures) {
            throw ConfigError("metadata_mode=fixture requires metadata_fixtures");
        }
        return std::make_unique<FixtureMetadataClient>(*config_.metadata_fixtures);
    }
    HttpClientOptions options;
    if (const char* url = std::getenv("CITEGRAPH_METADATA_URL"); url && *url) {
        options.base_url = url;
    } else {
        options.base_url = "https://api.crossref.org";
    }
    if (const char* dir = std::getenv("CITEGRAPH_CACHE_DIR"); dir && *dir) {
        options.cache_dir = std::filesystem::path(dir);
    }
    options.requests_per_second = config_.rate_limit_rps;
    return std::make_unique<HttpMetadataClient>(std::move(options));
}

void Pipeline::ensure_corpus() {
    if (corpus_loaded_) return;
    auto journals = load_journal_records(config_.journal_jsonl);
    auto patents = load_patent_records(config_.patent_jsonl);
    journal_report_ = journals.report;
    patent_report_ = patents.report;
    corpus_.add_journals(std::move(journals.records));
    corpus_.add_patents(std::move(patents.records));
    registry_ = CollectionRegistry::load_directory(config_.collections_dir);
    corpus_loaded_ = true;

    manifest_.add_input(config_.journal_jsonl);
    manifest_.add_input(config_.patent_jsonl);
    std::vector<std::filesystem::path> id_files;
    for (const auto& entry : std::filesystem::directory_iterator(config_.collections_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".ids") {
            id_files.push_back(entry.path());
        }
    }
    std::sort(id_files.begin(), id_files.end());
    for (const auto& f : id_files) manifest_.add_input(f);
    if (config_.calibration_sample) manifest_.add_input(*config_.calibration_sample);
}

void Pipeline::ensure_graph() {
    if (graph_) return;
    ensure_corpus();
    std::vector<Resolution> resolutions;
    const auto path = config_.out_dir / "link" / "resolutions.jsonl";
    if (std::filesystem::exists(path)) {
        resolutions = resolutions_from_jsonl_file(path);
    }
    auto result = build_graph(corpus_, registry_, resolutions);
    graph_ = std::move(result.graph);
    graph_stats_ = std::move(result.stats);
}

void Pipeline::step_ingest() {
    ensure_corpus();
    write_artifact("ingest", "rejections_journal.csv", rejections_csv(journal_report_));
    write_artifact("ingest", "rejections_patent.csv", rejections_csv(patent_report_));

    json summary;
    summary["journals"] = {{"accepted", journal_report_.accepted},
                           {"rejected", journal_report_.rejected()},
                           {"duplicates", journal_report_.duplicates},
                           {"dropped_refs", journal_report_.dropped_refs}};
    summary["patents"] = {{"accepted", patent_report_.accepted},
                          {"rejected", patent_report_.rejected()},
                          {"duplicates", patent_report_.duplicates},
                          {"dropped_refs", patent_report_.dropped_refs}};

    // Classification partitions the corpus: per-label counts sum to size.
    json classification;
    for (const Side side : {Side::Science, Side::Technology}) {
        std::map<std::string, std::uint64_t> counts;
        auto labels = registry_.labels(side);
        labels.emplace_back(kOthersLabel);
        for (const auto& label : labels) counts[label] = 0;
        if (side == Side::Science) {
            for (const auto& rec : corpus_.journals()) {
                ++counts[std::string(registry_.classify(rec.id))];
            }
        } else {
            for (const auto& rec : corpus_.patents()) {
                ++counts[std::string(registry_.classify(rec.id))];
            }
        }
        json side_counts;
        for (const auto& [label, n] : counts) side_counts[label] = n;
        classification[side == Side::Science ? "science" : "technology"] = side_counts;
    }
    summary["classification"] = classification;
    write_artifact("ingest", "corpus_summary.json", summary.dump(2) + "\n");

    write_artifact("ingest", "overlaps_science.csv",
                   overlap_csv(overlap_matrix(registry_, Side::Science)));
    write_artifact("ingest", "overlaps_technology.csv",
                   overlap_csv(overlap_matrix(registry_, Side::Technology)));
}

void Pipeline::step_calibrate() {
    if (!config_.calibration_sample) {
        throw ConfigError("calibrate requires calibration_sample in the config");
    }
    const auto labeled = labeled_references_from_jsonl_file(*config_.calibration_sample);
    auto client = make_client();
    const auto aggregate = config_.fom_use_max ? FomAggregate::Max : FomAggregate::Min;
    const auto cal = calibrate_threshold(labeled, *client, aggregate);

    json j;
    j["samples"] = cal.samples.size();
    j["transport_failures"] = cal.transport_failures;
    j["completed"] = cal.completed;
    j["threshold"] = cal.threshold ? json(*cal.threshold) : json(nullptr);
    std::size_t correct = 0;
    for (const auto& s : cal.samples) correct += s.correct ? 1 : 0;
    j["correct"] = correct;
    j["incorrect"] = cal.samples.size() - correct - cal.transport_failures;
    if (!cal.abort_reason.empty()) j["abort_reason"] = cal.abort_reason;
    write_artifact("calibrate", "calibration.json", j.dump(2) + "\n");

    CsvWriter w;
    w.row({"bin_low", "bin_high", "count"});
    const double width = 1.0 / static_cast<double>(cal.histogram.bins());
    for (std::size_t i = 0; i < cal.histogram.bins(); ++i) {
        w.row({CsvWriter::cell(static_cast<double>(i) * width),
               CsvWriter::cell(static_cast<double>(i + 1) * width),
               CsvWriter::cell(static_cast<long long>(cal.histogram.counts[i]))});
    }
    write_artifact("calibrate", "histogram.csv", w.str());

    if (!cal.completed) {
        throw DataError("calibration aborted: " + cal.abort_reason);
    }
}

void Pipeline::step_link() {
    ensure_corpus();
    auto client = make_client();
    const auto aggregate = config_.fom_use_max ? FomAggregate::Max : FomAggregate::Min;

    // Queries deduplicated per citing record, in corpus order.
    struct Pending {
        std::string citing;
        const RawReference* ref;
    };
    std::vector<Pending> pending;
    auto queue_refs = [&](const std::string& citing, const std::vector<RawReference>& refs,
                          bool journal_side) {
        std::unordered_set<std::string> seen;
        for (const auto& ref : refs) {
            if (ref.embedded_doi) continue;
            if (journal_side && ref.embedded_patent) continue;
            if (!seen.insert(ref.text).second) continue;
            pending.push_back({citing, &ref});
        }
    };
    for (const auto& rec : corpus_.journals()) queue_refs(rec.id.value, rec.raw_refs, true);
    for (const auto& rec : corpus_.patents()) queue_refs(rec.id.value, rec.npl_refs, false);

    std::vector<Resolution> resolutions(pending.size());
    parallel_for(pending.size(), config_.jobs, [&](std::size_t i) {
        resolutions[i] =
            resolve_reference(*pending[i].ref, *client, config_.threshold, aggregate);
        resolutions[i].citing = pending[i].citing;
    });

    write_artifact("link", "resolutions.jsonl", resolutions_to_jsonl(resolutions));
}

void Pipeline::step_graph() {
    graph_.reset();
    ensure_graph();

    json j;
    j["nodes"] = graph_->node_count();
    j["edges"] = graph_->edge_count();
    j["duplicates_collapsed"] = graph_stats_.duplicates_collapsed;
    j["self_loops_dropped"] = graph_stats_.self_loops_dropped;
    j["unresolved_refs"] = graph_stats_.unresolved_refs;
    j["unknown_citing"] = graph_stats_.unknown_citing;
    j["warnings"] = graph_stats_.warnings;
    std::uint64_t kinds[4] = {0, 0, 0, 0};
    for (std::size_t n = 0; n < graph_->node_count(); ++n) {
        for (const auto& e : graph_->out(static_cast<CitationGraph::Node>(n))) {
            ++kinds[static_cast<int>(e.kind)];
        }
    }
    j["edges_by_kind"] = {{"paper_cites_paper", kinds[0]},
                          {"patent_cites_patent", kinds[1]},
                          {"patent_cites_paper", kinds[2]},
                          {"paper_cites_patent", kinds[3]}};
    j["counting"] = "deduplicated (src,dst,kind) edges per citing record";
    write_artifact("graph", "graph_summary.json", j.dump(2) + "\n");

    CsvWriter w;
    w.row({"id", "kind", "unresolved"});
    std::vector<std::pair<std::string, std::uint32_t>> rows;
    for (std::size_t n = 0; n < graph_->node_count(); ++n) {
        const auto count = graph_->unresolved_of(static_cast<CitationGraph::Node>(n));
        if (count == 0) continue;
        const auto& id = graph_->id_of(static_cast<CitationGraph::Node>(n));
        rows.emplace_back((id.kind == PubKind::Journal ? "journal:" : "patent:") + id.value,
                          count);
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& [id, count] : rows) {
        const auto colon = id.find(':');
        w.row({CsvWriter::cell(id.substr(colon + 1)), id.substr(0, colon),
               CsvWriter::cell(static_cast<long long>(count))});
    }
    write_artifact("graph", "unresolved.csv", w.str());
}

void Pipeline::step_bowtie() {
    ensure_graph();
    json summary;
    for (const Side side : {Side::Science, Side::Technology}) {
        const std::string name = focal(side);
        const auto report = bowtie(*graph_, corpus_, registry_, name);
        write_artifact("bowtie", "bowtie_" + name + ".json",
                       bowtie_json(report).dump(2) + "\n");
        write_artifact("bowtie", "bowtie_" + name + ".csv", bowtie_csv(report));

        const auto cd = cross_domain(*graph_, corpus_, registry_, name);
        json cj;
        cj["focal"] = cd.focal;
        cj["edges_total"] = cd.edges_total;
        cj["cited_breakdown"] = label_counts_json(cd.cited_breakdown);
        cj["distinct_endpoints"] = label_counts_json(cd.distinct_endpoints);
        write_artifact("bowtie", "cross_domain_" + name + ".json", cj.dump(2) + "\n");

        CsvWriter ratios;
        ratios.row({"focal", "label", "citations_from", "references_into", "ratio"});
        for (std::size_t i = 0; i < report.cites_breakdown.size(); ++i) {
            const auto& cites = report.cites_breakdown[i];
            const auto& refs = report.refs_breakdown[i];
            std::optional<double> ratio;
            if (refs.count > 0) {
                ratio = static_cast<double>(cites.count) / static_cast<double>(refs.count);
            }
            ratios.row({CsvWriter::cell(name), CsvWriter::cell(cites.label),
                        CsvWriter::cell(static_cast<long long>(cites.count)),
                        CsvWriter::cell(static_cast<long long>(refs.count)),
                        CsvWriter::cell(ratio)});
        }
        write_artifact("bowtie", "directional_ratios_" + name + ".csv", ratios.str());

        summary[name] = {{"n_pubs", report.n_pubs},
                         {"refs_total", report.refs_total},
                         {"cites_total", report.cites_total}};
    }
    const auto sci = bowtie(*graph_, corpus_, registry_, focal(Side::Science));
    const auto tech = bowtie(*graph_, corpus_, registry_, focal(Side::Technology));
    summary["patents_per_paper"] =
        sci.n_pubs == 0 ? json(nullptr)
                        : json(static_cast<double>(tech.n_pubs) /
                               static_cast<double>(sci.n_pubs));
    write_artifact("bowtie", "summary.json", summary.dump(2) + "\n");
}

void Pipeline::step_temporal() {
    ensure_graph();
    std::string csv = series_csv_header();
    for (const Side side : {Side::Science, Side::Technology}) {
        const std::string name = focal(side);
        for (const auto metric : {YearlyMetric::Pubs, YearlyMetric::AvgRefs,
                                  YearlyMetric::AvgCites, YearlyMetric::AvgCrossRefs}) {
            append_series_csv(csv, yearly_series(*graph_, corpus_, registry_, metric, name,
                                                 config_.window));
        }
        for (const auto comp : {ComponentSide::Refs, ComponentSide::Citations,
                                ComponentSide::CrossRefs}) {
            for (const auto& series :
                 component_series(*graph_, corpus_, registry_, name, comp, config_.window)) {
                append_series_csv(csv, series);
            }
        }
    }
    write_artifact("temporal", "series.csv", csv);

    std::string profiles_csv = series_csv_header();
    json diagnostics;
    for (const Side side : {Side::Science, Side::Technology}) {
        for (const auto& collection : registry_.side(side)) {
            const auto profile = citation_profile(*graph_, corpus_, registry_,
                                                  collection.name, config_.max_lag);
            append_profile_csv(profiles_csv, profile);
            diagnostics[collection.name] = {
                {"publications", profile.publications},
                {"negative_lag_refs", profile.negative_lag_refs},
                {"undated_refs", profile.undated_refs}};
        }
    }
    write_artifact("temporal", "profiles.csv", profiles_csv);
    write_artifact("temporal", "profile_diagnostics.json", diagnostics.dump(2) + "\n");
}

void Pipeline::step_simulate() {
    ensure_graph();
    json models;
    std::string forecast_csv = series_csv_header();
    std::map<Side, std::map<std::string, ForecastSeries>> forecasts;
    for (const Side side : {Side::Science, Side::Technology}) {
        for (const auto& collection : registry_.side(side)) {
            const auto pubs = yearly_series(*graph_, corpus_, registry_, YearlyMetric::Pubs,
                                            collection.name, config_.window);
            try {
                const auto model = fit_growth(pubs, config_.window);
                auto forecast = extrapolate(model, config_.horizon);
                forecast.collection = collection.name;
                models[collection.name] = {{"slope", model.slope},
                                           {"intercept", model.intercept()},
                                           {"residual_variance", model.residual_variance},
                                           {"n", model.n}};
                BandedYearlySeries banded;
                const YearWindow horizon_window{config_.window.end + 1,
                                                config_.window.end + config_.horizon};
                banded.point = YearlySeries(collection.name, "forecast_pubs", horizon_window);
                banded.low = YearlySeries(collection.name, "forecast_pubs_low", horizon_window);
                banded.high = YearlySeries(collection.name, "forecast_pubs_high", horizon_window);
                for (const auto& p : forecast.points) {
                    banded.point.set(p.year, p.point);
                    banded.low.set(p.year, p.low);
                    banded.high.set(p.year, p.high);
                }
                append_banded_csv(forecast_csv, banded);
                forecasts[side][collection.name] = std::move(forecast);
            } catch (const DataError& e) {
                models[collection.name] = {{"error", e.what()}};
            }
        }
    }
    write_artifact("simulate", "growth_models.json", models.dump(2) + "\n");
    write_artifact("simulate", "forecast.csv", forecast_csv);

    CsvWriter mixes;
    mixes.row({"side", "citing", "publications", "avg_refs", "target", "q"});
    std::string expected_csv = series_csv_header();
    std::string bands_csv = series_csv_header();
    for (const Side side : {Side::Science, Side::Technology}) {
        const auto mix = reference_mix(*graph_, corpus_, registry_, side, config_.window,
                                       config_.per_year_refs);
        for (const auto& row : mix.rows) {
            for (const auto& [target, q] : row.proportions) {
                mixes.row({side == Side::Science ? "science" : "technology",
                           CsvWriter::cell(row.citing),
                           CsvWriter::cell(static_cast<long long>(row.publications)),
                           CsvWriter::cell(row.avg_refs), CsvWriter::cell(target),
                           CsvWriter::cell(q)});
            }
        }

        std::map<std::string, CitationProfile> profiles;
        for (const auto& collection : registry_.side(side)) {
            profiles.emplace(collection.name,
                             citation_profile(*graph_, corpus_, registry_, collection.name,
                                              config_.max_lag));
        }
        const auto counts = collection_year_counts(corpus_, registry_, side, config_.window);
        const std::string name = focal(side);
        const auto expected = expected_citations(counts, mix, profiles, name, config_.window,
                                                 config_.max_lag);
        append_series_csv(expected_csv, expected);

        // Future bands need forecasts for every contributing collection.
        bool have_forecasts = true;
        for (const auto& row : mix.rows) {
            if (row.q(name) > 0.0 && !forecasts[side].contains(row.citing)) {
                have_forecasts = false;
            }
        }
        if (have_forecasts) {
            FutureBandsInput input;
            input.observed_counts = counts;
            input.forecasts = forecasts[side];
            input.profiles = profiles;
            input.mix = mix;
            input.actual =
                in_collection_citations(*graph_, corpus_, registry_, name, config_.window);
            input.target = name;
            input.window = config_.window;
            input.horizon = config_.horizon;
            input.max_lag = config_.max_lag;
            append_banded_csv(bands_csv, future_citation_bands(input));
        }
    }
    write_artifact("simulate", "mixes.csv", mixes.str());
    write_artifact("simulate", "expected.csv", expected_csv);
    write_artifact("simulate", "future_bands.csv", bands_csv);
}

void Pipeline::step_interest() {
    ensure_graph();
    std::string csv = series_csv_header();
    json summary;
    for (const Side side : {Side::Science, Side::Technology}) {
        const std::string name = focal(side);
        const auto mix = reference_mix(*graph_, corpus_, registry_, side, config_.window,
                                       config_.per_year_refs);
        std::map<std::string, CitationProfile> profiles;
        for (const auto& collection : registry_.side(side)) {
            profiles.emplace(collection.name,
                             citation_profile(*graph_, corpus_, registry_, collection.name,
                                              config_.max_lag));
        }
        const auto counts = collection_year_counts(corpus_, registry_, side, config_.window);
        const auto expected = expected_citations(counts, mix, profiles, name, config_.window,
                                                 config_.max_lag);
        const auto actual =
            in_collection_citations(*graph_, corpus_, registry_, name, config_.window);
        const auto interest = interest_ratio(actual, expected);

        append_series_csv(csv, actual);
        append_series_csv(csv, expected);
        YearlySeries ratio(name, "interest_ratio", config_.window);
        std::optional<int> peak_year;
        double peak = -1.0;
        for (const auto& p : interest.points) {
            ratio.set(p.year, p.ratio);
            if (p.ratio && *p.ratio > peak) {
                peak = *p.ratio;
                peak_year = p.year;
            }
        }
        append_series_csv(csv, ratio);
        summary[name]["peak_year"] = peak_year ? json(*peak_year) : json(nullptr);
    }
    write_artifact("interest", "interest.csv", csv);
    write_artifact("interest", "summary.json", summary.dump(2) + "\n");
}

const std::vector<CreditVector>& Pipeline::ensure_credits() {
    if (credits_) return *credits_;
    ensure_graph();
    const std::string name = focal(Side::Science);
    std::vector<const JournalRecord*> members;
    for (const auto& rec : corpus_.journals()) {
        if (registry_.classify(rec.id) == name && !rec.authors.empty()) {
            members.push_back(&rec);
        }
    }
    std::vector<CreditVector> credits(members.size());
    parallel_for(members.size(), config_.jobs, [&](std::size_t i) {
        credits[i] = author_credit(*members[i], *graph_, corpus_);
    });
    credits_ = std::move(credits);
    return *credits_;
}

void Pipeline::step_geo() {
    const auto& credits = ensure_credits();

    // Credit is attributed over the full year span of the corpus, not
    // just the analysis window.
    int y0 = 3000, y1 = 0;
    for (const auto& rec : corpus_.journals()) {
        y0 = std::min(y0, rec.year);
        y1 = std::max(y1, rec.year);
    }
    if (y0 > y1) {
        y0 = config_.window.start;
        y1 = config_.window.end;
    }
    const auto region = region_credit(corpus_, credits, YearWindow{y0, y1});

    CsvWriter w;
    w.row({"region", "year", "credit"});
    for (const auto& [code, years] : region.totals) {
        for (const auto& [year, credit] : years) {
            w.row({CsvWriter::cell(code), CsvWriter::cell(static_cast<long long>(year)),
                   CsvWriter::cell(credit)});
        }
    }
    write_artifact("geo", "credits.csv", w.str());

    json j;
    j["papers_credited"] = region.papers_credited;
    j["total_credit"] = region.total();
    j["unattributed_credit"] = region.total_for("??");
    write_artifact("geo", "summary.json", j.dump(2) + "\n");
}

void Pipeline::step_flows() {
    ensure_graph();
    const auto k = static_cast<std::size_t>(config_.flow_top_k);
    const auto patent = patent_flow(corpus_, registry_, focal(Side::Technology), k);
    const auto journal = journal_flow(corpus_, *graph_, registry_, focal(Side::Science), k);
    auto emit = [&](const FlowMatrix& m, const std::string& stem) {
        CsvWriter w;
        w.row({"from_region", "to_region", "count", "fraction"});
        for (std::size_t i = 0; i < m.regions.size(); ++i) {
            for (std::size_t j = 0; j < m.regions.size(); ++j) {
                w.row({CsvWriter::cell(m.regions[i]), CsvWriter::cell(m.regions[j]),
                       CsvWriter::cell(m.counts[i][j]), CsvWriter::cell(m.fractions[i][j])});
            }
        }
        write_artifact("flows", stem + ".csv", w.str());
        json nodes;
        for (std::size_t i = 0; i < m.regions.size(); ++i) {
            nodes[m.regions[i]] = m.node_sizes[i];
        }
        json j;
        j["node_sizes"] = nodes;
        j["excluded_weight"] = m.excluded_weight;
        write_artifact("flows", stem + "_nodes.json", j.dump(2) + "\n");
    };
    emit(patent, "patent_flow");
    emit(journal, "journal_flow");
}

void Pipeline::step_ranks() {
    ensure_graph();
    const auto& credits = ensure_credits();
    int y0 = 3000, y1 = 0;
    for (const auto& rec : corpus_.journals()) {
        y0 = std::min(y0, rec.year);
        y1 = std::max(y1, rec.year);
    }
    for (const auto& rec : corpus_.patents()) {
        y0 = std::min(y0, rec.year);
        y1 = std::max(y1, rec.year);
    }
    if (y0 > y1) {
        y0 = config_.window.start;
        y1 = config_.window.end;
    }

    const auto region = region_credit(corpus_, credits, YearWindow{y0, y1});
    std::map<std::string, std::map<int, double>> journal_scores;
    for (const auto& [code, years] : region.totals) {
        if (code == "??") continue;
        journal_scores[code] = years;
    }
    auto emit_ranks = [&](const RankTable& table, const std::string& name) {
        CsvWriter w;
        w.row({"year", "rank", "region", "score"});
        for (const auto& [year, rows] : table.rows) {
            for (std::size_t i = 0; i < rows.size(); ++i) {
                w.row({CsvWriter::cell(static_cast<long long>(year)),
                       CsvWriter::cell(static_cast<long long>(i + 1)),
                       CsvWriter::cell(rows[i].first), CsvWriter::cell(rows[i].second)});
            }
        }
        write_artifact("ranks", name, w.str());
    };
    emit_ranks(rank_table(journal_scores, static_cast<std::size_t>(config_.top_k)),
               "journal_ranks.csv");

    const std::string tech_name = focal(Side::Technology);
    std::map<std::string, std::map<int, double>> patent_scores;
    for (const auto& rec : corpus_.patents()) {
        if (registry_.classify(rec.id) != tech_name) continue;
        patent_scores[rec.region][rec.year] += 1.0;
    }
    emit_ranks(rank_table(patent_scores, static_cast<std::size_t>(config_.top_k)),
               "patent_ranks.csv");

    const auto table = language_table(corpus_, registry_, tech_name);
    CsvWriter w;
    std::vector<std::string> header{"office"};
    for (const auto& lang : table.languages) header.push_back(CsvWriter::cell(lang));
    w.row(header);
    for (std::size_t i = 0; i < table.regions.size(); ++i) {
        std::vector<std::string> row{CsvWriter::cell(table.regions[i])};
        for (std::size_t j = 0; j < table.languages.size(); ++j) {
            row.push_back(table.counts[i][j] == 0
                              ? "-"
                              : CsvWriter::cell(static_cast<long long>(table.counts[i][j])));
        }
        w.row(row);
    }
    write_artifact("ranks", "language_table.csv", w.str());
}

void Pipeline::step_audit_overlap() {
    ensure_graph();
    std::size_t sample = config_.overlap_sample_size;
    const auto report = overlap_audit(*graph_, corpus_, registry_, sample, config_.seed);

    json j;
    j["focal"] = report.focal;
    j["patent_other"] = report.patent_other;
    j["science_other"] = report.science_other;
    j["seed"] = report.seed;
    j["sample_size_requested"] = report.sample_size_requested;
    j["sample_size"] = report.sample_size;
    j["n_citing_other_tech"] = report.n_citing_other_tech;
    j["n_with_journal_refs"] = report.n_with_journal_refs;
    j["n_with_science_refs"] = report.n_with_science_refs;
    j["n_no_overlap"] = report.n_no_overlap;
    j["n_with_overlap"] = report.n_with_overlap;
    j["overlap_mean"] = report.overlap_mean ? json(*report.overlap_mean) : json(nullptr);
    j["overlap_stddev"] =
        report.overlap_stddev ? json(*report.overlap_stddev) : json(nullptr);
    j["overlap_stddev_kind"] = "population";
    j["fractions"] = report.overlap_fractions;
    write_artifact("audit-overlap", "overlap_audit.json", j.dump(2) + "\n");
}

void Pipeline::step_audit_funding() {
    ensure_corpus();
    const std::string name = focal(Side::Science);
    std::vector<JournalRecord> members;
    for (const auto& rec : corpus_.journals()) {
        if (registry_.classify(rec.id) == name) members.push_back(rec);
    }
    const auto audit = funding_audit(members);
    json j;
    j["collection"] = name;
    j["papers_total"] = audit.papers_total;
    j["papers_without_funding_info"] = audit.papers_without_funding_info;
    j["funded_authors"] = audit.funded_authors;
    j["unfunded_authors"] = audit.unfunded_authors;
    j["papers_by_unfunded_authors"] = audit.papers_by_unfunded_authors;
    write_artifact("audit-funding", "funding.json", j.dump(2) + "\n");
}

void Pipeline::run_step(const std::string& name) {
    const auto start = std::chrono::steady_clock::now();
    if (name == "ingest") {
        step_ingest();
    } else if (name == "calibrate") {
        step_calibrate();
    } else if (name == "link") {
        step_link();
    } else if (name == "graph") {
        step_graph();
    } else if (name == "bowtie") {
        step_bowtie();
    } else if (name == "temporal") {
        step_temporal();
    } else if (name == "simulate") {
        step_simulate();
    } else if (name == "interest") {
        step_interest();
    } else if (name == "geo") {
        step_geo();
    } else if (name == "flows") {
        step_flows();
    } else if (name == "ranks") {
        step_ranks();
    } else if (name == "audit-overlap") {
        step_audit_overlap();
    } else if (name == "audit-funding") {
        step_audit_funding();
    } else {
        throw ConfigError("unknown subcommand: " + name);
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - start);
    manifest_.step_millis.emplace_back(name, elapsed.count());
}

void Pipeline::run(const std::string& subcommand) {
    if (subcommand == "all") {
        for (const auto& step : pipeline_subcommands()) {
            if (step == "all") continue;
            if (step == "calibrate" && !config_.calibration_sample) continue;
            run_step(step);
        }
    } else {
        run_step(subcommand);
    }
    atomic_write_file(config_.out_dir / "manifest.json", manifest_.to_json());
}

}  // namespace citegraph
