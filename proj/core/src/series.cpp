#include "citegraph/series.hpp"

#include "citegraph/csv.hpp"

namespace citegraph {

std::string series_csv_header() {
    return "collection,metric,label,year,value,band_low,band_high\n";
}

void append_series_csv(std::string& out, const YearlySeries& series) {
    CsvWriter w;
    for (int year = series.window.start; year <= series.window.end; ++year) {
        w.row({CsvWriter::cell(series.collection), CsvWriter::cell(series.metric),
               CsvWriter::cell(series.label), CsvWriter::cell(static_cast<long long>(year)),
               CsvWriter::cell(series.at(year)), "", ""});
    }
    out += w.str();
}

void append_banded_csv(std::string& out, const BandedYearlySeries& series) {
    CsvWriter w;
    for (int year = series.point.window.start; year <= series.point.window.end; ++year) {
        w.row({CsvWriter::cell(series.point.collection), CsvWriter::cell(series.point.metric),
               CsvWriter::cell(series.point.label),
               CsvWriter::cell(static_cast<long long>(year)),
               CsvWriter::cell(series.point.at(year)), CsvWriter::cell(series.low.at(year)),
               CsvWriter::cell(series.high.at(year))});
    }
    out += w.str();
}

}  // namespace citegraph
