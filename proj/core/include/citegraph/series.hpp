#pragma once

#include <optional>
#include <string>
#include <vector>

namespace citegraph {

struct YearWindow {
    int start = 0;
    int end = 0;  // inclusive

    int span() const { return end - start + 1; }
    bool contains(int year) const { return year >= start && year <= end; }
};

// One metric over a contiguous year window. Null marks years where the
// metric is undefined (e.g. averages over zero publications).
struct YearlySeries {
    std::string collection;
    std::string metric;
    std::string label;  // breakdown label, empty for plain series
    YearWindow window;
    std::vector<std::optional<double>> values;

    explicit YearlySeries() = default;
    YearlySeries(std::string collection_, std::string metric_, YearWindow window_)
        : collection(std::move(collection_)),
          metric(std::move(metric_)),
          window(window_),
          values(static_cast<std::size_t>(window_.span())) {}

    std::optional<double> at(int year) const {
        if (!window.contains(year)) return std::nullopt;
        return values[static_cast<std::size_t>(year - window.start)];
    }
    void set(int year, std::optional<double> v) {
        values[static_cast<std::size_t>(year - window.start)] = v;
    }
};

// Tidy rows: collection,metric,label,year,value,band_low,band_high.
// For citation profiles the year column carries the lag.
std::string series_csv_header();
void append_series_csv(std::string& out, const YearlySeries& series);

struct BandedYearlySeries {
    YearlySeries point;
    YearlySeries low;
    YearlySeries high;
};

void append_banded_csv(std::string& out, const BandedYearlySeries& series);

}  // namespace citegraph
