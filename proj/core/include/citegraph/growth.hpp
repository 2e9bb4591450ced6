#pragma once

#include "citegraph/series.hpp"

namespace citegraph {

// Least-squares fit of ln(count) against year, with enough sufficient
// statistics to form prediction intervals.
struct GrowthModel {
    int n = 0;
    double mean_year = 0.0;
    double mean_log = 0.0;
    double slope = 0.0;              // per-year log growth rate
    double sxx = 0.0;                // sum of squared centered years
    double residual_variance = 0.0;  // SSE / (n - 2)
    YearWindow fit_window;

    double intercept() const { return mean_log - slope * mean_year; }
    double log_prediction(int year) const {
        return mean_log + slope * (static_cast<double>(year) - mean_year);
    }
};

// Requires >= 3 in-window years, all with positive counts; a zero or
// null count raises "log of zero".
GrowthModel fit_growth(const YearlySeries& pubs, YearWindow fit_window);

struct ForecastPoint {
    int year = 0;
    double point = 0.0;
    double low = 0.0;
    double high = 0.0;  // 95% prediction interval, exponentiated
};

struct ForecastSeries {
    std::string collection;
    std::vector<ForecastPoint> points;

    const ForecastPoint* at(int year) const {
        for (const auto& p : points) {
            if (p.year == year) return &p;
        }
        return nullptr;
    }
};

// Forecasts the `horizon` years following the fit window. Prediction
// intervals use the t distribution with n-2 degrees of freedom and the
// usual new-observation variance term.
ForecastSeries extrapolate(const GrowthModel& model, int horizon);

}  // namespace citegraph
