#include "citegraph/growth.hpp"

#include <cmath>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

#include "citegraph/errors.hpp"

namespace citegraph {

GrowthModel fit_growth(const YearlySeries& pubs, YearWindow fit_window) {
    std::vector<double> years, logs;
    for (int year = fit_window.start; year <= fit_window.end; ++year) {
        const auto v = pubs.at(year);
        if (!v || *v <= 0.0) {
            throw DataError("log of zero: no positive count for year " + std::to_string(year));
        }
        years.push_back(static_cast<double>(year));
        logs.push_back(std::log(*v));
    }
    if (years.size() < 3) throw DataError("growth fit needs at least 3 years");

    GrowthModel m;
    m.n = static_cast<int>(years.size());
    m.fit_window = fit_window;
    for (std::size_t i = 0; i < years.size(); ++i) {
        m.mean_year += years[i];
        m.mean_log += logs[i];
    }
    m.mean_year /= static_cast<double>(m.n);
    m.mean_log /= static_cast<double>(m.n);

    double sxy = 0.0;
    for (std::size_t i = 0; i < years.size(); ++i) {
        const double dx = years[i] - m.mean_year;
        m.sxx += dx * dx;
        sxy += dx * (logs[i] - m.mean_log);
    }
    m.slope = sxy / m.sxx;

    double sse = 0.0;
    for (std::size_t i = 0; i < years.size(); ++i) {
        const double fitted = m.mean_log + m.slope * (years[i] - m.mean_year);
        sse += (logs[i] - fitted) * (logs[i] - fitted);
    }
    m.residual_variance = sse / static_cast<double>(m.n - 2);
    return m;
}

ForecastSeries extrapolate(const GrowthModel& model, int horizon) {
    if (horizon < 0) throw ConfigError("forecast horizon must be non-negative");
    const boost::math::students_t_distribution<double> t_dist(model.n - 2);
    const double t975 = boost::math::quantile(t_dist, 0.975);

    ForecastSeries out;
    out.collection = "";
    for (int k = 1; k <= horizon; ++k) {
        const int year = model.fit_window.end + k;
        const double dx = static_cast<double>(year) - model.mean_year;
        const double log_hat = model.log_prediction(year);
        const double half =
            t975 * std::sqrt(model.residual_variance *
                             (1.0 + 1.0 / static_cast<double>(model.n) + dx * dx / model.sxx));
        ForecastPoint p;
        p.year = year;
        p.point = std::exp(log_hat);
        p.low = std::exp(log_hat - half);
        p.high = std::exp(log_hat + half);
        out.points.push_back(p);
    }
    return out;
}

}  // namespace citegraph
