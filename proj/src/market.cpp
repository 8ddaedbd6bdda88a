#include "hedgekit/market.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "hedgekit/csv.hpp"
#include "hedgekit/errors.hpp"
#include "hedgekit/rng.hpp"

namespace hedgekit {

void PriceSeries::validate() const {
    if (days.size() != prices.size()) throw DataError("price series day/price length mismatch");
    for (std::size_t i = 0; i < prices.size(); ++i) {
        if (!(prices[i] > 0.0)) throw DataError("non-positive price in series");
        if (i > 0 && days[i] <= days[i - 1]) throw DataError("price series days not strictly increasing");
    }
}

void SyntheticConfig::validate() const {
    if (n_days < 2) throw InvalidConfig("synthetic n_days must be >= 2");
    if (!(sigma > 0.0)) throw InvalidConfig("synthetic sigma must be > 0");
    if (phi < 0.0 || phi >= 1.0) throw InvalidConfig("synthetic phi must be in [0,1)");
    if (sigma_s < 0.0) throw InvalidConfig("synthetic sigma_s must be >= 0");
    if (days_per_year < 1) throw InvalidConfig("synthetic days_per_year must be >= 1");
}

std::vector<double> simple_returns(const PriceSeries& series) {
    series.validate();
    if (series.size() < 2) throw TooShort("simple_returns: need at least two prices");
    std::vector<double> out;
    out.reserve(series.size() - 1);
    for (std::size_t i = 1; i < series.size(); ++i)
        out.push_back(series.prices[i] / series.prices[i - 1] - 1.0);
    return out;
}

SyntheticMarket generate_synthetic(const SyntheticConfig& config) {
    config.validate();
    Prng rng(config.seed);

    SyntheticMarket market;
    market.prices.days.reserve(config.n_days);
    market.prices.prices.reserve(config.n_days);
    market.sentiment.reserve(config.n_days);

    const double daily_drift = config.mu / static_cast<double>(config.days_per_year);
    const double daily_vol = config.sigma / std::sqrt(static_cast<double>(config.days_per_year));

    double sentiment = 0.5;
    double price = 100.0;
    market.prices.days.push_back(0);
    market.prices.prices.push_back(price);
    market.sentiment.push_back({0, sentiment, 1});

    for (int t = 0; t + 1 < config.n_days; ++t) {
        const double eta = rng.next_normal();
        const double eps = rng.next_normal();
        const double next_sentiment =
            std::clamp(0.5 + config.phi * (sentiment - 0.5) + config.sigma_s * eta, 0.0, 1.0);
        const double ret = daily_drift + config.kappa * (sentiment - 0.5) + daily_vol * eps;
        price *= 1.0 + ret;
        if (!(price > 0.0))
            throw InvalidConfig("synthetic return below -100%; sigma/kappa too large for daily bars");
        sentiment = next_sentiment;
        market.prices.days.push_back(t + 1);
        market.prices.prices.push_back(price);
        market.sentiment.push_back({t + 1, sentiment, 1});
    }
    return market;
}

std::vector<SentimentObservation> observations_from_index(
    const std::vector<SentimentIndexPoint>& index) {
    std::vector<SentimentObservation> out;
    out.reserve(index.size());
    for (const auto& point : index)
        out.push_back({point.value, 1.0, Source::other, point.day});
    return out;
}

PriceSeries load_price_csv(const std::string& path) {
    const csv::Table table = csv::read_file(path);
    if (table.header != std::vector<std::string>{"day", "price"})
        throw ParseError("expected header day,price in " + path, 1);

    PriceSeries series;
    series.days.reserve(table.rows.size());
    series.prices.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        if (row.fields.size() != 2) throw ParseError("wrong field count", row.line);
        char* end = nullptr;
        const double day = std::strtod(row.fields[0].c_str(), &end);
        if (end == row.fields[0].c_str() || *end != '\0' || day != static_cast<int>(day))
            throw ParseError("bad day value: '" + row.fields[0] + "'", row.line);
        const double price = std::strtod(row.fields[1].c_str(), &end);
        if (end == row.fields[1].c_str() || *end != '\0')
            throw ParseError("bad price value: '" + row.fields[1] + "'", row.line);
        if (!(price > 0.0)) throw NonPositivePrice("price must be > 0", row.line);
        if (!series.days.empty() && static_cast<int>(day) <= series.days.back())
            throw NonMonotoneDays("days must be strictly increasing", row.line);
        series.days.push_back(static_cast<int>(day));
        series.prices.push_back(price);
    }
    return series;
}

void write_price_csv(const PriceSeries& series, const std::string& path) {
    series.validate();
    std::vector<std::vector<std::string>> rows;
    rows.reserve(series.size());
    for (std::size_t i = 0; i < series.size(); ++i)
        rows.push_back({std::to_string(series.days[i]), csv::format_double(series.prices[i])});
    csv::write_file(path, {"day", "price"}, rows);
}

}  // namespace hedgekit
