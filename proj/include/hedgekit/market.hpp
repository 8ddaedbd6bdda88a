#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hedgekit/sentiment.hpp"

namespace hedgekit {

struct PriceSeries {
    std::vector<int> days;      // strictly increasing trading-day indices
    std::vector<double> prices; // positive, same length as days

    std::size_t size() const { return days.size(); }
    void validate() const;  // throws DataError
};

/// Seeded market generator. Sentiment follows an AR(1) around 0.5 and leads
/// returns by one day, so sentiment-following policies have genuine signal.
struct SyntheticConfig {
    int n_days = 504;
    double mu = 0.05;        // annualized drift
    double sigma = 0.20;     // annualized volatility, > 0
    double kappa = 0.02;     // sentiment-to-return coupling per day
    double phi = 0.9;        // AR(1) persistence, in [0,1)
    double sigma_s = 0.05;   // sentiment shock scale, >= 0
    int days_per_year = 252; // converts mu/sigma to daily scale
    std::uint64_t seed = 42;

    void validate() const;  // throws InvalidConfig

    bool operator==(const SyntheticConfig&) const = default;
};

struct SyntheticMarket {
    PriceSeries prices;
    std::vector<SentimentIndexPoint> sentiment;  // one point per day
};

// r_t = p_t / p_{t-1} - 1
std::vector<double> simple_returns(const PriceSeries& series);

// Recurrences (d = days_per_year, prices compound from 100):
//   s[t+1] = clip(0.5 + phi * (s[t] - 0.5) + sigma_s * eta_t, 0, 1), s[0] = 0.5
//   r[t+1] = mu / d + kappa * (s[t] - 0.5) + sigma / sqrt(d) * eps_t
// with eta_t then eps_t drawn per step from one seeded Prng stream.
SyntheticMarket generate_synthetic(const SyntheticConfig& config);

// Turns a generated index series into one observation per day
// (source=other, weight=1).
std::vector<SentimentObservation> observations_from_index(
    const std::vector<SentimentIndexPoint>& index);

// Price file: header day,price.
PriceSeries load_price_csv(const std::string& path);
void write_price_csv(const PriceSeries& series, const std::string& path);

}  // namespace hedgekit
