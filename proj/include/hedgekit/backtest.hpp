#pragma once

#include <cstdint>
#include <vector>

#include "hedgekit/market.hpp"
#include "hedgekit/policy.hpp"
#include "hedgekit/sentiment.hpp"

namespace hedgekit {

struct BacktestConfig {
    int window_days = 250;      // decision days; longer series use the most recent window
    int sentiment_window = 5;   // rolling aggregation span
    int rebalance_every = 1;    // act on window days 0, k, 2k, ...
    double cost_rate = 0.0005;  // proportional cost per unit of hedge change
    double notional = 10000.0;  // currency units of underlying exposure
    PolicyConfig policy;

    void validate() const;  // throws ConfigError
};

struct EquityPoint {
    int day;
    double cumulative_pnl;
};

struct HedgePoint {
    int day;
    double hedge_ratio;
    double pre_clamp;
};

struct BacktestRun {
    BacktestConfig config;
    std::vector<EquityPoint> equity;               // one more point than decision days; starts at 0
    std::vector<SentimentIndexPoint> sentiment;    // rolling index used at each decision day
    std::vector<HedgePoint> hedges;                // ratio decided at each day
    int carried_days = 0;                          // decision days with no observations
    int warmup_days = 0;                           // decision days on an expanding sentiment window
};

// Walks the window day by day: aggregate the day's observations (weighted),
// roll the sentiment index, gate + apply the policy on rebalance days, then
// settle P&L against the day t -> t+1 return. Decisions use only information
// dated <= t; days without observations carry the last index forward.
BacktestRun run_backtest(const PriceSeries& prices,
                         const std::vector<SentimentObservation>& observations,
                         const BacktestConfig& config);

// Replays the run with all observations dated after a cutoff removed and
// checks the hedge decisions up to the cutoff are unchanged. Spot-checks
// `checks` random cutoff days.
bool no_lookahead_audit(const PriceSeries& prices,
                        const std::vector<SentimentObservation>& observations,
                        const BacktestConfig& config, const BacktestRun& run, int checks = 10,
                        std::uint64_t seed = 0x5EED5EED);

}  // namespace hedgekit
