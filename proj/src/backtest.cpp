#include "hedgekit/backtest.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hedgekit/errors.hpp"
#include "hedgekit/log.hpp"
#include "hedgekit/rng.hpp"

namespace hedgekit {

void BacktestConfig::validate() const {
    if (sentiment_window < 1) throw ConfigError("sentiment_window must be >= 1");
    if (window_days < sentiment_window)
        throw ConfigError("window_days must be >= sentiment_window");
    if (rebalance_every < 1) throw ConfigError("rebalance_every must be >= 1");
    if (cost_rate < 0.0) throw ConfigError("cost_rate must be >= 0");
    if (!(notional > 0.0)) throw ConfigError("notional must be > 0");
    policy.validate();
}

namespace {

struct DailySentiment {
    std::vector<SentimentIndexPoint> rolled;  // one point per price day
    std::vector<bool> carried;                // true when the day had no observations
};

DailySentiment build_daily_sentiment(const PriceSeries& prices,
                                     const std::vector<SentimentObservation>& observations,
                                     const BacktestConfig& config) {
    std::map<int, std::vector<SentimentObservation>> by_day;
    for (const auto& obs : observations) {
        obs.validate();
        by_day[obs.day].push_back(obs);
    }
    std::set<int> price_days(prices.days.begin(), prices.days.end());
    for (const auto& [day, group] : by_day) {
        if (!price_days.count(day))
            throw MisalignedSeries("observation day " + std::to_string(day) +
                                   " has no matching price day");
    }

    DailySentiment out;
    out.carried.reserve(prices.size());
    std::vector<SentimentIndexPoint> daily;
    daily.reserve(prices.size());
    double last_value = config.policy.s_neutral;  // stand-in until the first observed day
    for (int day : prices.days) {
        auto it = by_day.find(day);
        if (it == by_day.end()) {
            daily.push_back({day, last_value, 1});
            out.carried.push_back(true);
        } else {
            SentimentIndexPoint point = aggregate_weighted(it->second);
            last_value = point.value;
            daily.push_back(point);
            out.carried.push_back(false);
        }
    }
    out.rolled = rolling_index(daily, config.sentiment_window);
    return out;
}

HedgeDecision decide(const SentimentIndexPoint& index, double prev_hedge, double delta_s,
                     const PolicyConfig& policy) {
    switch (policy.kind) {
        case PolicyKind::Static: return hedge_static(policy);
        case PolicyKind::Proportional: return hedge_proportional(index.value, policy);
        case PolicyKind::ThresholdDeviation: return hedge_threshold_deviation(index.value, policy);
        case PolicyKind::Incremental: return hedge_incremental(prev_hedge, delta_s, policy);
    }
    return hedge_static(policy);
}

}  // namespace

BacktestRun run_backtest(const PriceSeries& prices,
                         const std::vector<SentimentObservation>& observations,
                         const BacktestConfig& config) {
    config.validate();
    prices.validate();
    if (prices.size() < 2) throw InsufficientData("backtest: need at least two price days");

    const DailySentiment daily = build_daily_sentiment(prices, observations, config);

    const std::size_t max_decisions = prices.size() - 1;
    std::size_t window = static_cast<std::size_t>(config.window_days);
    if (window > max_decisions) {
        log::warn("series supports only " + std::to_string(max_decisions) +
                  " decision days; window_days=" + std::to_string(config.window_days) +
                  " runs the full series");
        window = max_decisions;
    }
    const std::size_t start = prices.size() - 1 - window;

    BacktestRun run;
    run.config = config;
    run.equity.reserve(window + 1);
    run.hedges.reserve(window);
    run.sentiment.reserve(window);

    PortfolioState state;
    state.day = prices.days[start];
    state.hedge_ratio = config.policy.h0;
    state.position_value = config.notional;
    state.cumulative_pnl = 0.0;
    run.equity.push_back({state.day, 0.0});

    for (std::size_t i = 0; i < window; ++i) {
        const std::size_t pos = start + i;
        const SentimentIndexPoint& index = daily.rolled[pos];
        const double delta_s = pos > 0 ? index.value - daily.rolled[pos - 1].value : 0.0;

        HedgeDecision decision{state.hedge_ratio, state.hedge_ratio};
        const bool rebalance_day = i % static_cast<std::size_t>(config.rebalance_every) == 0;
        if (rebalance_day && action_gate(index, config.policy))
            decision = decide(index, state.hedge_ratio, delta_s, config.policy);

        const double day_return = prices.prices[pos + 1] / prices.prices[pos] - 1.0;
        state = portfolio_update(state, decision.ratio, day_return, config.cost_rate);
        state.day = prices.days[pos + 1];  // honor gapped day indices

        run.hedges.push_back({prices.days[pos], decision.ratio, decision.pre_clamp});
        run.sentiment.push_back(index);
        run.equity.push_back({state.day, state.cumulative_pnl});
        if (daily.carried[pos]) ++run.carried_days;
        if (index.n_observations < config.sentiment_window) ++run.warmup_days;
    }
    return run;
}

bool no_lookahead_audit(const PriceSeries& prices,
                        const std::vector<SentimentObservation>& observations,
                        const BacktestConfig& config, const BacktestRun& run, int checks,
                        std::uint64_t seed) {
    if (run.hedges.empty()) return true;
    Prng rng(seed);
    for (int c = 0; c < checks; ++c) {
        const int cutoff = run.hedges[rng.next_u64() % run.hedges.size()].day;
        std::vector<SentimentObservation> truncated;
        for (const auto& obs : observations)
            if (obs.day <= cutoff) truncated.push_back(obs);
        const BacktestRun replay = run_backtest(prices, truncated, config);
        if (replay.hedges.size() != run.hedges.size()) return false;
        for (std::size_t j = 0; j < run.hedges.size(); ++j) {
            if (run.hedges[j].day > cutoff) break;
            if (replay.hedges[j].day != run.hedges[j].day ||
                replay.hedges[j].hedge_ratio != run.hedges[j].hedge_ratio)
                return false;
        }
    }
    return true;
}

}  // namespace hedgekit
