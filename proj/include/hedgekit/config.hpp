#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hedgekit/backtest.hpp"
#include "hedgekit/market.hpp"
#include "hedgekit/policy.hpp"
#include "hedgekit/sentiment.hpp"

namespace hedgekit {

struct MarketSection {
    std::optional<std::string> csv;
    std::optional<SyntheticConfig> synthetic;

    bool operator==(const MarketSection&) const = default;
};

struct ProviderSection {
    std::string kind = "lexicon";  // lexicon | remote
    std::optional<std::string> lexicon;  // token,polarity CSV; builtin list when unset
    std::string endpoint;
    int timeout_ms = 5000;
    int retries = 2;
    bool fallback = true;
    std::optional<std::string> cache;

    bool operator==(const ProviderSection&) const = default;
};

struct SentimentSection {
    std::optional<std::string> csv;    // observation file
    std::optional<std::string> texts;  // raw texts for the score command
    int sentiment_window = 5;
    ProviderSection provider;
    SourceWeights source_weights = SourceWeights::defaults();

    bool operator==(const SentimentSection&) const = default;
};

struct BacktestSection {
    int window_days = 250;
    int rebalance_every = 1;
    double cost_rate = 0.0005;
    double notional = 10000.0;
    double rf_annual = 0.0;        // risk-free rate for the Sharpe excess
    int annualization_days = 252;  // metric annualization constant

    bool operator==(const BacktestSection&) const = default;
};

struct TrialsSection {
    int n_seeds = 1;
    std::uint64_t base_seed = 1;

    bool operator==(const TrialsSection&) const = default;
};

struct SweepSection {
    std::vector<double> alpha;  // empty list = hold at the policy value
    std::vector<double> beta;
    std::vector<double> s_neutral;
    std::vector<double> dead_band;

    bool operator==(const SweepSection&) const = default;
};

/// One run configuration file. Unknown keys are a hard error so typos in
/// scientific configs fail loudly instead of silently running defaults.
struct RunConfig {
    MarketSection market;
    SentimentSection sentiment;
    PolicyConfig policy;
    BacktestSection backtest;
    TrialsSection trials;
    SweepSection sweep;

    BacktestConfig backtest_config() const;
    void validate() const;  // throws ConfigError

    bool operator==(const RunConfig&) const = default;
};

// Strict parse of the JSON dialect documented in the README.
RunConfig parse_config(const std::string& json_text);

// parse_config plus the HEDGEKIT_PROVIDER_URL endpoint override.
RunConfig load_config(const std::string& path);

// Full echo, including defaulted values; parse_config round-trips it.
std::string config_to_json_text(const RunConfig& config, int indent = 2);

}  // namespace hedgekit
