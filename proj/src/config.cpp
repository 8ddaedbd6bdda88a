#include "hedgekit/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "hedgekit/errors.hpp"

namespace hedgekit {

using nlohmann::json;

namespace {

void check_object(const json& value, const std::string& path) {
    if (!value.is_object()) throw ConfigError(path + ": expected an object");
}

void check_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* candidate : allowed)
            if (key == candidate) known = true;
        if (!known) throw ConfigError(path + ": unknown key '" + key + "'");
    }
}

double get_number(const json& obj, const std::string& path, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    const json& value = obj.at(key);
    if (!value.is_number()) throw ConfigError(path + "." + key + ": expected a number");
    return value.get<double>();
}

int get_int(const json& obj, const std::string& path, const char* key, int fallback) {
    if (!obj.contains(key)) return fallback;
    const json& value = obj.at(key);
    if (!value.is_number_integer()) throw ConfigError(path + "." + key + ": expected an integer");
    return value.get<int>();
}

std::uint64_t get_u64(const json& obj, const std::string& path, const char* key,
                      std::uint64_t fallback) {
    if (!obj.contains(key)) return fallback;
    const json& value = obj.at(key);
    const bool ok = value.is_number_unsigned() ||
                    (value.is_number_integer() && value.get<std::int64_t>() >= 0);
    if (!ok) throw ConfigError(path + "." + key + ": expected a non-negative integer");
    return value.get<std::uint64_t>();
}

bool get_bool(const json& obj, const std::string& path, const char* key, bool fallback) {
    if (!obj.contains(key)) return fallback;
    const json& value = obj.at(key);
    if (!value.is_boolean()) throw ConfigError(path + "." + key + ": expected a boolean");
    return value.get<bool>();
}

std::string get_string(const json& obj, const std::string& path, const char* key,
                       const std::string& fallback) {
    if (!obj.contains(key)) return fallback;
    const json& value = obj.at(key);
    if (!value.is_string()) throw ConfigError(path + "." + key + ": expected a string");
    return value.get<std::string>();
}

std::optional<std::string> get_opt_string(const json& obj, const std::string& path,
                                          const char* key) {
    if (!obj.contains(key)) return std::nullopt;
    const json& value = obj.at(key);
    if (!value.is_string()) throw ConfigError(path + "." + key + ": expected a string");
    return value.get<std::string>();
}

std::vector<double> get_number_list(const json& obj, const std::string& path, const char* key) {
    if (!obj.contains(key)) return {};
    const json& value = obj.at(key);
    if (!value.is_array() || value.empty())
        throw ConfigError(path + "." + key + ": expected a non-empty array of numbers");
    std::vector<double> out;
    out.reserve(value.size());
    for (const auto& entry : value) {
        if (!entry.is_number()) throw ConfigError(path + "." + key + ": expected numbers");
        out.push_back(entry.get<double>());
    }
    return out;
}

MarketSection parse_market(const json& obj) {
    check_object(obj, "market");
    check_keys(obj, "market", {"csv", "synthetic"});
    MarketSection market;
    market.csv = get_opt_string(obj, "market", "csv");
    if (obj.contains("synthetic")) {
        const json& syn = obj.at("synthetic");
        check_object(syn, "market.synthetic");
        check_keys(syn, "market.synthetic",
                   {"n_days", "mu", "sigma", "kappa", "phi", "sigma_s", "days_per_year", "seed"});
        SyntheticConfig config;
        config.n_days = get_int(syn, "market.synthetic", "n_days", config.n_days);
        config.mu = get_number(syn, "market.synthetic", "mu", config.mu);
        config.sigma = get_number(syn, "market.synthetic", "sigma", config.sigma);
        config.kappa = get_number(syn, "market.synthetic", "kappa", config.kappa);
        config.phi = get_number(syn, "market.synthetic", "phi", config.phi);
        config.sigma_s = get_number(syn, "market.synthetic", "sigma_s", config.sigma_s);
        config.days_per_year = get_int(syn, "market.synthetic", "days_per_year", config.days_per_year);
        config.seed = get_u64(syn, "market.synthetic", "seed", config.seed);
        market.synthetic = config;
    }
    if (market.csv && market.synthetic)
        throw ConfigError("market: csv and synthetic are mutually exclusive");
    if (!market.csv && !market.synthetic)
        throw ConfigError("market: one of csv or synthetic is required");
    return market;
}

ProviderSection parse_provider(const json& obj) {
    check_object(obj, "sentiment.provider");
    check_keys(obj, "sentiment.provider",
               {"kind", "lexicon", "endpoint", "timeout_ms", "retries", "fallback", "cache"});
    ProviderSection provider;
    provider.kind = get_string(obj, "sentiment.provider", "kind", provider.kind);
    if (provider.kind != "lexicon" && provider.kind != "remote")
        throw ConfigError("sentiment.provider.kind: expected lexicon or remote");
    provider.lexicon = get_opt_string(obj, "sentiment.provider", "lexicon");
    provider.endpoint = get_string(obj, "sentiment.provider", "endpoint", provider.endpoint);
    provider.timeout_ms = get_int(obj, "sentiment.provider", "timeout_ms", provider.timeout_ms);
    provider.retries = get_int(obj, "sentiment.provider", "retries", provider.retries);
    provider.fallback = get_bool(obj, "sentiment.provider", "fallback", provider.fallback);
    provider.cache = get_opt_string(obj, "sentiment.provider", "cache");
    if (provider.timeout_ms <= 0) throw ConfigError("sentiment.provider.timeout_ms: must be > 0");
    if (provider.retries < 0) throw ConfigError("sentiment.provider.retries: must be >= 0");
    return provider;
}

SourceWeights parse_source_weights(const json& obj) {
    check_object(obj, "sentiment.source_weights");
    SourceWeights weights = SourceWeights::defaults();
    for (const auto& [key, value] : obj.items()) {
        if (!value.is_number())
            throw ConfigError("sentiment.source_weights." + key + ": expected a number");
        try {
            weights.weights[source_from_string(key)] = value.get<double>();
        } catch (const DataError& e) {
            throw ConfigError(std::string("sentiment.source_weights: ") + e.what());
        }
    }
    weights.validate();
    return weights;
}

// sentiment.dead_band is an accepted alias for policy.dead_band; giving both
// is an error.
SentimentSection parse_sentiment(const json& obj, std::optional<double>& dead_band) {
    check_object(obj, "sentiment");
    check_keys(obj, "sentiment",
               {"csv", "texts", "sentiment_window", "dead_band", "provider", "source_weights"});
    SentimentSection sentiment;
    sentiment.csv = get_opt_string(obj, "sentiment", "csv");
    sentiment.texts = get_opt_string(obj, "sentiment", "texts");
    sentiment.sentiment_window =
        get_int(obj, "sentiment", "sentiment_window", sentiment.sentiment_window);
    if (obj.contains("dead_band")) dead_band = get_number(obj, "sentiment", "dead_band", 0.0);
    if (obj.contains("provider")) sentiment.provider = parse_provider(obj.at("provider"));
    if (obj.contains("source_weights"))
        sentiment.source_weights = parse_source_weights(obj.at("source_weights"));
    return sentiment;
}

PolicyConfig parse_policy(const json& obj, bool dead_band_already_set) {
    check_object(obj, "policy");
    check_keys(obj, "policy",
               {"kind", "h0", "alpha", "beta", "s_neutral", "dead_band", "clamp"});
    PolicyConfig policy;
    if (obj.contains("kind")) policy.kind = policy_kind_from_string(get_string(obj, "policy", "kind", ""));
    policy.h0 = get_number(obj, "policy", "h0", policy.h0);
    policy.alpha = get_number(obj, "policy", "alpha", policy.alpha);
    policy.beta = get_number(obj, "policy", "beta", policy.beta);
    policy.s_neutral = get_number(obj, "policy", "s_neutral", policy.s_neutral);
    if (obj.contains("dead_band")) {
        if (dead_band_already_set)
            throw ConfigError("dead_band given in both sentiment and policy sections");
        policy.dead_band = get_number(obj, "policy", "dead_band", policy.dead_band);
    }
    if (obj.contains("clamp")) {
        const json& clamp = obj.at("clamp");
        if (!clamp.is_array() || clamp.size() != 2 || !clamp[0].is_number() || !clamp[1].is_number())
            throw ConfigError("policy.clamp: expected [lo, hi]");
        policy.clamp_lo = clamp[0].get<double>();
        policy.clamp_hi = clamp[1].get<double>();
    }
    return policy;
}

}  // namespace

BacktestConfig RunConfig::backtest_config() const {
    BacktestConfig config;
    config.window_days = backtest.window_days;
    config.sentiment_window = sentiment.sentiment_window;
    config.rebalance_every = backtest.rebalance_every;
    config.cost_rate = backtest.cost_rate;
    config.notional = backtest.notional;
    config.policy = policy;
    return config;
}

void RunConfig::validate() const {
    backtest_config().validate();
    if (market.synthetic) market.synthetic->validate();
    if (!market.csv && !market.synthetic)
        throw ConfigError("market: one of csv or synthetic is required");
    sentiment.source_weights.validate();
    if (trials.n_seeds < 1) throw ConfigError("trials.n_seeds must be >= 1");
    if (trials.n_seeds > 1 && !market.synthetic)
        throw ConfigError("trials with n_seeds > 1 require a synthetic market");
}

RunConfig parse_config(const std::string& json_text) {
    json root = json::parse(json_text, nullptr, false);
    if (root.is_discarded()) throw ConfigError("config is not valid JSON");
    check_object(root, "config");
    check_keys(root, "config", {"market", "sentiment", "policy", "backtest", "trials", "sweep"});
    if (!root.contains("market")) throw ConfigError("config: market section is required");

    RunConfig config;
    config.market = parse_market(root.at("market"));

    std::optional<double> sentiment_dead_band;
    if (root.contains("sentiment"))
        config.sentiment = parse_sentiment(root.at("sentiment"), sentiment_dead_band);
    if (root.contains("policy"))
        config.policy = parse_policy(root.at("policy"), sentiment_dead_band.has_value());
    if (sentiment_dead_band) config.policy.dead_band = *sentiment_dead_band;

    if (root.contains("backtest")) {
        const json& bt = root.at("backtest");
        check_object(bt, "backtest");
        check_keys(bt, "backtest",
                   {"window_days", "rebalance_every", "cost_rate", "notional", "rf_annual",
                    "annualization_days"});
        config.backtest.window_days = get_int(bt, "backtest", "window_days", config.backtest.window_days);
        config.backtest.rebalance_every =
            get_int(bt, "backtest", "rebalance_every", config.backtest.rebalance_every);
        config.backtest.cost_rate = get_number(bt, "backtest", "cost_rate", config.backtest.cost_rate);
        config.backtest.notional = get_number(bt, "backtest", "notional", config.backtest.notional);
        config.backtest.rf_annual = get_number(bt, "backtest", "rf_annual", config.backtest.rf_annual);
        config.backtest.annualization_days =
            get_int(bt, "backtest", "annualization_days", config.backtest.annualization_days);
        if (config.backtest.annualization_days < 1)
            throw ConfigError("backtest.annualization_days must be >= 1");
    }
    if (root.contains("trials")) {
        const json& trials = root.at("trials");
        check_object(trials, "trials");
        check_keys(trials, "trials", {"n_seeds", "base_seed"});
        config.trials.n_seeds = get_int(trials, "trials", "n_seeds", config.trials.n_seeds);
        config.trials.base_seed = get_u64(trials, "trials", "base_seed", config.trials.base_seed);
    }
    if (root.contains("sweep")) {
        const json& sweep = root.at("sweep");
        check_object(sweep, "sweep");
        check_keys(sweep, "sweep", {"alpha", "beta", "s_neutral", "dead_band"});
        config.sweep.alpha = get_number_list(sweep, "sweep", "alpha");
        config.sweep.beta = get_number_list(sweep, "sweep", "beta");
        config.sweep.s_neutral = get_number_list(sweep, "sweep", "s_neutral");
        config.sweep.dead_band = get_number_list(sweep, "sweep", "dead_band");
    }

    config.validate();
    return config;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    RunConfig config = parse_config(buf.str());
    if (const char* url = std::getenv("HEDGEKIT_PROVIDER_URL")) {
        config.sentiment.provider.endpoint = url;
    }
    return config;
}

std::string config_to_json_text(const RunConfig& config, int indent) {
    json root;
    if (config.market.csv) root["market"]["csv"] = *config.market.csv;
    if (config.market.synthetic) {
        const SyntheticConfig& syn = *config.market.synthetic;
        json& out = root["market"]["synthetic"];
        out["n_days"] = syn.n_days;
        out["mu"] = syn.mu;
        out["sigma"] = syn.sigma;
        out["kappa"] = syn.kappa;
        out["phi"] = syn.phi;
        out["sigma_s"] = syn.sigma_s;
        out["days_per_year"] = syn.days_per_year;
        out["seed"] = syn.seed;
    }

    json& sentiment = root["sentiment"];
    if (config.sentiment.csv) sentiment["csv"] = *config.sentiment.csv;
    if (config.sentiment.texts) sentiment["texts"] = *config.sentiment.texts;
    sentiment["sentiment_window"] = config.sentiment.sentiment_window;
    json& provider = sentiment["provider"];
    provider["kind"] = config.sentiment.provider.kind;
    if (config.sentiment.provider.lexicon) provider["lexicon"] = *config.sentiment.provider.lexicon;
    provider["endpoint"] = config.sentiment.provider.endpoint;
    provider["timeout_ms"] = config.sentiment.provider.timeout_ms;
    provider["retries"] = config.sentiment.provider.retries;
    provider["fallback"] = config.sentiment.provider.fallback;
    if (config.sentiment.provider.cache) provider["cache"] = *config.sentiment.provider.cache;
    json& weights = sentiment["source_weights"];
    for (const auto& [source, weight] : config.sentiment.source_weights.weights)
        weights[to_string(source)] = weight;

    json& policy = root["policy"];
    policy["kind"] = to_string(config.policy.kind);
    policy["h0"] = config.policy.h0;
    policy["alpha"] = config.policy.alpha;
    policy["beta"] = config.policy.beta;
    policy["s_neutral"] = config.policy.s_neutral;
    policy["dead_band"] = config.policy.dead_band;
    policy["clamp"] = {config.policy.clamp_lo, config.policy.clamp_hi};

    json& backtest = root["backtest"];
    backtest["window_days"] = config.backtest.window_days;
    backtest["rebalance_every"] = config.backtest.rebalance_every;
    backtest["cost_rate"] = config.backtest.cost_rate;
    backtest["notional"] = config.backtest.notional;
    backtest["rf_annual"] = config.backtest.rf_annual;
    backtest["annualization_days"] = config.backtest.annualization_days;

    json& trials = root["trials"];
    trials["n_seeds"] = config.trials.n_seeds;
    trials["base_seed"] = config.trials.base_seed;

    if (!config.sweep.alpha.empty() || !config.sweep.beta.empty() ||
        !config.sweep.s_neutral.empty() || !config.sweep.dead_band.empty()) {
        json& sweep = root["sweep"];
        if (!config.sweep.alpha.empty()) sweep["alpha"] = config.sweep.alpha;
        if (!config.sweep.beta.empty()) sweep["beta"] = config.sweep.beta;
        if (!config.sweep.s_neutral.empty()) sweep["s_neutral"] = config.sweep.s_neutral;
        if (!config.sweep.dead_band.empty()) sweep["dead_band"] = config.sweep.dead_band;
    }

    return root.dump(indent);
}

}  // namespace hedgekit
