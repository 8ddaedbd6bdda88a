#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

#include "hedgekit/config.hpp"
#include "hedgekit/errors.hpp"

using namespace hedgekit;

namespace {

const char* kFullConfig = R"json({
  "market": {
    "synthetic": {"n_days": 504, "mu": 0.05, "sigma": 0.2, "kappa": 0.02,
                  "phi": 0.9, "sigma_s": 0.05, "seed": 42}
  },
  "sentiment": {
    "sentiment_window": 5,
    "provider": {"kind": "lexicon", "timeout_ms": 1000, "retries": 1, "fallback": true},
    "source_weights": {"news": 150, "social": 200, "financial_report": 120, "survey": 90}
  },
  "policy": {
    "kind": "threshold_deviation", "h0": 0.75, "alpha": -0.4, "beta": -0.5,
    "s_neutral": 0.5, "dead_band": 0.0, "clamp": [0.0, 1.0]
  },
  "backtest": {"window_days": 250, "rebalance_every": 1, "cost_rate": 0.0005, "notional": 10000},
  "trials": {"n_seeds": 100, "base_seed": 1}
})json";

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& content) {
        path = std::filesystem::temp_directory_path() /
               ("hedgekit_config_" + std::to_string(std::rand()) + ".json");
        std::ofstream(path) << content;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("full config parses with expected values") {
    const RunConfig config = parse_config(kFullConfig);
    REQUIRE(config.market.synthetic.has_value());
    CHECK(config.market.synthetic->n_days == 504);
    CHECK(config.market.synthetic->seed == 42);
    CHECK(config.sentiment.sentiment_window == 5);
    CHECK(config.policy.kind == PolicyKind::ThresholdDeviation);
    CHECK(config.policy.beta == doctest::Approx(-0.5));
    CHECK(config.backtest.notional == doctest::Approx(10000.0));
    CHECK(config.trials.n_seeds == 100);
    CHECK(config.sentiment.source_weights.weight_for(Source::social) == doctest::Approx(200.0));
}

TEST_CASE("minimal config applies the documented defaults") {
    const RunConfig config = parse_config(R"({"market": {"synthetic": {}}})");
    CHECK(config.backtest.window_days == 250);
    CHECK(config.sentiment.sentiment_window == 5);
    CHECK(config.backtest.rebalance_every == 1);
    CHECK(config.backtest.cost_rate == doctest::Approx(0.0005));
    CHECK(config.backtest.rf_annual == doctest::Approx(0.0));
    CHECK(config.backtest.annualization_days == 252);
    CHECK(config.market.synthetic->days_per_year == 252);
    CHECK(config.policy.h0 == doctest::Approx(0.75));
    CHECK(config.policy.dead_band == doctest::Approx(0.0));
    CHECK(config.sentiment.provider.kind == "lexicon");
    CHECK(config.sentiment.provider.timeout_ms == 5000);
    CHECK(config.sentiment.provider.retries == 2);
    CHECK(config.sentiment.provider.fallback);
    CHECK(config.trials.n_seeds == 1);
}

TEST_CASE("unknown keys are a hard error in every section") {
    CHECK_THROWS_AS(parse_config(R"({"market": {"synthetic": {}}, "extra": 1})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"market": {"synthetic": {"ndays": 10}}})"), ConfigError);
    CHECK_THROWS_AS(
        parse_config(R"({"market": {"synthetic": {}}, "policy": {"kappa": 0.1}})"), ConfigError);
    CHECK_THROWS_AS(
        parse_config(R"({"market": {"synthetic": {}}, "backtest": {"window": 10}})"), ConfigError);
    CHECK_THROWS_AS(
        parse_config(R"({"market": {"synthetic": {}}, "sentiment": {"provider": {"url": "x"}}})"),
        ConfigError);
}

TEST_CASE("market section requires exactly one source") {
    CHECK_THROWS_AS(parse_config(R"({"market": {}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"market": {"csv": "p.csv", "synthetic": {}}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({})"), ConfigError);
}

TEST_CASE("type errors are config errors with the key path") {
    try {
        parse_config(R"({"market": {"synthetic": {"sigma": "high"}}})");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("market.synthetic.sigma") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config(R"({"market": {"synthetic": {"n_days": 1.5}}})"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"market": {"synthetic": {"seed": -4}}})"), ConfigError);
}

TEST_CASE("dead_band may live in sentiment or policy but not both") {
    const RunConfig from_sentiment = parse_config(
        R"({"market": {"synthetic": {}}, "sentiment": {"dead_band": 0.07}})");
    CHECK(from_sentiment.policy.dead_band == doctest::Approx(0.07));
    const RunConfig from_policy =
        parse_config(R"({"market": {"synthetic": {}}, "policy": {"dead_band": 0.03}})");
    CHECK(from_policy.policy.dead_band == doctest::Approx(0.03));
    CHECK_THROWS_AS(parse_config(R"({"market": {"synthetic": {}},
                                     "sentiment": {"dead_band": 0.07},
                                     "policy": {"dead_band": 0.03}})"),
                    ConfigError);
}

TEST_CASE("cross-field invariants are enforced") {
    CHECK_THROWS_AS(parse_config(R"({"market": {"synthetic": {}},
                                     "backtest": {"window_days": 3},
                                     "sentiment": {"sentiment_window": 5}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"market": {"synthetic": {}},
                                     "policy": {"clamp": [0.6, 0.4]}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"market": {"csv": "prices.csv"},
                                     "trials": {"n_seeds": 10}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"market": {"synthetic": {}},
                                     "trials": {"n_seeds": 0}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config(R"({"market": {"synthetic": {}},
                                     "sweep": {"alpha": []}})"),
                    ConfigError);
}

TEST_CASE("config round-trips through its json echo") {
    const RunConfig config = parse_config(kFullConfig);
    const RunConfig reparsed = parse_config(config_to_json_text(config));
    CHECK(reparsed == config);

    RunConfig with_extras = config;
    with_extras.sentiment.csv = "obs.csv";
    with_extras.sweep.beta = {-0.25, -0.5, -0.75};
    with_extras.sentiment.provider.cache = "cache.jsonl";
    const RunConfig reparsed_extras = parse_config(config_to_json_text(with_extras));
    CHECK(reparsed_extras == with_extras);
}

TEST_CASE("invalid json is a config error") {
    CHECK_THROWS_AS(parse_config("not json at all {"), ConfigError);
    CHECK_THROWS_AS(parse_config(R"(["array", "not", "object"])"), ConfigError);
}

TEST_CASE("HEDGEKIT_PROVIDER_URL overrides the configured endpoint") {
    TempFile file(R"({"market": {"synthetic": {}},
                      "sentiment": {"provider": {"kind": "remote", "endpoint": "http://cfg:1"}}})");
    const RunConfig plain = load_config(file.path.string());
    CHECK(plain.sentiment.provider.endpoint == "http://cfg:1");

    setenv("HEDGEKIT_PROVIDER_URL", "http://override:9", 1);
    const RunConfig overridden = load_config(file.path.string());
    unsetenv("HEDGEKIT_PROVIDER_URL");
    CHECK(overridden.sentiment.provider.endpoint == "http://override:9");
}

TEST_CASE("missing config file is a config error") {
    CHECK_THROWS_AS(load_config("/nonexistent/path/config.json"), ConfigError);
}
