#include <cmath>
#include <vector>

#include "doctest.h"

#include "hedgekit/errors.hpp"
#include "hedgekit/policy.hpp"
#include "hedgekit/rng.hpp"

using namespace hedgekit;

namespace {

PolicyConfig base_config(PolicyKind kind) {
    PolicyConfig config;
    config.kind = kind;
    return config;
}

}  // namespace

TEST_CASE("hedge_static returns h0 regardless of anything") {
    PolicyConfig config = base_config(PolicyKind::Static);
    config.h0 = 0.75;
    for (int day = 0; day < 5; ++day) CHECK(hedge_static(config).ratio == doctest::Approx(0.75));
    config.h0 = 0.0;
    CHECK(hedge_static(config).ratio == doctest::Approx(0.0));
}

TEST_CASE("hedge_proportional examples") {
    PolicyConfig config = base_config(PolicyKind::Proportional);
    config.h0 = 0.5;
    config.alpha = 0.4;
    CHECK(hedge_proportional(0.700893, config).ratio == doctest::Approx(0.780357).epsilon(1e-6));

    config.alpha = 0.0;
    for (double s : {0.0, 0.3, 0.5, 1.0})
        CHECK(hedge_proportional(s, config).ratio == doctest::Approx(0.5));

    config.h0 = 0.9;
    config.alpha = 0.5;
    const HedgeDecision clamped = hedge_proportional(0.9, config);
    CHECK(clamped.ratio == doctest::Approx(1.0));
    CHECK(clamped.pre_clamp == doctest::Approx(1.35));
}

TEST_CASE("hedge_threshold_deviation examples") {
    PolicyConfig config = base_config(PolicyKind::ThresholdDeviation);
    config.h0 = 0.65;
    config.beta = -0.5;
    config.s_neutral = 0.5;
    CHECK(hedge_threshold_deviation(0.5, config).ratio == doctest::Approx(0.65));
    CHECK(hedge_threshold_deviation(0.1, config).ratio == doctest::Approx(0.85));

    config.beta = 0.0;
    for (double s : {0.0, 0.25, 0.5, 0.75, 1.0})
        CHECK(hedge_threshold_deviation(s, config).ratio == hedge_static(config).ratio);
}

TEST_CASE("hedge_incremental examples") {
    PolicyConfig config = base_config(PolicyKind::Incremental);
    config.alpha = -0.4;
    CHECK(hedge_incremental(0.6, 0.0, config).ratio == doctest::Approx(0.6));
    CHECK(hedge_incremental(0.75, 0.25, config).ratio == doctest::Approx(0.65));
}

TEST_CASE("incremental updates telescope while no clamp binds") {
    PolicyConfig config = base_config(PolicyKind::Incremental);
    config.alpha = -0.3;
    config.h0 = 0.5;
    Prng rng(99);
    std::vector<double> sentiment = {0.5};
    for (int i = 0; i < 50; ++i)
        sentiment.push_back(0.35 + 0.3 * rng.next_double());  // stays far from the clamps

    double hedge = config.h0;
    for (std::size_t i = 1; i < sentiment.size(); ++i)
        hedge = hedge_incremental(hedge, sentiment[i] - sentiment[i - 1], config).ratio;
    const double telescoped = config.h0 + config.alpha * (sentiment.back() - sentiment.front());
    CHECK(hedge == doctest::Approx(telescoped).epsilon(1e-12));
}

TEST_CASE("every policy output lands inside the clamp bounds") {
    Prng rng(123);
    for (int trial = 0; trial < 2000; ++trial) {
        PolicyConfig config;
        config.h0 = rng.next_double();
        config.alpha = 4.0 * rng.next_double() - 2.0;
        config.beta = 4.0 * rng.next_double() - 2.0;
        const double s = rng.next_double();
        const double prev = rng.next_double();
        const double delta = 2.0 * rng.next_double() - 1.0;
        for (const HedgeDecision& decision :
             {hedge_proportional(s, config), hedge_threshold_deviation(s, config),
              hedge_incremental(prev, delta, config)}) {
            CHECK(decision.ratio >= config.clamp_lo);
            CHECK(decision.ratio <= config.clamp_hi);
        }
    }
}

TEST_CASE("neutral sentiment is a fixed point of both deviation-style laws") {
    PolicyConfig config;
    config.h0 = 0.7;
    CHECK(hedge_threshold_deviation(config.s_neutral, config).ratio == doctest::Approx(config.h0));
    double hedge = config.h0;
    for (int i = 0; i < 10; ++i) hedge = hedge_incremental(hedge, 0.0, config).ratio;
    CHECK(hedge == doctest::Approx(config.h0));
}

TEST_CASE("threshold deviation is monotone in sentiment, direction set by beta") {
    PolicyConfig config;
    config.h0 = 0.5;
    const std::vector<double> grid = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
    config.beta = -0.5;
    for (std::size_t i = 1; i < grid.size(); ++i)
        CHECK(hedge_threshold_deviation(grid[i], config).ratio <=
              hedge_threshold_deviation(grid[i - 1], config).ratio);
    config.beta = 0.5;
    for (std::size_t i = 1; i < grid.size(); ++i)
        CHECK(hedge_threshold_deviation(grid[i], config).ratio >=
              hedge_threshold_deviation(grid[i - 1], config).ratio);
}

TEST_CASE("action_gate thresholds") {
    PolicyConfig config;
    config.s_neutral = 0.5;
    config.dead_band = 0.0;
    CHECK(action_gate({0, 0.5, 1}, config));  // zero dead band always fires
    config.dead_band = 0.1;
    CHECK_FALSE(action_gate({0, 0.55, 1}, config));
    CHECK(action_gate({0, 0.9, 1}, config));
    config.dead_band = 0.125;  // dyadic, so the boundary is exact
    CHECK(action_gate({0, 0.625, 1}, config));
}

TEST_CASE("portfolio_update examples") {
    SUBCASE("fully hedged book never moves") {
        PortfolioState state{0, 1.0, 10000.0, 0.0};
        for (double ret : {0.05, -0.2, 0.0, 0.13}) {
            state = portfolio_update(state, 1.0, ret, 0.0);
            CHECK(state.cumulative_pnl == doctest::Approx(0.0));
        }
    }
    SUBCASE("half-hedged 2% day") {
        PortfolioState state{0, 0.5, 10000.0, 0.0};
        state = portfolio_update(state, 0.5, 0.02, 0.0);
        CHECK(state.cumulative_pnl == doctest::Approx(100.0));
        CHECK(state.day == 1);
    }
    SUBCASE("rebalance cost is charged on the ratio change") {
        PortfolioState state{0, 0.75, 10000.0, 0.0};
        state = portfolio_update(state, 0.65, 0.0, 0.0005);
        CHECK(state.cumulative_pnl == doctest::Approx(-0.5));
        CHECK(state.hedge_ratio == doctest::Approx(0.65));
    }
}

TEST_CASE("zero-cost full hedge gives identically zero pnl on any path") {
    Prng rng(5150);
    PortfolioState state{0, 1.0, 10000.0, 0.0};
    for (int i = 0; i < 200; ++i) {
        state = portfolio_update(state, 1.0, 0.1 * rng.next_normal(), 0.0);
        CHECK(state.cumulative_pnl == 0.0);
    }
}

TEST_CASE("policy config validation") {
    PolicyConfig config;
    config.clamp_lo = 0.5;
    config.clamp_hi = 0.5;
    CHECK_THROWS_AS(config.validate(), ConfigError);
    config = PolicyConfig{};
    config.h0 = 1.5;
    CHECK_THROWS_AS(config.validate(), ConfigError);
    config = PolicyConfig{};
    config.s_neutral = -0.1;
    CHECK_THROWS_AS(config.validate(), ConfigError);
    config = PolicyConfig{};
    config.dead_band = -0.2;
    CHECK_THROWS_AS(config.validate(), ConfigError);
    config = PolicyConfig{};
    CHECK_NOTHROW(config.validate());
}

TEST_CASE("policy kind labels round trip") {
    for (PolicyKind kind : {PolicyKind::Static, PolicyKind::Proportional,
                            PolicyKind::ThresholdDeviation, PolicyKind::Incremental})
        CHECK(policy_kind_from_string(to_string(kind)) == kind);
    CHECK_THROWS_AS(policy_kind_from_string("martingale"), ConfigError);
}
