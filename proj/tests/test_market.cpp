#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

#include "hedgekit/csv.hpp"
#include "hedgekit/errors.hpp"
#include "hedgekit/market.hpp"

using namespace hedgekit;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("hedgekit_market_" + std::to_string(std::rand()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void write(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

double correlation(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += xs[i] / n;
        my += ys[i] / n;
    }
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

// Sample corr(s_t - 0.5, r_{t+1}) over one long generated path.
double sentiment_return_correlation(double kappa, int n_days, std::uint64_t seed) {
    SyntheticConfig config;
    config.n_days = n_days;
    config.kappa = kappa;
    config.seed = seed;
    const SyntheticMarket market = generate_synthetic(config);
    const std::vector<double> returns = simple_returns(market.prices);
    std::vector<double> lagged_sentiment;
    lagged_sentiment.reserve(returns.size());
    for (std::size_t t = 0; t < returns.size(); ++t)
        lagged_sentiment.push_back(market.sentiment[t].value - 0.5);
    return correlation(lagged_sentiment, returns);
}

}  // namespace

TEST_CASE("simple_returns examples") {
    PriceSeries series;
    series.days = {0, 1};
    series.prices = {100.0, 110.0};
    auto returns = simple_returns(series);
    REQUIRE(returns.size() == 1);
    CHECK(returns[0] == doctest::Approx(0.10));

    series.days = {0, 1, 2};
    series.prices = {100.0, 110.0, 99.0};
    returns = simple_returns(series);
    REQUIRE(returns.size() == 2);
    CHECK(returns[0] == doctest::Approx(0.10));
    CHECK(returns[1] == doctest::Approx(-0.10));

    series.prices = {50.0, 50.0, 50.0};
    for (double r : simple_returns(series)) CHECK(r == doctest::Approx(0.0));

    series.days = {0};
    series.prices = {100.0};
    CHECK_THROWS_AS(simple_returns(series), TooShort);
}

TEST_CASE("generate_synthetic honors its degenerate limits") {
    SyntheticConfig config;
    config.n_days = 300;
    config.sigma_s = 0.0;
    config.phi = 0.7;
    const SyntheticMarket market = generate_synthetic(config);
    REQUIRE(market.sentiment.size() == 300);
    for (const auto& point : market.sentiment) CHECK(point.value == doctest::Approx(0.5));
    market.prices.validate();
    CHECK(market.prices.prices.front() == doctest::Approx(100.0));
}

TEST_CASE("generate_synthetic is a pure function of its config") {
    SyntheticConfig config;
    config.n_days = 256;
    config.seed = 1234;
    const SyntheticMarket a = generate_synthetic(config);
    const SyntheticMarket b = generate_synthetic(config);
    REQUIRE(a.prices.size() == b.prices.size());
    for (std::size_t i = 0; i < a.prices.size(); ++i) {
        CHECK(a.prices.prices[i] == b.prices.prices[i]);  // bit-exact
        CHECK(a.sentiment[i].value == b.sentiment[i].value);
    }
    config.seed = 1235;
    const SyntheticMarket c = generate_synthetic(config);
    CHECK(a.prices.prices.back() != c.prices.prices.back());
}

TEST_CASE("kappa = 0 decouples sentiment from returns (Monte Carlo oracle)") {
    const double rho = sentiment_return_correlation(0.0, 100000, 7);
    CHECK(std::abs(rho) < 0.05);
}

TEST_CASE("sentiment-return coupling is positive and increasing in kappa") {
    const double rho_low = sentiment_return_correlation(0.005, 50000, 11);
    const double rho_high = sentiment_return_correlation(0.02, 50000, 11);
    CHECK(rho_low > 0.0);
    CHECK(rho_high > rho_low);
}

TEST_CASE("sentiment stays inside [0,1] even with violent shocks") {
    SyntheticConfig config;
    config.n_days = 5000;
    config.sigma_s = 0.5;
    config.phi = 0.95;
    const SyntheticMarket market = generate_synthetic(config);
    for (const auto& point : market.sentiment) {
        CHECK(point.value >= 0.0);
        CHECK(point.value <= 1.0);
    }
}

TEST_CASE("synthetic config validation") {
    SyntheticConfig config;
    config.n_days = 1;
    CHECK_THROWS_AS(generate_synthetic(config), InvalidConfig);
    config = SyntheticConfig{};
    config.sigma = 0.0;
    CHECK_THROWS_AS(generate_synthetic(config), InvalidConfig);
    config = SyntheticConfig{};
    config.phi = 1.0;
    CHECK_THROWS_AS(generate_synthetic(config), InvalidConfig);
    config = SyntheticConfig{};
    config.sigma_s = -0.1;
    CHECK_THROWS_AS(generate_synthetic(config), InvalidConfig);
}

TEST_CASE("price csv round trip is exact") {
    TempDir tmp;
    SyntheticConfig config;
    config.n_days = 128;
    config.seed = 99;
    const SyntheticMarket market = generate_synthetic(config);
    const std::string path = tmp.file("prices.csv");
    write_price_csv(market.prices, path);
    const PriceSeries loaded = load_price_csv(path);
    REQUIRE(loaded.size() == market.prices.size());
    for (std::size_t i = 0; i < loaded.size(); ++i) {
        CHECK(loaded.days[i] == market.prices.days[i]);
        CHECK(loaded.prices[i] == market.prices.prices[i]);  // shortest repr round-trips
    }
}

TEST_CASE("same seed writes byte-identical csv") {
    TempDir tmp;
    SyntheticConfig config;
    config.seed = 42;
    config.n_days = 64;
    const std::string a = tmp.file("a.csv");
    const std::string b = tmp.file("b.csv");
    write_price_csv(generate_synthetic(config).prices, a);
    write_price_csv(generate_synthetic(config).prices, b);
    std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
    const std::string ca((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
    const std::string cb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
    CHECK(ca == cb);
    CHECK(!ca.empty());
}

TEST_CASE("load_price_csv rejects malformed input with line numbers") {
    TempDir tmp;
    const std::string path = tmp.file("bad.csv");

    write(path, "day,price\n0,100\n1,abc\n");
    CHECK_THROWS_AS(load_price_csv(path), ParseError);
    try {
        load_price_csv(path);
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }

    write(path, "day,price\n0,100\n1,-5\n");
    CHECK_THROWS_AS(load_price_csv(path), NonPositivePrice);

    write(path, "day,price\n0,100\n0,101\n");
    CHECK_THROWS_AS(load_price_csv(path), NonMonotoneDays);

    write(path, "date,close\n0,100\n");
    CHECK_THROWS_AS(load_price_csv(path), ParseError);
}

TEST_CASE("observations_from_index maps one observation per day") {
    const std::vector<SentimentIndexPoint> index = {{0, 0.5, 1}, {1, 0.62, 1}, {2, 0.4, 1}};
    const auto observations = observations_from_index(index);
    REQUIRE(observations.size() == 3);
    for (std::size_t i = 0; i < index.size(); ++i) {
        CHECK(observations[i].day == index[i].day);
        CHECK(observations[i].score == index[i].value);
        CHECK(observations[i].weight == doctest::Approx(1.0));
        CHECK(observations[i].source == Source::other);
    }
}
