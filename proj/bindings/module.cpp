#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hedgekit/backtest.hpp"
#include "hedgekit/errors.hpp"
#include "hedgekit/market.hpp"
#include "hedgekit/metrics.hpp"
#include "hedgekit/policy.hpp"
#include "hedgekit/provider.hpp"
#include "hedgekit/sentiment.hpp"

namespace py = pybind11;
using namespace hedgekit;

PYBIND11_MODULE(_hedgekit, m) {
    m.doc() = "Sentiment-driven dynamic hedging backtests (C++ core)";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
    py::register_exception<ProviderError>(m, "ProviderError", PyExc_RuntimeError);

    py::enum_<Source>(m, "Source")
        .value("news", Source::news)
        .value("social", Source::social)
        .value("financial_report", Source::financial_report)
        .value("survey", Source::survey)
        .value("other", Source::other);

    py::class_<SentimentObservation>(m, "SentimentObservation")
        .def(py::init([](double score, double weight, Source source, int day) {
                 SentimentObservation obs{score, weight, source, day};
                 obs.validate();
                 return obs;
             }),
             py::arg("score"), py::arg("weight") = 1.0, py::arg("source") = Source::other,
             py::arg("day") = 0)
        .def_readonly("score", &SentimentObservation::score)
        .def_readonly("weight", &SentimentObservation::weight)
        .def_readonly("source", &SentimentObservation::source)
        .def_readonly("day", &SentimentObservation::day);

    py::class_<SentimentIndexPoint>(m, "SentimentIndexPoint")
        .def(py::init<int, double, int>(), py::arg("day"), py::arg("value"),
             py::arg("n_observations") = 1)
        .def_readonly("day", &SentimentIndexPoint::day)
        .def_readonly("value", &SentimentIndexPoint::value)
        .def_readonly("n_observations", &SentimentIndexPoint::n_observations);

    py::class_<SourceWeights>(m, "SourceWeights")
        .def(py::init<>())
        .def_static("defaults", &SourceWeights::defaults)
        .def("weight_for", &SourceWeights::weight_for)
        .def_readwrite("weights", &SourceWeights::weights);

    m.def("aggregate_weighted", &aggregate_weighted, py::arg("observations"));
    m.def("aggregate_mean", &aggregate_mean, py::arg("observations"));
    m.def("rolling_index", &rolling_index, py::arg("daily_points"), py::arg("window"));

    py::enum_<PolicyKind>(m, "PolicyKind")
        .value("static_hedge", PolicyKind::Static)
        .value("proportional", PolicyKind::Proportional)
        .value("threshold_deviation", PolicyKind::ThresholdDeviation)
        .value("incremental", PolicyKind::Incremental);

    py::class_<PolicyConfig>(m, "PolicyConfig")
        .def(py::init<>())
        .def_readwrite("kind", &PolicyConfig::kind)
        .def_readwrite("h0", &PolicyConfig::h0)
        .def_readwrite("alpha", &PolicyConfig::alpha)
        .def_readwrite("beta", &PolicyConfig::beta)
        .def_readwrite("s_neutral", &PolicyConfig::s_neutral)
        .def_readwrite("dead_band", &PolicyConfig::dead_band)
        .def_readwrite("clamp_lo", &PolicyConfig::clamp_lo)
        .def_readwrite("clamp_hi", &PolicyConfig::clamp_hi)
        .def("validate", &PolicyConfig::validate);

    py::class_<HedgeDecision>(m, "HedgeDecision")
        .def_readonly("ratio", &HedgeDecision::ratio)
        .def_readonly("pre_clamp", &HedgeDecision::pre_clamp);

    py::class_<PortfolioState>(m, "PortfolioState")
        .def(py::init<>())
        .def_readwrite("day", &PortfolioState::day)
        .def_readwrite("hedge_ratio", &PortfolioState::hedge_ratio)
        .def_readwrite("position_value", &PortfolioState::position_value)
        .def_readwrite("cumulative_pnl", &PortfolioState::cumulative_pnl);

    m.def("action_gate", &action_gate, py::arg("index"), py::arg("config"));
    m.def("hedge_static", &hedge_static, py::arg("config"));
    m.def("hedge_proportional", &hedge_proportional, py::arg("s_total"), py::arg("config"));
    m.def("hedge_threshold_deviation", &hedge_threshold_deviation, py::arg("s"),
          py::arg("config"));
    m.def("hedge_incremental", &hedge_incremental, py::arg("prev_h"), py::arg("delta_s"),
          py::arg("config"));
    m.def("portfolio_update", &portfolio_update, py::arg("state"), py::arg("new_hedge"),
          py::arg("day_return"), py::arg("cost_rate"));

    py::class_<PriceSeries>(m, "PriceSeries")
        .def(py::init<>())
        .def_readwrite("days", &PriceSeries::days)
        .def_readwrite("prices", &PriceSeries::prices)
        .def("validate", &PriceSeries::validate)
        .def("__len__", &PriceSeries::size);

    py::class_<SyntheticConfig>(m, "SyntheticConfig")
        .def(py::init<>())
        .def_readwrite("n_days", &SyntheticConfig::n_days)
        .def_readwrite("mu", &SyntheticConfig::mu)
        .def_readwrite("sigma", &SyntheticConfig::sigma)
        .def_readwrite("kappa", &SyntheticConfig::kappa)
        .def_readwrite("phi", &SyntheticConfig::phi)
        .def_readwrite("sigma_s", &SyntheticConfig::sigma_s)
        .def_readwrite("days_per_year", &SyntheticConfig::days_per_year)
        .def_readwrite("seed", &SyntheticConfig::seed);

    py::class_<SyntheticMarket>(m, "SyntheticMarket")
        .def_readonly("prices", &SyntheticMarket::prices)
        .def_readonly("sentiment", &SyntheticMarket::sentiment);

    m.def("simple_returns", &simple_returns, py::arg("series"));
    m.def("generate_synthetic", &generate_synthetic, py::arg("config"));
    m.def("observations_from_index", &observations_from_index, py::arg("index"));
    m.def("load_price_csv", &load_price_csv, py::arg("path"));
    m.def("load_observation_csv", &load_observation_csv, py::arg("path"),
          py::arg("default_weights") = SourceWeights::defaults());

    py::class_<Lexicon>(m, "Lexicon")
        .def(py::init<>())
        .def_static("builtin", &Lexicon::builtin)
        .def_static("from_csv", &Lexicon::from_csv, py::arg("path"))
        .def("add", &Lexicon::add, py::arg("token"), py::arg("sign"));
    m.def("lexicon_score", &lexicon_score, py::arg("text"), py::arg("lexicon"));

    py::class_<BacktestConfig>(m, "BacktestConfig")
        .def(py::init<>())
        .def_readwrite("window_days", &BacktestConfig::window_days)
        .def_readwrite("sentiment_window", &BacktestConfig::sentiment_window)
        .def_readwrite("rebalance_every", &BacktestConfig::rebalance_every)
        .def_readwrite("cost_rate", &BacktestConfig::cost_rate)
        .def_readwrite("notional", &BacktestConfig::notional)
        .def_readwrite("policy", &BacktestConfig::policy)
        .def("validate", &BacktestConfig::validate);

    py::class_<EquityPoint>(m, "EquityPoint")
        .def_readonly("day", &EquityPoint::day)
        .def_readonly("cumulative_pnl", &EquityPoint::cumulative_pnl);

    py::class_<HedgePoint>(m, "HedgePoint")
        .def_readonly("day", &HedgePoint::day)
        .def_readonly("hedge_ratio", &HedgePoint::hedge_ratio)
        .def_readonly("pre_clamp", &HedgePoint::pre_clamp);

    py::class_<BacktestRun>(m, "BacktestRun")
        .def_readonly("config", &BacktestRun::config)
        .def_readonly("equity", &BacktestRun::equity)
        .def_readonly("sentiment", &BacktestRun::sentiment)
        .def_readonly("hedges", &BacktestRun::hedges)
        .def_readonly("carried_days", &BacktestRun::carried_days)
        .def_readonly("warmup_days", &BacktestRun::warmup_days);

    m.def("run_backtest", &run_backtest, py::arg("prices"), py::arg("observations"),
          py::arg("config"));
    m.def("no_lookahead_audit", &no_lookahead_audit, py::arg("prices"), py::arg("observations"),
          py::arg("config"), py::arg("run"), py::arg("checks") = 10,
          py::arg("seed") = 0x5EED5EEDULL);

    py::class_<PerformanceReport>(m, "PerformanceReport")
        .def_readonly("sharpe", &PerformanceReport::sharpe)
        .def_readonly("max_drawdown", &PerformanceReport::max_drawdown)
        .def_readonly("win_rate", &PerformanceReport::win_rate)
        .def_readonly("avg_profit", &PerformanceReport::avg_profit)
        .def_readonly("risk_exposure", &PerformanceReport::risk_exposure)
        .def_readonly("annualized_return", &PerformanceReport::annualized_return)
        .def_readonly("annualized_vol", &PerformanceReport::annualized_vol)
        .def_readonly("n_days", &PerformanceReport::n_days);

    m.def("sharpe", &sharpe, py::arg("daily_pnl"), py::arg("notional"), py::arg("rf_annual") = 0.0,
          py::arg("trading_days") = kTradingDaysPerYear);
    m.def("max_drawdown", &max_drawdown, py::arg("equity"));
    m.def("win_rate", &win_rate, py::arg("daily_pnl"));
    m.def("avg_profit", &avg_profit, py::arg("daily_pnl"));
    m.def("risk_exposure", &risk_exposure, py::arg("hedge_series"));
    m.def("annualized_return", &annualized_return, py::arg("equity"),
          py::arg("trading_days") = kTradingDaysPerYear);
    m.def("annualized_vol", &annualized_vol, py::arg("daily_pnl"), py::arg("notional"),
          py::arg("trading_days") = kTradingDaysPerYear);
    m.def("build_report", &build_report, py::arg("run"), py::arg("rf_annual") = 0.0,
          py::arg("trading_days") = kTradingDaysPerYear);

#ifdef HEDGEKIT_VERSION
    m.attr("__version__") = HEDGEKIT_VERSION;
#else
    m.attr("__version__") = "0.1.0";
#endif
}
