#include "hedgekit/metrics.hpp"

#include <cmath>

#include "hedgekit/backtest.hpp"
#include "hedgekit/errors.hpp"

namespace hedgekit {

namespace {

double mean(const std::vector<double>& xs) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

double sample_stdev(const std::vector<double>& xs) {
    const double m = mean(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

}  // namespace

double sharpe(const std::vector<double>& daily_pnl, double notional, double rf_annual,
              double trading_days) {
    if (daily_pnl.size() < 2) throw TooShort("sharpe: need at least two days");
    if (!(notional > 0.0)) throw DataError("sharpe: notional must be > 0");
    if (!(trading_days > 0.0)) throw DataError("sharpe: trading_days must be > 0");
    std::vector<double> excess;
    excess.reserve(daily_pnl.size());
    const double rf_daily = rf_annual / trading_days;
    for (double pnl : daily_pnl) excess.push_back(pnl / notional - rf_daily);
    const double sd = sample_stdev(excess);
    if (sd == 0.0) throw ZeroVolatility("sharpe: constant return series");
    return mean(excess) / sd * std::sqrt(trading_days);
}

double max_drawdown(const std::vector<double>& equity) {
    if (equity.empty()) throw EmptyInput("max_drawdown: empty curve");
    double peak = equity.front();
    double worst = 0.0;
    for (double level : equity) {
        if (!(level > 0.0)) throw NonPositiveEquity("max_drawdown: equity must stay positive");
        if (level > peak) peak = level;
        const double dd = (peak - level) / peak;
        if (dd > worst) worst = dd;
    }
    return worst;
}

double win_rate(const std::vector<double>& daily_pnl) {
    if (daily_pnl.empty()) throw EmptyInput("win_rate: empty series");
    std::size_t wins = 0;
    for (double pnl : daily_pnl)
        if (pnl > 0.0) ++wins;
    return static_cast<double>(wins) / static_cast<double>(daily_pnl.size());
}

double avg_profit(const std::vector<double>& daily_pnl) {
    if (daily_pnl.empty()) throw EmptyInput("avg_profit: empty series");
    return mean(daily_pnl);
}

double risk_exposure(const std::vector<double>& hedge_series) {
    if (hedge_series.empty()) throw EmptyInput("risk_exposure: empty series");
    double sum = 0.0;
    for (double h : hedge_series) sum += 1.0 - h;
    return sum / static_cast<double>(hedge_series.size());
}

double annualized_return(const std::vector<double>& equity, double trading_days) {
    if (equity.empty()) throw EmptyInput("annualized_return: empty curve");
    if (equity.size() < 2) return 0.0;
    const double initial = equity.front();
    const double final_level = equity.back();
    if (!(initial > 0.0) || !(final_level > 0.0))
        throw NonPositiveEquity("annualized_return: equity must stay positive");
    const double periods = static_cast<double>(equity.size() - 1);
    return std::pow(final_level / initial, trading_days / periods) - 1.0;
}

double annualized_vol(const std::vector<double>& daily_pnl, double notional,
                      double trading_days) {
    if (daily_pnl.size() < 2) throw TooShort("annualized_vol: need at least two days");
    if (!(notional > 0.0)) throw DataError("annualized_vol: notional must be > 0");
    std::vector<double> returns;
    returns.reserve(daily_pnl.size());
    for (double pnl : daily_pnl) returns.push_back(pnl / notional);
    return sample_stdev(returns) * std::sqrt(trading_days);
}

PerformanceReport build_report(const BacktestRun& run, double rf_annual,
                               double trading_days) {
    if (run.equity.size() < 2) throw TooShort("build_report: run has no completed days");
    std::vector<double> pnl;
    pnl.reserve(run.equity.size() - 1);
    std::vector<double> levels;
    levels.reserve(run.equity.size());
    const double notional = run.config.notional;
    levels.push_back(notional + run.equity.front().cumulative_pnl);
    for (std::size_t i = 1; i < run.equity.size(); ++i) {
        pnl.push_back(run.equity[i].cumulative_pnl - run.equity[i - 1].cumulative_pnl);
        levels.push_back(notional + run.equity[i].cumulative_pnl);
    }
    std::vector<double> ratios;
    ratios.reserve(run.hedges.size());
    for (const auto& h : run.hedges) ratios.push_back(h.hedge_ratio);

    PerformanceReport report;
    report.sharpe = sharpe(pnl, notional, rf_annual, trading_days);
    report.max_drawdown = max_drawdown(levels);
    report.win_rate = win_rate(pnl);
    report.avg_profit = avg_profit(pnl);
    report.risk_exposure = risk_exposure(ratios);
    report.annualized_return = annualized_return(levels, trading_days);
    report.annualized_vol = annualized_vol(pnl, notional, trading_days);
    report.n_days = static_cast<int>(pnl.size());
    return report;
}

}  // namespace hedgekit
