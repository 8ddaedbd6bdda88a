#pragma once

#include <vector>

namespace hedgekit {

struct BacktestRun;

// Default annualization constant for daily bars. The backtest window length
// is a separate knob; do not conflate the two.
inline constexpr double kTradingDaysPerYear = 252.0;

struct PerformanceReport {
    double sharpe = 0.0;             // annualized
    double max_drawdown = 0.0;       // [0,1]
    double win_rate = 0.0;           // [0,1]
    double avg_profit = 0.0;         // currency per day
    double risk_exposure = 0.0;      // mean unhedged fraction
    double annualized_return = 0.0;
    double annualized_vol = 0.0;
    int n_days = 0;
};

// mean(excess daily return) / sample stdev * sqrt(trading_days), where the
// daily return is pnl / notional and excess subtracts rf_annual / trading_days.
double sharpe(const std::vector<double>& daily_pnl, double notional, double rf_annual,
              double trading_days = kTradingDaysPerYear);

// Largest (peak - trough) / peak over the curve; equity must stay positive.
double max_drawdown(const std::vector<double>& equity);

// Fraction of days with pnl strictly > 0; zero days are not wins.
double win_rate(const std::vector<double>& daily_pnl);

double avg_profit(const std::vector<double>& daily_pnl);

// Mean of (1 - hedge_ratio). The unhedged fraction is the exposure left open.
double risk_exposure(const std::vector<double>& hedge_series);

// Geometric annualization of the equity curve:
// (final/initial)^(trading_days/n) - 1.
double annualized_return(const std::vector<double>& equity,
                         double trading_days = kTradingDaysPerYear);

double annualized_vol(const std::vector<double>& daily_pnl, double notional,
                      double trading_days = kTradingDaysPerYear);

// Assembles the report metrics from a finished run. Equity levels for
// drawdown/return are notional + cumulative pnl so the base stays positive.
PerformanceReport build_report(const BacktestRun& run, double rf_annual = 0.0,
                               double trading_days = kTradingDaysPerYear);

}  // namespace hedgekit
