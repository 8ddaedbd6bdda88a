#pragma once

#include <string>

#include "hedgekit/sentiment.hpp"

namespace hedgekit {

enum class PolicyKind { Static, Proportional, ThresholdDeviation, Incremental };

const char* to_string(PolicyKind kind);
PolicyKind policy_kind_from_string(const std::string& label);  // throws ConfigError

/// Hedge policy parameters. The hedge ratio is the hedged fraction of one
/// unit of long underlying exposure; sensitivities are signed so either
/// direction convention is expressible. Negative defaults make bearish
/// sentiment raise the hedge.
struct PolicyConfig {
    PolicyKind kind = PolicyKind::ThresholdDeviation;
    double h0 = 0.75;         // baseline hedge ratio
    double alpha = -0.4;      // sensitivity for the proportional and incremental laws
    double beta = -0.5;       // sensitivity for the deviation law
    double s_neutral = 0.5;   // neutral sentiment line
    double dead_band = 0.0;   // no-trade zone half-width around s_neutral
    double clamp_lo = 0.0;
    double clamp_hi = 1.0;

    void validate() const;  // throws ConfigError

    bool operator==(const PolicyConfig&) const = default;
};

/// Hedge ratio, position notional and running P&L after a trading day.
/// position_value is the notional of the underlying exposure being hedged;
/// it stays constant through a run.
struct PortfolioState {
    int day = 0;
    double hedge_ratio = 0.0;
    double position_value = 0.0;
    double cumulative_pnl = 0.0;
};

struct HedgeDecision {
    double ratio;      // clamped to [clamp_lo, clamp_hi]
    double pre_clamp;  // raw policy output, recorded for diagnostics
};

// True when the index is far enough from the neutral line to act. A zero
// dead band always fires.
bool action_gate(const SentimentIndexPoint& index, const PolicyConfig& config);

HedgeDecision hedge_static(const PolicyConfig& config);
HedgeDecision hedge_proportional(double s_total, const PolicyConfig& config);
HedgeDecision hedge_threshold_deviation(double s, const PolicyConfig& config);
HedgeDecision hedge_incremental(double prev_h, double delta_s, const PolicyConfig& config);

// P&L law: pnl = notional * (1 - held ratio) * day_return
//              - notional * cost_rate * |new_hedge - held ratio|,
// where the held ratio is the hedge coming into the period and notional is
// state.position_value. The new ratio takes effect for the next period.
PortfolioState portfolio_update(const PortfolioState& state, double new_hedge, double day_return,
                                double cost_rate);

}  // namespace hedgekit
