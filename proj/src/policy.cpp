#include "hedgekit/policy.hpp"

#include <algorithm>
#include <cmath>

#include "hedgekit/errors.hpp"

namespace hedgekit {

const char* to_string(PolicyKind kind) {
    switch (kind) {
        case PolicyKind::Static: return "static";
        case PolicyKind::Proportional: return "proportional";
        case PolicyKind::ThresholdDeviation: return "threshold_deviation";
        case PolicyKind::Incremental: return "incremental";
    }
    return "static";
}

PolicyKind policy_kind_from_string(const std::string& label) {
    if (label == "static") return PolicyKind::Static;
    if (label == "proportional") return PolicyKind::Proportional;
    if (label == "threshold_deviation") return PolicyKind::ThresholdDeviation;
    if (label == "incremental") return PolicyKind::Incremental;
    throw ConfigError("unknown policy kind: " + label);
}

void PolicyConfig::validate() const {
    if (!(clamp_lo < clamp_hi)) throw ConfigError("policy clamp bounds must satisfy lo < hi");
    if (h0 < clamp_lo || h0 > clamp_hi) throw ConfigError("policy h0 outside clamp bounds");
    if (s_neutral < 0.0 || s_neutral > 1.0) throw ConfigError("policy s_neutral outside [0,1]");
    if (dead_band < 0.0) throw ConfigError("policy dead_band must be >= 0");
}

namespace {

HedgeDecision clamp_decision(double raw, const PolicyConfig& config) {
    return {std::clamp(raw, config.clamp_lo, config.clamp_hi), raw};
}

}  // namespace

bool action_gate(const SentimentIndexPoint& index, const PolicyConfig& config) {
    return std::abs(index.value - config.s_neutral) >= config.dead_band;
}

HedgeDecision hedge_static(const PolicyConfig& config) {
    return {config.h0, config.h0};
}

HedgeDecision hedge_proportional(double s_total, const PolicyConfig& config) {
    return clamp_decision(config.h0 + config.alpha * s_total, config);
}

HedgeDecision hedge_threshold_deviation(double s, const PolicyConfig& config) {
    return clamp_decision(config.h0 + config.beta * (s - config.s_neutral), config);
}

HedgeDecision hedge_incremental(double prev_h, double delta_s, const PolicyConfig& config) {
    return clamp_decision(prev_h + config.alpha * delta_s, config);
}

PortfolioState portfolio_update(const PortfolioState& state, double new_hedge, double day_return,
                                double cost_rate) {
    if (cost_rate < 0.0) throw ConfigError("cost_rate must be >= 0");
    const double notional = state.position_value;
    const double pnl = notional * (1.0 - state.hedge_ratio) * day_return -
                       notional * cost_rate * std::abs(new_hedge - state.hedge_ratio);
    PortfolioState next = state;
    next.day = state.day + 1;
    next.hedge_ratio = new_hedge;
    next.cumulative_pnl = state.cumulative_pnl + pnl;
    return next;
}

}  // namespace hedgekit
