#include "hedgekit/artifacts.hpp"

#include <filesystem>
#include <fstream>

#include "json.hpp"

#include "hedgekit/csv.hpp"
#include "hedgekit/errors.hpp"

namespace hedgekit {

using nlohmann::json;

const std::vector<std::string> kCompareHeader = {
    "model",       "method",        "sharpe",     "max_drawdown", "win_rate",
    "avg_profit",  "risk_exposure", "ann_return", "ann_vol"};

namespace {

json report_to_json(const PerformanceReport& report) {
    json out;
    out["sharpe"] = report.sharpe;
    out["max_drawdown"] = report.max_drawdown;
    out["win_rate"] = report.win_rate;
    out["avg_profit"] = report.avg_profit;
    out["risk_exposure"] = report.risk_exposure;
    out["ann_return"] = report.annualized_return;
    out["ann_vol"] = report.annualized_vol;
    out["n_days"] = report.n_days;
    return out;
}

}  // namespace

std::string run_json_text(const BacktestRun& run, const PerformanceReport& report,
                          const RunConfig& config) {
    json root;
    root["config"] = json::parse(config_to_json_text(config));

    json& series = root["run"];
    series["carried_days"] = run.carried_days;
    series["warmup_days"] = run.warmup_days;
    json equity = json::array();
    for (const auto& point : run.equity) equity.push_back({point.day, point.cumulative_pnl});
    series["equity"] = std::move(equity);
    json hedges = json::array();
    for (const auto& point : run.hedges)
        hedges.push_back({point.day, point.hedge_ratio, point.pre_clamp});
    series["hedges"] = std::move(hedges);
    json sentiment = json::array();
    for (const auto& point : run.sentiment)
        sentiment.push_back({point.day, point.value, point.n_observations});
    series["sentiment"] = std::move(sentiment);

    root["report"] = report_to_json(report);

    json& meta = root["meta"];
    meta["annualization_days"] = config.backtest.annualization_days;
    meta["stdev"] = "sample";
    meta["rf_annual"] = config.backtest.rf_annual;
    meta["prng"] = "xoshiro256++ / splitmix64 / box-muller";
    meta["pnl_law"] = "notional*(1-H_held)*r - notional*cost_rate*|dH|";

    return root.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path);
    out << content;
}

void write_equity_csv(const std::string& path, const BacktestRun& run) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(run.equity.size());
    for (const auto& point : run.equity)
        rows.push_back({std::to_string(point.day), csv::format_double(point.cumulative_pnl)});
    csv::write_file(path, {"day", "equity"}, rows);
}

void write_hedges_csv(const std::string& path, const BacktestRun& run) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(run.hedges.size());
    for (const auto& point : run.hedges)
        rows.push_back({std::to_string(point.day), csv::format_double(point.hedge_ratio),
                        csv::format_double(point.pre_clamp)});
    csv::write_file(path, {"day", "hedge_ratio", "pre_clamp"}, rows);
}

void write_run_artifacts(const std::string& dir, const BacktestRun& run,
                         const PerformanceReport& report, const RunConfig& config) {
    std::filesystem::create_directories(dir);
    const std::filesystem::path base(dir);
    write_text_file((base / "run.json").string(), run_json_text(run, report, config));
    write_equity_csv((base / "equity.csv").string(), run);
    write_hedges_csv((base / "hedges.csv").string(), run);
}

std::vector<std::string> report_row(const std::string& model, const std::string& method,
                                    const PerformanceReport& report) {
    return {model,
            method,
            csv::format_double(report.sharpe),
            csv::format_double(report.max_drawdown),
            csv::format_double(report.win_rate),
            csv::format_double(report.avg_profit),
            csv::format_double(report.risk_exposure),
            csv::format_double(report.annualized_return),
            csv::format_double(report.annualized_vol)};
}

}  // namespace hedgekit
