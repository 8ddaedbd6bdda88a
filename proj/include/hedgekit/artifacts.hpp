#pragma once

#include <string>
#include <vector>

#include "hedgekit/backtest.hpp"
#include "hedgekit/config.hpp"
#include "hedgekit/metrics.hpp"

namespace hedgekit {

// Serialized form of a finished run: config echo, series, report, metadata.
// Output is deterministic byte-for-byte for identical inputs.
std::string run_json_text(const BacktestRun& run, const PerformanceReport& report,
                          const RunConfig& config);

void write_text_file(const std::string& path, const std::string& content);

void write_equity_csv(const std::string& path, const BacktestRun& run);
void write_hedges_csv(const std::string& path, const BacktestRun& run);

// run.json + equity.csv + hedges.csv under dir (created if needed).
void write_run_artifacts(const std::string& dir, const BacktestRun& run,
                         const PerformanceReport& report, const RunConfig& config);

// Frozen compare.csv header; golden-file tested.
extern const std::vector<std::string> kCompareHeader;

std::vector<std::string> report_row(const std::string& model, const std::string& method,
                                    const PerformanceReport& report);

}  // namespace hedgekit
