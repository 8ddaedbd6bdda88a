#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "hedgekit/config.hpp"
#include "hedgekit/provider.hpp"

namespace hedgekit::cli {

struct Options {
    std::string out_dir = "out";
    int jobs = 1;
    std::optional<std::uint64_t> seed;  // overrides synthetic seed / trials base seed
};

/// Prices + observations resolved from the market and sentiment sections.
struct Dataset {
    PriceSeries prices;
    std::vector<SentimentObservation> observations;
    std::string model;  // provenance label for the compare.csv model column
};

Dataset load_dataset(const RunConfig& config);

std::unique_ptr<Scorer> build_scorer(const SentimentSection& sentiment);

// Subcommands; all throw Config/Data/ProviderError, mapped to exit codes by
// the CLI entry point. Outputs land under options.out_dir.
void cmd_generate(RunConfig config, const Options& options);
void cmd_score(RunConfig config, const Options& options);
void cmd_backtest(RunConfig config, const Options& options);
void cmd_compare(RunConfig config, const Options& options);
void cmd_sweep(RunConfig config, const Options& options);

}  // namespace hedgekit::cli
