#include "hedgekit/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <functional>
#include <iostream>
#include <iterator>
#include <mutex>
#include <thread>
#include <vector>

#include "json.hpp"

#include "hedgekit/artifacts.hpp"
#include "hedgekit/backtest.hpp"
#include "hedgekit/csv.hpp"
#include "hedgekit/errors.hpp"
#include "hedgekit/log.hpp"
#include "hedgekit/metrics.hpp"

namespace hedgekit::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Runs fn(0..n-1) on up to `jobs` worker threads. Tasks write to their own
// slots, so scheduling order never affects results.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

void apply_seed_override(RunConfig& config, const Options& options) {
    if (!options.seed) return;
    if (config.market.synthetic) config.market.synthetic->seed = *options.seed;
    config.trials.base_seed = *options.seed;
}

Dataset load_dataset_seeded(const RunConfig& config, std::uint64_t seed) {
    Dataset dataset;
    if (config.market.synthetic) {
        SyntheticConfig syn = *config.market.synthetic;
        syn.seed = seed;
        SyntheticMarket market = generate_synthetic(syn);
        dataset.prices = std::move(market.prices);
        if (config.sentiment.csv) {
            dataset.observations =
                load_observation_csv(*config.sentiment.csv, config.sentiment.source_weights);
            dataset.model = "csv";
        } else {
            dataset.observations = observations_from_index(market.sentiment);
            dataset.model = "synthetic";
        }
        return dataset;
    }
    dataset.prices = load_price_csv(*config.market.csv);
    if (!config.sentiment.csv)
        throw ConfigError("sentiment.csv is required when the market comes from a csv file");
    dataset.observations =
        load_observation_csv(*config.sentiment.csv, config.sentiment.source_weights);
    dataset.model = "csv";
    return dataset;
}

constexpr PolicyKind kComparePolicies[] = {PolicyKind::Static, PolicyKind::Proportional,
                                           PolicyKind::ThresholdDeviation,
                                           PolicyKind::Incremental};

json report_stats_json(const std::vector<PerformanceReport>& reports,
                       const std::function<double(const PerformanceReport&)>& field) {
    double sum = 0.0;
    for (const auto& r : reports) sum += field(r);
    const double mean = sum / static_cast<double>(reports.size());
    double ss = 0.0;
    for (const auto& r : reports) ss += (field(r) - mean) * (field(r) - mean);
    const double sd = reports.size() > 1
                          ? std::sqrt(ss / static_cast<double>(reports.size() - 1))
                          : 0.0;
    json out;
    out["mean"] = mean;
    out["std"] = sd;
    return out;
}

PerformanceReport mean_report(const std::vector<PerformanceReport>& reports) {
    PerformanceReport mean;
    const double n = static_cast<double>(reports.size());
    for (const auto& r : reports) {
        mean.sharpe += r.sharpe / n;
        mean.max_drawdown += r.max_drawdown / n;
        mean.win_rate += r.win_rate / n;
        mean.avg_profit += r.avg_profit / n;
        mean.risk_exposure += r.risk_exposure / n;
        mean.annualized_return += r.annualized_return / n;
        mean.annualized_vol += r.annualized_vol / n;
    }
    mean.n_days = reports.empty() ? 0 : reports.front().n_days;
    return mean;
}

}  // namespace

Dataset load_dataset(const RunConfig& config) {
    const std::uint64_t seed = config.market.synthetic ? config.market.synthetic->seed : 0;
    return load_dataset_seeded(config, seed);
}

std::unique_ptr<Scorer> build_scorer(const SentimentSection& sentiment) {
    const ProviderSection& provider = sentiment.provider;
    Lexicon lexicon =
        provider.lexicon ? Lexicon::from_csv(*provider.lexicon) : Lexicon::builtin();
    if (provider.kind == "lexicon") return std::make_unique<LexiconScorer>(std::move(lexicon));
    RemoteOptions options;
    options.endpoint = provider.endpoint;
    options.timeout_ms = provider.timeout_ms;
    options.retries = provider.retries;
    options.fallback = provider.fallback;
    options.cache_path = provider.cache;
    return std::make_unique<RemoteScorer>(std::move(options), std::move(lexicon));
}

void cmd_generate(RunConfig config, const Options& options) {
    apply_seed_override(config, options);
    if (!config.market.synthetic)
        throw ConfigError("generate requires a market.synthetic section");
    const SyntheticMarket market = generate_synthetic(*config.market.synthetic);
    fs::create_directories(options.out_dir);
    const fs::path base(options.out_dir);
    write_price_csv(market.prices, (base / "prices.csv").string());
    write_observation_csv((base / "sentiment.csv").string(),
                          observations_from_index(market.sentiment));
    std::cout << "generated " << market.prices.size() << " days -> " << options.out_dir << "\n";
}

void cmd_score(RunConfig config, const Options& options) {
    apply_seed_override(config, options);
    if (!config.sentiment.texts)
        throw ConfigError("score requires sentiment.texts (a day,source,text csv)");
    const std::vector<TextBatch> batches = load_text_csv(*config.sentiment.texts);
    std::unique_ptr<Scorer> scorer = build_scorer(config.sentiment);
    std::vector<SentimentObservation> observations;
    for (const auto& batch : batches) {
        std::vector<SentimentObservation> scored =
            score_batch(batch, *scorer, config.sentiment.source_weights);
        observations.insert(observations.end(), scored.begin(), scored.end());
    }
    fs::create_directories(options.out_dir);
    const fs::path out = fs::path(options.out_dir) / "sentiment.csv";
    write_observation_csv(out.string(), observations);
    std::cout << "scored " << observations.size() << " texts -> " << out.string() << "\n";
}

void cmd_backtest(RunConfig config, const Options& options) {
    apply_seed_override(config, options);
    const Dataset dataset = load_dataset(config);
    const BacktestRun run = run_backtest(dataset.prices, dataset.observations,
                                         config.backtest_config());
    const PerformanceReport report =
        build_report(run, config.backtest.rf_annual, config.backtest.annualization_days);
    write_run_artifacts(options.out_dir, run, report, config);
    std::cout << "method=" << to_string(config.policy.kind)
              << " sharpe=" << csv::format_double(report.sharpe)
              << " max_drawdown=" << csv::format_double(report.max_drawdown)
              << " final_pnl=" << csv::format_double(run.equity.back().cumulative_pnl) << " -> "
              << options.out_dir << "/run.json\n";
}

void cmd_compare(RunConfig config, const Options& options) {
    apply_seed_override(config, options);
    const int n_seeds = config.trials.n_seeds;
    const std::size_t n_policies = std::size(kComparePolicies);

    // reports[policy][seed]; slot writes keep parallel execution deterministic
    std::vector<std::vector<PerformanceReport>> reports(
        n_policies, std::vector<PerformanceReport>(n_seeds));
    std::vector<BacktestRun> first_seed_runs(n_policies);
    std::string model;
    {
        const Dataset probe = load_dataset(config);  // validates inputs up front
        model = probe.model;
    }

    parallel_for(static_cast<std::size_t>(n_seeds), options.jobs, [&](std::size_t trial) {
        const std::uint64_t seed = config.trials.base_seed + trial;
        const Dataset dataset =
            config.market.synthetic && n_seeds > 1
                ? load_dataset_seeded(config, seed)
                : load_dataset(config);
        for (std::size_t p = 0; p < n_policies; ++p) {
            BacktestConfig bt = config.backtest_config();
            bt.policy.kind = kComparePolicies[p];
            BacktestRun run = run_backtest(dataset.prices, dataset.observations, bt);
            reports[p][trial] =
                build_report(run, config.backtest.rf_annual, config.backtest.annualization_days);
            if (trial == 0) first_seed_runs[p] = std::move(run);
        }
    });

    fs::create_directories(options.out_dir);
    const fs::path base(options.out_dir);

    std::vector<std::vector<std::string>> rows;
    for (std::size_t p = 0; p < n_policies; ++p)
        rows.push_back(report_row(model, to_string(kComparePolicies[p]), mean_report(reports[p])));
    csv::write_file((base / "compare.csv").string(), kCompareHeader, rows);

    json root;
    root["model"] = model;
    root["n_seeds"] = n_seeds;
    root["base_seed"] = config.trials.base_seed;
    root["config"] = json::parse(config_to_json_text(config));
    for (std::size_t p = 0; p < n_policies; ++p) {
        const std::string name = to_string(kComparePolicies[p]);
        json& entry = root["policies"][name];
        entry["sharpe"] = report_stats_json(reports[p], [](const auto& r) { return r.sharpe; });
        entry["max_drawdown"] =
            report_stats_json(reports[p], [](const auto& r) { return r.max_drawdown; });
        entry["win_rate"] = report_stats_json(reports[p], [](const auto& r) { return r.win_rate; });
        entry["avg_profit"] =
            report_stats_json(reports[p], [](const auto& r) { return r.avg_profit; });
        entry["risk_exposure"] =
            report_stats_json(reports[p], [](const auto& r) { return r.risk_exposure; });
        entry["ann_return"] =
            report_stats_json(reports[p], [](const auto& r) { return r.annualized_return; });
        entry["ann_vol"] =
            report_stats_json(reports[p], [](const auto& r) { return r.annualized_vol; });
        json per_seed = json::array();
        for (const auto& r : reports[p]) per_seed.push_back(r.sharpe);
        entry["per_seed_sharpe"] = std::move(per_seed);
        if (kComparePolicies[p] != PolicyKind::Static) {
            int wins = 0;
            for (int s = 0; s < n_seeds; ++s)
                if (reports[p][s].sharpe > reports[0][s].sharpe) ++wins;
            entry["sharpe_win_fraction_vs_static"] =
                static_cast<double>(wins) / static_cast<double>(n_seeds);
        }
    }
    write_text_file((base / "compare.json").string(), root.dump(2) + "\n");

    for (std::size_t p = 0; p < n_policies; ++p) {
        const std::string name = to_string(kComparePolicies[p]);
        write_equity_csv((base / ("equity_" + name + ".csv")).string(), first_seed_runs[p]);
    }
    std::cout << "compared " << n_policies << " policies over " << n_seeds << " seed(s) -> "
              << options.out_dir << "/compare.csv\n";
}

void cmd_sweep(RunConfig config, const Options& options) {
    apply_seed_override(config, options);
    const Dataset dataset = load_dataset(config);

    const auto values_or = [](const std::vector<double>& list, double fallback) {
        return list.empty() ? std::vector<double>{fallback} : list;
    };
    const std::vector<double> alphas = values_or(config.sweep.alpha, config.policy.alpha);
    const std::vector<double> betas = values_or(config.sweep.beta, config.policy.beta);
    const std::vector<double> neutrals = values_or(config.sweep.s_neutral, config.policy.s_neutral);
    const std::vector<double> bands = values_or(config.sweep.dead_band, config.policy.dead_band);

    struct GridPoint {
        double alpha, beta, s_neutral, dead_band;
    };
    std::vector<GridPoint> grid;
    for (double a : alphas)
        for (double b : betas)
            for (double sn : neutrals)
                for (double db : bands) grid.push_back({a, b, sn, db});

    std::vector<PerformanceReport> results(grid.size());
    parallel_for(grid.size(), options.jobs, [&](std::size_t i) {
        BacktestConfig bt = config.backtest_config();
        bt.policy.alpha = grid[i].alpha;
        bt.policy.beta = grid[i].beta;
        bt.policy.s_neutral = grid[i].s_neutral;
        bt.policy.dead_band = grid[i].dead_band;
        bt.policy.validate();
        const BacktestRun run = run_backtest(dataset.prices, dataset.observations, bt);
        results[i] =
            build_report(run, config.backtest.rf_annual, config.backtest.annualization_days);
    });

    fs::create_directories(options.out_dir);
    std::vector<std::vector<std::string>> rows;
    rows.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::vector<std::string> row = {
            to_string(config.policy.kind),          csv::format_double(grid[i].alpha),
            csv::format_double(grid[i].beta),       csv::format_double(grid[i].s_neutral),
            csv::format_double(grid[i].dead_band),
        };
        const std::vector<std::string> metrics = report_row("", "", results[i]);
        row.insert(row.end(), metrics.begin() + 2, metrics.end());
        rows.push_back(std::move(row));
    }
    csv::write_file((fs::path(options.out_dir) / "sweep.csv").string(),
                    {"kind", "alpha", "beta", "s_neutral", "dead_band", "sharpe", "max_drawdown",
                     "win_rate", "avg_profit", "risk_exposure", "ann_return", "ann_vol"},
                    rows);
    std::cout << "swept " << grid.size() << " grid point(s) -> " << options.out_dir
              << "/sweep.csv\n";
}

}  // namespace hedgekit::cli
