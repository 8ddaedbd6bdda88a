#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "hedgekit/commands.hpp"
#include "hedgekit/config.hpp"
#include "hedgekit/errors.hpp"

namespace {

// Exit codes are a scripting contract: 0 ok, 2 config, 3 data, 4 provider.
constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitProvider = 4;

struct SubcommandArgs {
    std::string config_path;
    std::string out_dir = "out";
    int jobs = 1;
    std::optional<std::uint64_t> seed;
};

void add_common_options(CLI::App* cmd, SubcommandArgs& args) {
    cmd->add_option("--config", args.config_path, "run configuration file (json)")->required();
    cmd->add_option("--out", args.out_dir, "output directory")->capture_default_str();
    cmd->add_option("--jobs", args.jobs, "worker threads for trials/sweeps")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", args.seed, "override the synthetic/base seed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hedgekit - sentiment-driven dynamic hedging backtests"};
    app.require_subcommand(1);

    SubcommandArgs args;
    using Command = void (*)(hedgekit::RunConfig, const hedgekit::cli::Options&);
    Command selected = nullptr;

    const std::pair<const char*, Command> commands[] = {
        {"generate", &hedgekit::cli::cmd_generate}, {"score", &hedgekit::cli::cmd_score},
        {"backtest", &hedgekit::cli::cmd_backtest}, {"compare", &hedgekit::cli::cmd_compare},
        {"sweep", &hedgekit::cli::cmd_sweep},
    };
    const char* descriptions[] = {
        "emit synthetic prices.csv and sentiment.csv",
        "score a texts file into a sentiment csv",
        "run one backtest and write run.json",
        "run all policies on identical data",
        "grid-sweep policy parameters",
    };
    for (std::size_t i = 0; i < std::size(commands); ++i) {
        CLI::App* cmd = app.add_subcommand(commands[i].first, descriptions[i]);
        add_common_options(cmd, args);
        cmd->callback([&selected, handler = commands[i].second] { selected = handler; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        hedgekit::RunConfig config = hedgekit::load_config(args.config_path);
        hedgekit::cli::Options options;
        options.out_dir = args.out_dir;
        options.jobs = args.jobs;
        options.seed = args.seed;
        selected(std::move(config), options);
        return 0;
    } catch (const hedgekit::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const hedgekit::ProviderError& e) {
        std::cerr << "provider error: " << e.what() << "\n";
        return kExitProvider;
    } catch (const hedgekit::DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
