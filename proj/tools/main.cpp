#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "harborlink/config.hpp"
#include "harborlink/kernels/kernels.hpp"
#include "harborlink/link_budget.hpp"
#include "harborlink/report.hpp"
#include "harborlink/scenario.hpp"

namespace {

using harborlink::positioning::Architecture;
using harborlink::scenario::ScenarioConfig;

struct CommonOptions {
    std::string config_path;
    std::string out_dir = "results";
    std::string arch;
    std::string scenario;
    std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_arch) {
    cmd->add_option("--config", opts.config_path, "Scenario config file (omit for defaults)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", opts.out_dir, "Output directory for CSV/JSON results");
    cmd->add_option("--seed", opts.seed, "Override the base RNG seed");
    cmd->add_option("--scenario", opts.scenario, "Scenario kind")
        ->check(CLI::IsMember({"single", "multi"}));
    if (with_arch) {
        cmd->add_option("--arch", opts.arch, "Communication architecture")
            ->check(CLI::IsMember({"nr", "fpr", "cfmr", "lsmr"}));
    }
}

ScenarioConfig load_config(const CommonOptions& opts) {
    std::string text;
    if (!opts.config_path.empty()) {
        std::ifstream file(opts.config_path);
        if (!file) {
            throw harborlink::io::ConfigError("cannot open config file: " + opts.config_path);
        }
        std::ostringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
    }
    // CLI overrides run through the same parser as the file contents.
    if (!opts.scenario.empty()) text += "\nscenario = " + opts.scenario;
    if (!opts.arch.empty()) text += "\narch = " + opts.arch;
    if (opts.seed) text += "\nseed = " + std::to_string(*opts.seed);
    try {
        return harborlink::io::parse_config_text(text);
    } catch (const harborlink::io::ConfigError& e) {
        if (!opts.config_path.empty()) {
            throw harborlink::io::ConfigError(opts.config_path + ": " + e.what());
        }
        throw;
    }
}

void print_summaries(const harborlink::io::RunReport& report) {
    std::printf("%-6s %16s %18s %16s\n", "arch", "mean rate bps/Hz", "mean throughput bps",
                "total energy J");
    for (const auto& s : report.summaries) {
        std::printf("%-6s %16.4f %18.0f %16.1f\n", harborlink::positioning::to_string(s.arch),
                    s.mean_rate_bpshz, s.mean_throughput_bps, s.total_energy_j);
    }
    for (const auto& c : report.comparisons) {
        std::printf("%s: %s vs %s: %+.2f%%\n", c.metric.c_str(),
                    harborlink::positioning::to_string(c.a),
                    harborlink::positioning::to_string(c.b), c.percent);
    }
}

std::vector<Architecture> all_architectures() {
    return {Architecture::Nr, Architecture::Fpr, Architecture::Cfmr, Architecture::Lsmr};
}

int cmd_run(const CommonOptions& opts) {
    ScenarioConfig config = load_config(opts);
    harborlink::io::ArchSeries series;
    series.arch = config.architecture;
    series.runs.push_back(harborlink::scenario::run_scenario(config));
    const auto report = harborlink::io::build_report(config, {std::move(series)});
    harborlink::io::emit_results(report, opts.out_dir);
    print_summaries(report);
    std::printf("results written to %s\n", opts.out_dir.c_str());
    return 0;
}

int cmd_compare(const CommonOptions& opts) {
    ScenarioConfig config = load_config(opts);
    std::vector<harborlink::io::ArchSeries> series;
    for (Architecture arch : all_architectures()) {
        ScenarioConfig arch_config = config;
        arch_config.architecture = arch;
        harborlink::io::ArchSeries s;
        s.arch = arch;
        s.runs.push_back(harborlink::scenario::run_scenario(arch_config));
        series.push_back(std::move(s));
    }
    const auto report = harborlink::io::build_report(config, std::move(series));
    harborlink::io::emit_results(report, opts.out_dir);
    print_summaries(report);
    std::printf("results written to %s\n", opts.out_dir.c_str());
    return 0;
}

int cmd_montecarlo(const CommonOptions& opts, int runs, int threads, bool arch_given) {
    ScenarioConfig config = load_config(opts);
    std::vector<Architecture> archs =
        arch_given ? std::vector<Architecture>{config.architecture} : all_architectures();
    std::vector<harborlink::io::ArchSeries> series;
    for (Architecture arch : archs) {
        ScenarioConfig arch_config = config;
        arch_config.architecture = arch;
        const auto agg = harborlink::scenario::monte_carlo(arch_config, runs, threads);
        harborlink::io::ArchSeries s;
        s.arch = arch;
        s.runs = std::move(agg.runs);
        series.push_back(std::move(s));
    }
    const auto report = harborlink::io::build_report(config, std::move(series));
    harborlink::io::emit_results(report, opts.out_dir);
    print_summaries(report);
    std::printf("results written to %s\n", opts.out_dir.c_str());
    return 0;
}

int cmd_linkbudget(const harborlink::linkbudget::LinkBudgetParams& params,
                   const std::vector<double>& distances) {
    params.validate();
    std::printf("%-12s %14s %14s %14s %14s %14s %14s\n", "distance_m", "fspl", "eirp_w",
                "rx_power_w", "rx_over_n", "rx_over_n0", "rate_bps");
    for (double d : distances) {
        const auto row = harborlink::linkbudget::evaluate(params, d);
        std::printf("%-12g %14.6e %14.6e %14.6e %14.6e %14.6e %14.6e\n", row.distance_m, row.fspl,
                    row.eirp_w, row.rx_power_w, row.rx_over_n, row.rx_over_n0, row.rate_bps);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Link-level simulator for UAV-relayed harbor communications"};
    app.require_subcommand(1);

    CommonOptions run_opts;
    CLI::App* run = app.add_subcommand("run", "Simulate one architecture once");
    add_common(run, run_opts, true);

    CommonOptions compare_opts;
    CLI::App* compare =
        app.add_subcommand("compare", "Run all four architectures on a shared seed");
    add_common(compare, compare_opts, false);

    CommonOptions mc_opts;
    int mc_runs = 100;
    int mc_threads = 1;
    CLI::App* montecarlo =
        app.add_subcommand("montecarlo", "Aggregate independent runs with derived seeds");
    add_common(montecarlo, mc_opts, true);
    montecarlo->add_option("--runs", mc_runs, "Number of runs")->check(CLI::PositiveNumber);
    montecarlo->add_option("--threads", mc_threads, "Worker threads")
        ->check(CLI::PositiveNumber);

    harborlink::linkbudget::LinkBudgetParams lb_params;
    std::vector<double> lb_distances{100.0, 200.0, 500.0, 1000.0, 2000.0};
    CLI::App* linkbudget =
        app.add_subcommand("linkbudget", "Print the analytic rate-versus-distance chain");
    linkbudget->add_option("--distance", lb_distances, "Distances in meters");
    linkbudget->add_option("--tx-power-w", lb_params.tx_power_w, "Transmit power, W");
    linkbudget->add_option("--tx-gain", lb_params.tx_gain, "Transmit antenna gain, linear");
    linkbudget->add_option("--rx-gain", lb_params.rx_gain, "Receive antenna gain, linear");
    linkbudget->add_option("--wavelength-m", lb_params.wavelength_m, "Carrier wavelength, m");
    linkbudget->add_option("--temperature-k", lb_params.temperature_k, "System temperature, K");
    linkbudget->add_option("--ebn0", lb_params.ebn0, "Required Eb/N0, linear");
    linkbudget->add_option("--bandwidth-hz", lb_params.bandwidth_hz, "Bandwidth, Hz");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Flag and usage problems are configuration errors (exit 1);
        // --help and friends exit cleanly.
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (run->parsed()) return cmd_run(run_opts);
        if (compare->parsed()) return cmd_compare(compare_opts);
        if (montecarlo->parsed()) {
            return cmd_montecarlo(mc_opts, mc_runs, mc_threads, !mc_opts.arch.empty());
        }
        if (linkbudget->parsed()) return cmd_linkbudget(lb_params, lb_distances);
    } catch (const harborlink::io::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
