#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "harborlink/scenario.hpp"

namespace harborlink::io {

/// Results of one architecture under the shared config (one or more
/// runs; run r used seed + r).
struct ArchSeries {
    positioning::Architecture arch = positioning::Architecture::Nr;
    std::vector<scenario::TimeSeries> runs;
};

struct ArchSummary {
    positioning::Architecture arch = positioning::Architecture::Nr;
    double mean_rate_bpshz = 0.0;     // over every per-ship per-slot sample
    double mean_throughput_bps = 0.0; // mean rate times bandwidth
    double total_energy_j = 0.0;      // final cumulative energy, averaged over runs
    std::vector<double> mean_rate_per_slot;
    std::vector<double> mean_cumulative_energy_j;
};

struct Comparison {
    std::string metric; // "rate" or "energy"
    positioning::Architecture a;
    positioning::Architecture b;
    double percent = 0.0; // 100 * (a - b) / b
};

/// Everything emit_results writes: the config echo, the per-slot series
/// per architecture, and summary figures recomputable from the tables.
struct RunReport {
    scenario::ScenarioConfig config;
    std::vector<ArchSeries> series;
    std::vector<ArchSummary> summaries;
    std::vector<Comparison> comparisons;
};

/// Builds summaries and pairwise comparisons from raw per-arch series.
RunReport build_report(const scenario::ScenarioConfig& config, std::vector<ArchSeries> series);

/// Writes slots.csv, energy.csv, summary.json and cdf.csv into out_dir
/// (creating it if needed). Deterministic: identical reports produce
/// byte-identical files. IO failures raise std::runtime_error naming the
/// path.
void emit_results(const RunReport& report, const std::filesystem::path& out_dir);

/// Shortest round-trip decimal representation, used for all numbers in
/// the CSV outputs.
std::string format_double(double value);

} // namespace harborlink::io
