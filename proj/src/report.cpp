#include "harborlink/report.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

#include <json.hpp>

#include "harborlink/metrics.hpp"

namespace harborlink::io {

using positioning::Architecture;

std::string format_double(double value) {
    char buffer[32];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
    return std::string(buffer, ptr);
}

RunReport build_report(const scenario::ScenarioConfig& config, std::vector<ArchSeries> series) {
    RunReport report;
    report.config = config;
    report.series = std::move(series);

    const std::size_t n_slots = static_cast<std::size_t>(config.n_slots);
    for (const ArchSeries& arch_series : report.series) {
        ArchSummary summary;
        summary.arch = arch_series.arch;
        summary.mean_rate_per_slot.assign(n_slots, 0.0);
        summary.mean_cumulative_energy_j.assign(n_slots, 0.0);

        // Accumulation follows the slots.csv row order (run, slot, ship)
        // so the summary is exactly recomputable from the table.
        double rate_sum = 0.0;
        std::size_t rate_count = 0;
        double final_energy_sum = 0.0;
        for (const scenario::TimeSeries& run : arch_series.runs) {
            for (std::size_t s = 0; s < run.slots.size(); ++s) {
                for (const scenario::ShipSlotStats& ship : run.slots[s].ships) {
                    rate_sum += ship.rate_bpshz;
                    ++rate_count;
                }
                summary.mean_rate_per_slot[s] += run.slots[s].avg_rate_bpshz;
                summary.mean_cumulative_energy_j[s] += run.cumulative_energy_j[s];
            }
            if (!run.cumulative_energy_j.empty()) {
                final_energy_sum += run.cumulative_energy_j.back();
            }
        }
        const double n_runs = static_cast<double>(arch_series.runs.size());
        summary.mean_rate_bpshz = rate_count > 0 ? rate_sum / static_cast<double>(rate_count) : 0.0;
        summary.mean_throughput_bps = summary.mean_rate_bpshz * config.channel.bandwidth_hz;
        summary.total_energy_j = n_runs > 0 ? final_energy_sum / n_runs : 0.0;
        for (std::size_t s = 0; s < n_slots; ++s) {
            summary.mean_rate_per_slot[s] /= n_runs;
            summary.mean_cumulative_energy_j[s] /= n_runs;
        }
        report.summaries.push_back(std::move(summary));
    }

    // Pairwise deltas for both metrics; baselines of zero (no relay means
    // no energy) are skipped since the ratio is undefined.
    for (const char* metric : {"rate", "energy"}) {
        for (const ArchSummary& a : report.summaries) {
            for (const ArchSummary& b : report.summaries) {
                if (a.arch == b.arch) continue;
                const double va =
                    metric == std::string("rate") ? a.mean_rate_bpshz : a.total_energy_j;
                const double vb =
                    metric == std::string("rate") ? b.mean_rate_bpshz : b.total_energy_j;
                if (vb == 0.0) continue;
                report.comparisons.push_back(
                    {metric, a.arch, b.arch, metrics::percent_delta(va, vb)});
            }
        }
    }
    return report;
}

namespace {

nlohmann::json config_to_json(const scenario::ScenarioConfig& c) {
    nlohmann::json j;
    j["scenario"] = scenario::to_string(c.kind);
    j["arch"] = positioning::to_string(c.architecture);
    j["seed"] = c.seed;
    j["slots"] = {{"count", c.n_slots}, {"duration_s", c.slot_duration_s}};
    j["area"] = {{"width_m", c.area_width_m}, {"length_m", c.area_length_m}};
    j["bs"] = {{"x_m", c.bs.x}, {"y_m", c.bs.y}, {"height_m", c.bs.z}};
    j["blocker"] = {{"center_x_m", c.blocking_ship.center.x},
                    {"center_y_m", c.blocking_ship.center.y},
                    {"width_m", c.blocking_ship.width},
                    {"length_m", c.blocking_ship.length},
                    {"height_m", c.blocking_ship.height},
                    {"yaw_rad", c.blocking_ship.yaw}};
    j["ships"] = {{"count", c.n_victims},
                  {"speed_mps", c.ship_speed_mps},
                  {"width_m", c.victim_width_m},
                  {"length_m", c.victim_length_m},
                  {"hull_height_m", c.victim_hull_height_m},
                  {"antenna_height_m", c.victim_antenna_height_m},
                  {"start_x_m", c.single_start_x_m},
                  {"start_y_m", c.single_start_y_m},
                  {"heading_x", c.single_heading_x},
                  {"heading_y", c.single_heading_y}};
    j["uav"] = {{"ls_height_m", c.ls_height_m}, {"max_altitude_m", c.uav_max_altitude_m}};
    j["channel"] = {{"carrier_frequency_hz", c.channel.carrier_frequency_hz},
                    {"bandwidth_hz", c.channel.bandwidth_hz},
                    {"noise_figure_db", c.channel.noise_figure_db},
                    {"extra_loss_los_db", c.channel.extra_loss_los_db},
                    {"extra_loss_nlos_db", c.channel.extra_loss_nlos_db},
                    {"bs_tx_power_dbm", c.channel.bs_tx_power_dbm},
                    {"relay_tx_power_dbm", c.channel.relay_tx_power_dbm},
                    {"rx_sensitivity_dbm", c.channel.rx_sensitivity_dbm},
                    {"bs_antenna_gain_dbi", c.channel.bs_antenna_gain_dbi},
                    {"relay_antenna_gain_dbi", c.channel.relay_antenna_gain_dbi},
                    {"ship_antenna_gain_dbi", c.channel.ship_antenna_gain_dbi},
                    {"min_distance_m", c.channel.min_distance_m}};
    j["energy"] = {{"rotor_count", c.energy.rotor_count},
                   {"thrust_n", c.energy.thrust_n},
                   {"frame_weight_kg", c.energy.frame_weight_kg},
                   {"payload_weight_kg", c.energy.payload_weight_kg},
                   {"gravity", c.energy.gravity},
                   {"rotor_radius_m", c.energy.rotor_radius_m},
                   {"air_density", c.energy.air_density},
                   {"relay_tx_power_w", c.energy.relay_tx_power_w},
                   {"circuit_power_w", c.energy.circuit_power_w},
                   {"drag_coefficient", c.energy.drag_coefficient},
                   {"reference_area_m2", c.energy.reference_area_m2},
                   {"rotor_chord_m", c.energy.rotor_chord_m},
                   {"angular_velocity_rad_s", c.energy.angular_velocity_rad_s},
                   {"ascend_speed_mps", c.energy.ascend_speed_mps},
                   {"descend_speed_mps", c.energy.descend_speed_mps},
                   {"horizontal_speed_lsmr_mps", c.energy.horizontal_speed_lsmr_mps},
                   {"horizontal_speed_cfmr_mps", c.energy.horizontal_speed_cfmr_mps}};
    return j;
}

class OutputFile {
public:
    explicit OutputFile(const std::filesystem::path& path)
        : path_(path), stream_(path, std::ios::binary) {
        if (!stream_) throw std::runtime_error("cannot open output file: " + path.string());
    }

    template <typename T>
    OutputFile& operator<<(const T& value) {
        stream_ << value;
        return *this;
    }

    void finish() {
        stream_.flush();
        if (!stream_) throw std::runtime_error("write failed: " + path_.string());
    }

private:
    std::filesystem::path path_;
    std::ofstream stream_;
};

} // namespace

void emit_results(const RunReport& report, const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory: " + out_dir.string() + ": " +
                                 ec.message());
    }

    {
        OutputFile slots(out_dir / "slots.csv");
        slots << "run,slot,arch,ship_id,rate_bpshz,rx_dbm,los\n";
        for (const ArchSeries& arch_series : report.series) {
            const char* arch = positioning::to_string(arch_series.arch);
            for (std::size_t r = 0; r < arch_series.runs.size(); ++r) {
                for (const scenario::SlotResult& slot : arch_series.runs[r].slots) {
                    for (std::size_t i = 0; i < slot.ships.size(); ++i) {
                        const scenario::ShipSlotStats& s = slot.ships[i];
                        slots << r << ',' << slot.slot_index << ',' << arch << ',' << i << ','
                              << format_double(s.rate_bpshz) << ','
                              << format_double(s.rx_power_dbm) << ','
                              << geometry::to_string(s.direct_los) << '\n';
                    }
                }
            }
        }
        slots.finish();
    }

    {
        OutputFile energy(out_dir / "energy.csv");
        energy << "run,slot,arch,comm_J,hover_J,mobility_J,total_J,cumulative_J\n";
        for (const ArchSeries& arch_series : report.series) {
            const char* arch = positioning::to_string(arch_series.arch);
            for (std::size_t r = 0; r < arch_series.runs.size(); ++r) {
                const scenario::TimeSeries& run = arch_series.runs[r];
                for (std::size_t s = 0; s < run.slots.size(); ++s) {
                    const energy::EnergyLedgerEntry& e = run.slots[s].energy;
                    energy << r << ',' << run.slots[s].slot_index << ',' << arch << ','
                           << format_double(e.comm_j) << ',' << format_double(e.hover_j) << ','
                           << format_double(e.mobility_j) << ',' << format_double(e.total_j())
                           << ',' << format_double(run.cumulative_energy_j[s]) << '\n';
                }
            }
        }
        energy.finish();
    }

    {
        std::vector<double> pooled;
        for (const ArchSeries& arch_series : report.series) {
            for (const scenario::TimeSeries& run : arch_series.runs) {
                for (const scenario::SlotResult& slot : run.slots) {
                    for (const scenario::ShipSlotStats& s : slot.ships) {
                        pooled.push_back(s.rate_bpshz);
                    }
                }
            }
        }
        OutputFile cdf(out_dir / "cdf.csv");
        cdf << "rate,quantile\n";
        if (!pooled.empty()) {
            const metrics::RateCdf curve(std::move(pooled));
            const auto& sorted = curve.sorted_samples();
            const double n = static_cast<double>(sorted.size());
            for (std::size_t i = 0; i < sorted.size(); ++i) {
                cdf << format_double(sorted[i]) << ','
                    << format_double(static_cast<double>(i + 1) / n) << '\n';
            }
        }
        cdf.finish();
    }

    {
        nlohmann::json j;
        j["config"] = config_to_json(report.config);
        j["architectures"] = nlohmann::json::array();
        for (const ArchSummary& s : report.summaries) {
            nlohmann::json a;
            a["arch"] = positioning::to_string(s.arch);
            a["mean_rate_bpshz"] = s.mean_rate_bpshz;
            a["mean_throughput_bps"] = s.mean_throughput_bps;
            a["total_energy_j"] = s.total_energy_j;
            a["mean_rate_per_slot"] = s.mean_rate_per_slot;
            a["mean_cumulative_energy_j"] = s.mean_cumulative_energy_j;
            j["architectures"].push_back(std::move(a));
        }
        j["comparisons"] = nlohmann::json::array();
        for (const Comparison& c : report.comparisons) {
            j["comparisons"].push_back({{"metric", c.metric},
                                        {"a", positioning::to_string(c.a)},
                                        {"b", positioning::to_string(c.b)},
                                        {"percent", c.percent}});
        }
        OutputFile summary(out_dir / "summary.json");
        summary << j.dump(2) << '\n';
        summary.finish();
    }
}

} // namespace harborlink::io
