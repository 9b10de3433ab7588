#pragma once

#include <cstdint>
#include <vector>

#include "harborlink/channel.hpp"
#include "harborlink/energy.hpp"
#include "harborlink/geometry.hpp"
#include "harborlink/positioning.hpp"

namespace harborlink::scenario {

using geometry::Box3;
using geometry::LosState;
using geometry::Vec3;
using positioning::Architecture;
using positioning::UavPose;

enum class ScenarioKind { Single, Multi };

const char* to_string(ScenarioKind k);

/// Full description of one simulation run. Defaults describe the
/// multi-victim harbor layout; tools/configs override geometry per
/// scenario.
struct ScenarioConfig {
    ScenarioKind kind = ScenarioKind::Multi;
    Architecture architecture = Architecture::Lsmr;

    double area_width_m = 600.0;  // ships move inside [0, width] x [0, length]
    double area_length_m = 800.0;
    Vec3 bs{0.0, 400.0, 35.0};
    Box3 blocking_ship{{150.0, 400.0, 0.0}, 32.0, 200.0, 32.3, 0.0};

    int n_victims = 20;
    double victim_width_m = 4.0;
    double victim_length_m = 20.0;
    double victim_hull_height_m = 5.0;
    double victim_antenna_height_m = 2.0;
    double ship_speed_mps = 5.0;
    double single_start_x_m = 400.0; // single-victim start and heading
    double single_start_y_m = 400.0;
    double single_heading_x = 0.0;
    double single_heading_y = 1.0;

    double slot_duration_s = 10.0;
    int n_slots = 20;

    channel::ChannelParams channel;
    energy::EnergyParams energy;

    double ls_height_m = 35.0;       // perch antenna height for LSMR
    double uav_max_altitude_m = 150.0;

    std::uint64_t seed = 1;

    void validate() const; // throws std::invalid_argument
};

struct ShipState {
    std::uint32_t id = 0;
    Vec3 position;       // antenna position; z fixed at antenna height
    double heading_x = 0.0;
    double heading_y = 0.0;
    double speed_mps = 0.0;
};

/// Per-ship per-slot link outcome. Hop SNRs are linear; backhaul and
/// access are zero under the no-relay architecture.
struct ShipSlotStats {
    double rate_bpshz = 0.0;
    double rx_power_dbm = 0.0; // total received signal power at the ship
    LosState direct_los = LosState::Los;
    double snr_backhaul = 0.0; // BS -> relay
    double snr_direct = 0.0;   // BS -> ship
    double snr_access = 0.0;   // relay -> ship
};

struct SlotResult {
    int slot_index = 0;
    std::vector<ShipSlotStats> ships;
    double avg_rate_bpshz = 0.0;
    UavPose uav_pose;
    energy::EnergyLedgerEntry energy;
};

struct TimeSeries {
    std::vector<SlotResult> slots;
    std::vector<double> cumulative_energy_j; // prefix sums of slot totals
};

/// Mutable run state; slot t depends on slot t-1, so one state is owned
/// by exactly one sequential run.
struct SimState {
    ScenarioConfig config;
    std::vector<Box3> obstacles; // just the blocking ship
    std::vector<ShipState> ships;
    UavPose uav;
    int next_slot = 0;
};

SimState init_scenario(const ScenarioConfig& config);

/// Advances every ship along its heading, reflecting at area boundaries.
void step_ships(SimState& state, double dt_s);

/// One slot of the pipeline: move ships, reposition the relay, evaluate
/// per-ship rates, account energy.
SlotResult simulate_slot(SimState& state, int slot_index);

TimeSeries run_scenario(const ScenarioConfig& config);

struct AggregateResult {
    std::vector<TimeSeries> runs;          // run i used seed + i
    std::vector<double> mean_rate_per_slot;
    std::vector<double> mean_cumulative_energy_j;
    std::vector<double> pooled_rates;      // every per-ship per-slot rate
    double mean_rate = 0.0;                // grand mean over pooled rates
};

/// Independent runs with derived seeds seed+i, merged by run index.
AggregateResult monte_carlo(const ScenarioConfig& config, int n_runs, int threads = 1);

} // namespace harborlink::scenario
