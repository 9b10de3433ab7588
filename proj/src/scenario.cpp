#include "harborlink/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "harborlink/kernels/kernels.hpp"

namespace harborlink::scenario {

const char* to_string(ScenarioKind k) {
    return k == ScenarioKind::Single ? "single" : "multi";
}

void ScenarioConfig::validate() const {
    if (area_width_m <= 0.0 || area_length_m <= 0.0) {
        throw std::invalid_argument("area dimensions must be > 0");
    }
    if (!blocking_ship.valid()) throw std::invalid_argument("blocking ship dimensions must be > 0");
    if (n_victims < 1) throw std::invalid_argument("victim count must be >= 1");
    if (kind == ScenarioKind::Single && n_victims != 1) {
        throw std::invalid_argument("single-victim scenario requires exactly one ship");
    }
    if (ship_speed_mps < 0.0) throw std::invalid_argument("ship speed must be >= 0");
    if (slot_duration_s <= 0.0) throw std::invalid_argument("slot duration must be > 0");
    if (n_slots < 0) throw std::invalid_argument("slot count must be >= 0");
    if (victim_antenna_height_m < 0.0) throw std::invalid_argument("antenna height must be >= 0");
    if (ls_height_m <= 0.0) throw std::invalid_argument("landing spot height must be > 0");
    if (uav_max_altitude_m <= 0.0) throw std::invalid_argument("altitude ceiling must be > 0");
    if (kind == ScenarioKind::Single && single_heading_x == 0.0 && single_heading_y == 0.0) {
        throw std::invalid_argument("single-victim heading must be nonzero");
    }
    channel.validate();
    energy.validate();
}

namespace {

std::vector<Vec3> antenna_positions(const SimState& state) {
    std::vector<Vec3> out(state.ships.size());
    for (std::size_t i = 0; i < state.ships.size(); ++i) out[i] = state.ships[i].position;
    return out;
}

UavPose initial_pose(const ScenarioConfig& config, std::span<const Vec3> antennas,
                     std::span<const Box3> obstacles) {
    switch (config.architecture) {
        case Architecture::Nr:
            return UavPose{}; // Absent
        case Architecture::Fpr:
            return positioning::position_fpr(config.bs, antennas,
                                             config.kind == ScenarioKind::Multi,
                                             config.area_width_m, config.area_length_m,
                                             obstacles, config.uav_max_altitude_m);
        case Architecture::Cfmr:
            return positioning::position_cfmr(config.bs, antennas, obstacles,
                                              config.uav_max_altitude_m);
        case Architecture::Lsmr:
            return positioning::position_lsmr(antennas, config.ls_height_m);
    }
    return UavPose{};
}

void reflect_axis(double& p, double& heading, double lo, double hi) {
    while (p < lo || p > hi) {
        if (p < lo) {
            p = 2.0 * lo - p;
            heading = -heading;
        } else {
            p = 2.0 * hi - p;
            heading = -heading;
        }
    }
}

struct MoveOutcome {
    Vec3 position;
    double mobility_j = 0.0;
    double flight_time_s = 0.0;
    bool arrived = false;
};

/// Moves from `from` toward `to` at horizontal speed v_h (climb and
/// descent at the configured vertical speeds), horizontal leg first,
/// capped by the slot budget. Residual distance carries into the next
/// slot through the returned interpolated position.
MoveOutcome fly_towards(const Vec3& from, const Vec3& to, double v_h, double slot_s,
                        const energy::EnergyParams& ep) {
    MoveOutcome out;
    out.position = from;

    const double dx = to.x - from.x;
    const double dy = to.y - from.y;
    const double horizontal = std::hypot(dx, dy);
    const double dv = to.z - from.z;

    double t_used = 0.0;
    double covered_h = 0.0;
    double covered_v = 0.0;
    bool horizontal_done = horizontal == 0.0;
    bool vertical_done = dv == 0.0;

    if (!horizontal_done) {
        const double t_need = horizontal / v_h;
        if (t_need <= slot_s) {
            out.position.x = to.x;
            out.position.y = to.y;
            covered_h = horizontal;
            t_used = t_need;
            horizontal_done = true;
        } else {
            const double frac = slot_s / t_need;
            out.position.x = from.x + dx * frac;
            out.position.y = from.y + dy * frac;
            covered_h = horizontal * frac;
            t_used = slot_s;
        }
    }
    if (horizontal_done && !vertical_done && t_used < slot_s) {
        const double v_vert = dv > 0.0 ? ep.ascend_speed_mps : ep.descend_speed_mps;
        const double t_need = std::abs(dv) / v_vert;
        if (t_used + t_need <= slot_s) {
            out.position.z = to.z;
            covered_v = dv;
            t_used += t_need;
            vertical_done = true;
        } else {
            const double frac = (slot_s - t_used) / t_need;
            out.position.z = from.z + dv * frac;
            covered_v = dv * frac;
            t_used = slot_s;
        }
    }

    out.flight_time_s = t_used;
    out.arrived = horizontal_done && vertical_done;
    if (covered_h != 0.0 || covered_v != 0.0) {
        out.mobility_j = energy::mobility_energy(ep, covered_h, covered_v, v_h);
    }
    return out;
}

} // namespace

SimState init_scenario(const ScenarioConfig& config) {
    config.validate();

    SimState state;
    state.config = config;
    state.obstacles = {config.blocking_ship};

    if (config.kind == ScenarioKind::Single) {
        const double norm = std::hypot(config.single_heading_x, config.single_heading_y);
        ShipState ship;
        ship.id = 0;
        ship.position = {config.single_start_x_m, config.single_start_y_m,
                         config.victim_antenna_height_m};
        ship.heading_x = config.single_heading_x / norm;
        ship.heading_y = config.single_heading_y / norm;
        ship.speed_mps = config.ship_speed_mps;
        state.ships.push_back(ship);
    } else {
        std::mt19937_64 rng(config.seed);
        std::uniform_real_distribution<double> ux(0.0, config.area_width_m);
        std::uniform_real_distribution<double> uy(0.0, config.area_length_m);
        state.ships.reserve(static_cast<std::size_t>(config.n_victims));
        for (int i = 0; i < config.n_victims; ++i) {
            ShipState ship;
            ship.id = static_cast<std::uint32_t>(i);
            ship.position = {ux(rng), uy(rng), config.victim_antenna_height_m};
            // Two opposite alongshore directions, alternating by ship id.
            ship.heading_x = 0.0;
            ship.heading_y = (i % 2 == 0) ? 1.0 : -1.0;
            ship.speed_mps = config.ship_speed_mps;
            state.ships.push_back(ship);
        }
    }

    const std::vector<Vec3> antennas = antenna_positions(state);
    state.uav = initial_pose(config, antennas, state.obstacles);
    state.next_slot = 0;
    return state;
}

void step_ships(SimState& state, double dt_s) {
    if (dt_s <= 0.0) throw std::invalid_argument("step_ships: dt must be > 0");
    for (ShipState& ship : state.ships) {
        ship.position.x += ship.heading_x * ship.speed_mps * dt_s;
        ship.position.y += ship.heading_y * ship.speed_mps * dt_s;
        reflect_axis(ship.position.x, ship.heading_x, 0.0, state.config.area_width_m);
        reflect_axis(ship.position.y, ship.heading_y, 0.0, state.config.area_length_m);
    }
}

SlotResult simulate_slot(SimState& state, int slot_index) {
    const ScenarioConfig& cfg = state.config;
    const channel::ChannelParams& ch = cfg.channel;

    step_ships(state, cfg.slot_duration_s);
    const std::vector<Vec3> antennas = antenna_positions(state);
    const std::size_t n = antennas.size();

    // A perched relay rides its host; refresh the pose before deciding
    // whether to reposition.
    if (state.uav.mode == UavPose::Mode::Perched && state.uav.host) {
        const Vec3& host_pos = state.ships[*state.uav.host].position;
        state.uav.position = {host_pos.x, host_pos.y, cfg.ls_height_m};
    }

    double mobility_j = 0.0;
    double hover_j = 0.0;
    double flight_time_s = 0.0;

    switch (cfg.architecture) {
        case Architecture::Nr:
            break;
        case Architecture::Fpr:
            // Pose fixed at the slot-zero placement; hover for the slot.
            hover_j = energy::hover_energy(cfg.energy, cfg.slot_duration_s);
            break;
        case Architecture::Cfmr: {
            const UavPose target = positioning::position_cfmr(cfg.bs, antennas, state.obstacles,
                                                              cfg.uav_max_altitude_m);
            const MoveOutcome move =
                fly_towards(state.uav.position, target.position,
                            cfg.energy.horizontal_speed_cfmr_mps, cfg.slot_duration_s, cfg.energy);
            mobility_j = move.mobility_j;
            flight_time_s = move.flight_time_s;
            state.uav.position = move.position;
            state.uav.mode = move.arrived ? UavPose::Mode::Hovering : UavPose::Mode::InTransit;
            state.uav.host.reset();
            if (move.arrived) {
                hover_j = energy::hover_energy(cfg.energy, cfg.slot_duration_s - flight_time_s);
            }
            break;
        }
        case Architecture::Lsmr: {
            const UavPose target = positioning::position_lsmr(antennas, cfg.ls_height_m);
            const bool riding =
                state.uav.mode == UavPose::Mode::Perched && state.uav.host == target.host;
            if (riding) {
                state.uav = target;
            } else {
                const MoveOutcome move =
                    fly_towards(state.uav.position, target.position,
                                cfg.energy.horizontal_speed_lsmr_mps, cfg.slot_duration_s,
                                cfg.energy);
                mobility_j = move.mobility_j;
                flight_time_s = move.flight_time_s;
                state.uav.position = move.position;
                state.uav.mode = move.arrived ? UavPose::Mode::Perched : UavPose::Mode::InTransit;
                state.uav.host = target.host; // landing target while in transit
            }
            break; // perching architecture never hovers
        }
    }

    // Link evaluation. SNR folds into c / d^2 per line-of-sight class;
    // the batch kernels do the array arithmetic.
    const double noise_dbm = channel::noise_power_dbm(ch);
    const double noise_mw = channel::db_to_linear(noise_dbm);
    const double wave_factor =
        ch.propagation_speed / (4.0 * std::numbers::pi * ch.carrier_frequency_hz);
    auto snr_coeff = [&](double tx_power_dbm, double gains_dbi, double extra_loss_db) {
        return channel::db_to_linear(tx_power_dbm + gains_dbi - noise_dbm - extra_loss_db) *
               wave_factor * wave_factor;
    };
    const double guard_d2 = ch.min_distance_m * ch.min_distance_m;

    std::vector<double> xs(n), ys(n), zs(n);
    std::vector<std::uint8_t> direct_nlos(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = antennas[i].x;
        ys[i] = antennas[i].y;
        zs[i] = antennas[i].z;
        direct_nlos[i] =
            geometry::classify_los(cfg.bs, antennas[i], state.obstacles) == LosState::Nlos ? 1 : 0;
    }

    std::vector<double> d2_direct(n), snr_direct(n);
    kernels::squared_distances(xs.data(), ys.data(), zs.data(), n, cfg.bs.x, cfg.bs.y, cfg.bs.z,
                               d2_direct.data());
    const double bs_ship_gains = ch.bs_antenna_gain_dbi + ch.ship_antenna_gain_dbi;
    kernels::snr_from_squared_distance(
        d2_direct.data(), direct_nlos.data(), n,
        snr_coeff(ch.bs_tx_power_dbm, bs_ship_gains, ch.extra_loss_los_db),
        snr_coeff(ch.bs_tx_power_dbm, bs_ship_gains, ch.extra_loss_nlos_db), snr_direct.data());

    SlotResult result;
    result.slot_index = slot_index;
    result.ships.resize(n);

    auto check_near_field = [&](double d2) {
        if (d2 < guard_d2) {
            throw std::domain_error("link distance below near-field guard");
        }
    };

    if (cfg.architecture == Architecture::Nr) {
        for (std::size_t i = 0; i < n; ++i) {
            check_near_field(d2_direct[i]);
            ShipSlotStats& s = result.ships[i];
            s.snr_direct = snr_direct[i];
            s.direct_los = direct_nlos[i] ? LosState::Nlos : LosState::Los;
            s.rx_power_dbm = channel::linear_to_db(snr_direct[i] * noise_mw);
            s.rate_bpshz = channel::apply_sensitivity(
                s.rx_power_dbm, std::log2(1.0 + snr_direct[i]), ch);
        }
    } else {
        const Vec3 relay = state.uav.position;
        const LosState los_br = geometry::classify_los(cfg.bs, relay, state.obstacles);
        const double d_br = geometry::distance3d(cfg.bs, relay);
        check_near_field(d_br * d_br);
        const double backhaul_extra =
            los_br == LosState::Los ? ch.extra_loss_los_db : ch.extra_loss_nlos_db;
        const double snr_backhaul =
            snr_coeff(ch.bs_tx_power_dbm, ch.bs_antenna_gain_dbi + ch.relay_antenna_gain_dbi,
                      backhaul_extra) /
            (d_br * d_br);

        std::vector<std::uint8_t> access_nlos(n);
        for (std::size_t i = 0; i < n; ++i) {
            access_nlos[i] =
                geometry::classify_los(relay, antennas[i], state.obstacles) == LosState::Nlos ? 1
                                                                                              : 0;
        }
        std::vector<double> d2_access(n), snr_access(n), snr_df(n);
        kernels::squared_distances(xs.data(), ys.data(), zs.data(), n, relay.x, relay.y, relay.z,
                                   d2_access.data());
        const double relay_ship_gains = ch.relay_antenna_gain_dbi + ch.ship_antenna_gain_dbi;
        kernels::snr_from_squared_distance(
            d2_access.data(), access_nlos.data(), n,
            snr_coeff(ch.relay_tx_power_dbm, relay_ship_gains, ch.extra_loss_los_db),
            snr_coeff(ch.relay_tx_power_dbm, relay_ship_gains, ch.extra_loss_nlos_db),
            snr_access.data());

        const std::vector<double> backhaul(n, snr_backhaul);
        kernels::df_combine(backhaul.data(), snr_direct.data(), snr_access.data(), n,
                            snr_df.data());

        for (std::size_t i = 0; i < n; ++i) {
            check_near_field(d2_direct[i]);
            check_near_field(d2_access[i]);
            ShipSlotStats& s = result.ships[i];
            s.snr_backhaul = snr_backhaul;
            s.snr_direct = snr_direct[i];
            s.snr_access = snr_access[i];
            s.direct_los = direct_nlos[i] ? LosState::Nlos : LosState::Los;
            s.rx_power_dbm =
                channel::linear_to_db((snr_direct[i] + snr_access[i]) * noise_mw);
            s.rate_bpshz = channel::apply_sensitivity(
                s.rx_power_dbm, 0.5 * std::log2(1.0 + snr_df[i]), ch);
        }
    }

    double rate_sum = 0.0;
    for (const ShipSlotStats& s : result.ships) rate_sum += s.rate_bpshz;
    result.avg_rate_bpshz = rate_sum / static_cast<double>(n);
    result.uav_pose = state.uav;

    result.energy.slot_index = slot_index;
    if (cfg.architecture != Architecture::Nr) {
        result.energy.comm_j =
            energy::comm_energy(cfg.energy, static_cast<int>(n), cfg.slot_duration_s);
        result.energy.hover_j = hover_j;
        result.energy.mobility_j = mobility_j;
    }
    return result;
}

TimeSeries run_scenario(const ScenarioConfig& config) {
    SimState state = init_scenario(config);
    TimeSeries series;
    series.slots.reserve(static_cast<std::size_t>(config.n_slots));
    series.cumulative_energy_j.reserve(static_cast<std::size_t>(config.n_slots));
    double cumulative = 0.0;
    for (int t = 0; t < config.n_slots; ++t) {
        series.slots.push_back(simulate_slot(state, t));
        cumulative += series.slots.back().energy.total_j();
        series.cumulative_energy_j.push_back(cumulative);
    }
    return series;
}

AggregateResult monte_carlo(const ScenarioConfig& config, int n_runs, int threads) {
    if (n_runs < 1) throw std::invalid_argument("monte_carlo: need at least one run");
    AggregateResult agg;
    agg.runs.resize(static_cast<std::size_t>(n_runs));

    auto run_range = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            ScenarioConfig run_config = config;
            run_config.seed = config.seed + static_cast<std::uint64_t>(i);
            agg.runs[static_cast<std::size_t>(i)] = run_scenario(run_config);
        }
    };

    const int worker_count = std::max(1, std::min(threads, n_runs));
    if (worker_count == 1) {
        run_range(0, n_runs);
    } else {
        // Runs are independent; results land in their own slots, so the
        // merge is deterministic regardless of completion order.
        std::vector<std::thread> workers;
        const int chunk = (n_runs + worker_count - 1) / worker_count;
        for (int w = 0; w < worker_count; ++w) {
            const int begin = w * chunk;
            const int end = std::min(n_runs, begin + chunk);
            if (begin < end) workers.emplace_back(run_range, begin, end);
        }
        for (std::thread& t : workers) t.join();
    }

    const std::size_t n_slots = static_cast<std::size_t>(config.n_slots);
    agg.mean_rate_per_slot.assign(n_slots, 0.0);
    agg.mean_cumulative_energy_j.assign(n_slots, 0.0);
    for (const TimeSeries& run : agg.runs) {
        for (std::size_t s = 0; s < n_slots; ++s) {
            agg.mean_rate_per_slot[s] += run.slots[s].avg_rate_bpshz;
            agg.mean_cumulative_energy_j[s] += run.cumulative_energy_j[s];
            for (const ShipSlotStats& ship : run.slots[s].ships) {
                agg.pooled_rates.push_back(ship.rate_bpshz);
            }
        }
    }
    for (std::size_t s = 0; s < n_slots; ++s) {
        agg.mean_rate_per_slot[s] /= static_cast<double>(n_runs);
        agg.mean_cumulative_energy_j[s] /= static_cast<double>(n_runs);
    }
    double pooled_sum = 0.0;
    for (double r : agg.pooled_rates) pooled_sum += r;
    agg.mean_rate = agg.pooled_rates.empty() ? 0.0 : pooled_sum / static_cast<double>(agg.pooled_rates.size());
    return agg;
}

} // namespace harborlink::scenario
