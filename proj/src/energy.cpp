#include "harborlink/energy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace harborlink::energy {

void EnergyParams::validate() const {
    const double positives[] = {rotor_count,     thrust_n,        frame_weight_kg,
                                payload_weight_kg, gravity,       rotor_radius_m,
                                air_density,     relay_tx_power_w, circuit_power_w,
                                drag_coefficient, reference_area_m2, rotor_chord_m,
                                angular_velocity_rad_s, ascend_speed_mps, descend_speed_mps,
                                horizontal_speed_lsmr_mps, horizontal_speed_cfmr_mps};
    for (double v : positives) {
        if (!(v > 0.0)) throw std::invalid_argument("energy parameters must be > 0");
    }
    const double weight_thrust = (frame_weight_kg + payload_weight_kg) * gravity;
    if (std::abs(weight_thrust - thrust_n) > 1e-6) {
        throw std::invalid_argument(
            "energy parameters inconsistent: thrust must equal (frame + payload) * gravity");
    }
}

double comm_energy(const EnergyParams& p, int n_served, double t_com_s) {
    if (n_served < 0) throw std::invalid_argument("comm_energy: negative ship count");
    if (t_com_s < 0.0) throw std::invalid_argument("comm_energy: negative duration");
    return (static_cast<double>(n_served) * p.relay_tx_power_w + p.circuit_power_w) * t_com_s;
}

double hover_power(const EnergyParams& p) {
    const double disk = std::numbers::pi * p.rotor_radius_m * p.rotor_radius_m;
    return p.rotor_count * std::pow(p.thrust_n, 1.5) / std::sqrt(2.0 * p.air_density * disk);
}

double hover_energy(const EnergyParams& p, double t_hover_s) {
    if (t_hover_s < 0.0) throw std::invalid_argument("hover_energy: negative duration");
    return hover_power(p) * t_hover_s;
}

MobilityPowers mobility_powers(const EnergyParams& p, double v_horizontal_mps) {
    if (!(v_horizontal_mps > 0.0)) {
        throw std::invalid_argument("mobility_powers: horizontal speed must be > 0");
    }
    const double p_hover = hover_power(p);
    const double disk = std::numbers::pi * p.rotor_radius_m * p.rotor_radius_m;
    // Hover-induced velocity with the thrust shared across the rotor disks.
    const double v0_sq = p.thrust_n / (2.0 * p.air_density * p.rotor_count * disk);
    const double ratio = v_horizontal_mps * v_horizontal_mps / (2.0 * v0_sq);
    const double induced_factor = std::sqrt(std::sqrt(1.0 + ratio * ratio) - ratio);
    const double parasite = 0.5 * p.air_density * p.drag_coefficient * p.reference_area_m2 *
                            v_horizontal_mps * v_horizontal_mps * v_horizontal_mps;

    MobilityPowers out;
    out.horizontal_w = p_hover * induced_factor + parasite;
    out.ascend_w = p_hover + p.thrust_n * p.ascend_speed_mps;
    out.descend_w = std::max(p_hover - p.thrust_n * p.descend_speed_mps, 0.0);
    return out;
}

double mobility_energy(const EnergyParams& p, double d_horizontal_m, double delta_h_m,
                       double v_horizontal_mps) {
    if (d_horizontal_m < 0.0) throw std::invalid_argument("mobility_energy: negative distance");
    const MobilityPowers powers = mobility_powers(p, v_horizontal_mps);
    double e = powers.horizontal_w * d_horizontal_m / v_horizontal_mps;
    if (delta_h_m >= 0.0) {
        e += powers.ascend_w * delta_h_m / p.ascend_speed_mps;
    } else {
        e += -powers.descend_w * delta_h_m / p.descend_speed_mps;
    }
    return e;
}

} // namespace harborlink::energy
