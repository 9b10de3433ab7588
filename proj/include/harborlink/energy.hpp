#pragma once

#include <cstdint>

namespace harborlink::energy {

/// Quadrotor energy parameters. Thrust must equal
/// (frame + payload weight) * gravity.
struct EnergyParams {
    double rotor_count = 4.0;          // N
    double thrust_n = 34.3;            // V
    double frame_weight_kg = 1.5;      // W
    double payload_weight_kg = 2.0;    // m, battery + payload
    double gravity = 9.8;              // N/kg
    double rotor_radius_m = 0.4;       // r
    double air_density = 1.225;        // rho, kg/m^3
    double relay_tx_power_w = 0.0316;  // P_2,t
    double circuit_power_w = 0.01;     // P_cu
    double drag_coefficient = 0.025;   // C_x
    double reference_area_m2 = 0.192;  // A
    double rotor_chord_m = 0.022;      // c_b, carried but unused (see docs)
    double angular_velocity_rad_s = 16.0; // w, carried but unused
    double ascend_speed_mps = 10.0;    // v_a
    double descend_speed_mps = 10.0;   // v_d
    double horizontal_speed_lsmr_mps = 27.7; // v_h
    double horizontal_speed_cfmr_mps = 10.0; // v_c

    void validate() const; // throws std::invalid_argument
};

/// Per-slot energy breakdown in joules.
struct EnergyLedgerEntry {
    std::int64_t slot_index = 0;
    double comm_j = 0.0;
    double hover_j = 0.0;
    double mobility_j = 0.0;

    double total_j() const { return comm_j + hover_j + mobility_j; }
};

/// Communication energy over a slot: (n_served * P_relay + P_circuit) * t.
double comm_energy(const EnergyParams& p, int n_served, double t_com_s);

/// Hover power N * V^(3/2) / sqrt(2 rho pi r^2).
double hover_power(const EnergyParams& p);

double hover_energy(const EnergyParams& p, double t_hover_s);

struct MobilityPowers {
    double horizontal_w = 0.0; // P_h at the requested speed
    double ascend_w = 0.0;     // P_a
    double descend_w = 0.0;    // P_d
};

/// Instantaneous propulsion powers.
///
/// Horizontal flight uses momentum-theory induced power, which falls off
/// with airspeed (v_i solves Glauert's equation; closed form below), plus
/// the parasitic fuselage drag term 1/2 rho C_x A v^3:
///   P_h(v) = P_hover * sqrt(sqrt(1 + v^4/(4 v0^4)) - v^2/(2 v0^2)) +
///            1/2 rho C_x A v^3,   v0 = sqrt(V / (2 rho N pi r^2))
/// Ascent adds climb work V*v_a on top of hover; descent recovers V*v_d,
/// clamped at zero.
MobilityPowers mobility_powers(const EnergyParams& p, double v_horizontal_mps);

/// Energy of one movement leg, horizontal distance d plus altitude change
/// delta_h (signed, up positive). Descent costs positive energy: the
/// descending branch contributes -P_d * delta_h / v_d with delta_h < 0.
double mobility_energy(const EnergyParams& p, double d_horizontal_m, double delta_h_m,
                       double v_horizontal_mps);

} // namespace harborlink::energy
