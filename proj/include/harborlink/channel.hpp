#pragma once

#include <span>

#include "harborlink/geometry.hpp"

namespace harborlink::channel {

using geometry::Box3;
using geometry::LosState;
using geometry::Vec3;

/// Propagation and radio parameters. All antenna gains default to 0 dBi;
/// extra_loss_* is the fixed additional loss applied on top of free-space
/// path loss depending on the line-of-sight state.
struct ChannelParams {
    double carrier_frequency_hz = 5.8e9;
    double bandwidth_hz = 10e6;
    double noise_figure_db = 10.0;
    double extra_loss_los_db = 1.0;
    double extra_loss_nlos_db = 20.0;
    double propagation_speed = 299'792'458.0; // m/s
    double bs_tx_power_dbm = 45.0;            // P_s,t
    double relay_tx_power_dbm = 15.0;         // P_2,t
    double rx_sensitivity_dbm = -94.5;
    double bs_antenna_gain_dbi = 0.0;
    double relay_antenna_gain_dbi = 0.0;
    double ship_antenna_gain_dbi = 0.0;
    double min_distance_m = 1.0; // near-field guard

    void validate() const; // throws std::invalid_argument
};

/// Path loss and the matching linear power gain |h|^2 of one link.
struct LinkGain {
    double path_loss_db = 0.0;
    double gain_linear = 0.0; // 10^(-path_loss_db / 10)
    LosState los = LosState::Los;
};

/// SNR at a receiver plus the per-hop components that produced it.
/// For a SISO link only bs_to_victim is populated.
struct SnrReport {
    double snr_linear = 0.0;
    double snr_db = 0.0;
    double rx_power_dbm = 0.0; // total received signal power
    struct Components {
        double bs_to_relay = 0.0;  // linear
        double bs_to_victim = 0.0; // linear
        double relay_to_victim = 0.0; // linear
    } components;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

/// Free-space path loss in dB plus the additional loss for the given
/// line-of-sight state. Rejects d below the near-field guard.
double path_loss_db(const ChannelParams& params, double distance_m, LosState los);

/// Thermal noise floor: -174 dBm/Hz + 10 log10(B) + NF.
double noise_power_dbm(const ChannelParams& params);

/// Classifies line of sight against the obstacles, then evaluates the
/// deterministic path-loss-driven channel gain (no fading draw).
LinkGain link_gain(const ChannelParams& params, const Vec3& tx, const Vec3& rx,
                   std::span<const Box3> obstacles);

/// Single-hop SNR of the direct BS-to-victim link.
SnrReport snr_siso(const ChannelParams& params, const LinkGain& gain_bv);

/// Decode-and-forward SNR: min(backhaul, direct + relay access), each hop
/// scaled by its transmitter's power over the noise floor.
SnrReport snr_df(const ChannelParams& params, const LinkGain& gain_br,
                 const LinkGain& gain_bv, const LinkGain& gain_rv);

/// Spectral efficiency of the direct link, log2(1 + SNR) in bps/Hz.
double rate_siso(const SnrReport& snr);

/// DF spectral efficiency; the 1/2 accounts for the two-phase relay
/// transmission occupying twice the air time.
double rate_df(const SnrReport& snr);

/// Zeroes the rate when total received power is below the receiver
/// reference sensitivity (>= keeps the rate).
double apply_sensitivity(double rx_power_dbm, double rate_bpshz, const ChannelParams& params);

} // namespace harborlink::channel
