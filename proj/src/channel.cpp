#include "harborlink/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace harborlink::channel {

void ChannelParams::validate() const {
    if (carrier_frequency_hz <= 0.0) throw std::invalid_argument("carrier frequency must be > 0");
    if (bandwidth_hz <= 0.0) throw std::invalid_argument("bandwidth must be > 0");
    if (extra_loss_los_db < 0.0) throw std::invalid_argument("LoS additional loss must be >= 0");
    if (extra_loss_nlos_db < extra_loss_los_db) {
        throw std::invalid_argument("NLoS additional loss must be >= LoS additional loss");
    }
    if (propagation_speed <= 0.0) throw std::invalid_argument("propagation speed must be > 0");
    if (min_distance_m <= 0.0) throw std::invalid_argument("near-field guard must be > 0");
}

double path_loss_db(const ChannelParams& params, double distance_m, LosState los) {
    if (distance_m < params.min_distance_m) {
        throw std::domain_error("path_loss_db: distance below near-field guard");
    }
    const double extra =
        (los == LosState::Los) ? params.extra_loss_los_db : params.extra_loss_nlos_db;
    const double fspl = 20.0 * std::log10(4.0 * std::numbers::pi * params.carrier_frequency_hz *
                                          distance_m / params.propagation_speed);
    return fspl + extra;
}

double noise_power_dbm(const ChannelParams& params) {
    return -174.0 + 10.0 * std::log10(params.bandwidth_hz) + params.noise_figure_db;
}

LinkGain link_gain(const ChannelParams& params, const Vec3& tx, const Vec3& rx,
                   std::span<const Box3> obstacles) {
    LinkGain g;
    g.los = geometry::classify_los(tx, rx, obstacles);
    g.path_loss_db = path_loss_db(params, geometry::distance3d(tx, rx), g.los);
    g.gain_linear = db_to_linear(-g.path_loss_db);
    return g;
}

namespace {

double hop_snr_linear(const ChannelParams& params, double tx_power_dbm, double gain_dbi_sum,
                      double gain_linear) {
    const double noise_lin = db_to_linear(noise_power_dbm(params));
    return db_to_linear(tx_power_dbm + gain_dbi_sum) * gain_linear / noise_lin;
}

} // namespace

SnrReport snr_siso(const ChannelParams& params, const LinkGain& gain_bv) {
    SnrReport r;
    r.components.bs_to_victim = hop_snr_linear(
        params, params.bs_tx_power_dbm,
        params.bs_antenna_gain_dbi + params.ship_antenna_gain_dbi, gain_bv.gain_linear);
    r.snr_linear = r.components.bs_to_victim;
    r.snr_db = linear_to_db(r.snr_linear);
    r.rx_power_dbm = linear_to_db(r.snr_linear * db_to_linear(noise_power_dbm(params)));
    return r;
}

SnrReport snr_df(const ChannelParams& params, const LinkGain& gain_br,
                 const LinkGain& gain_bv, const LinkGain& gain_rv) {
    SnrReport r;
    r.components.bs_to_relay = hop_snr_linear(
        params, params.bs_tx_power_dbm,
        params.bs_antenna_gain_dbi + params.relay_antenna_gain_dbi, gain_br.gain_linear);
    r.components.bs_to_victim = hop_snr_linear(
        params, params.bs_tx_power_dbm,
        params.bs_antenna_gain_dbi + params.ship_antenna_gain_dbi, gain_bv.gain_linear);
    r.components.relay_to_victim = hop_snr_linear(
        params, params.relay_tx_power_dbm,
        params.relay_antenna_gain_dbi + params.ship_antenna_gain_dbi, gain_rv.gain_linear);
    r.snr_linear = std::min(r.components.bs_to_relay,
                            r.components.bs_to_victim + r.components.relay_to_victim);
    r.snr_db = linear_to_db(r.snr_linear);
    // The victim hears both transmission phases; its total received signal
    // power is the direct arm plus the relay arm.
    const double noise_lin = db_to_linear(noise_power_dbm(params));
    r.rx_power_dbm = linear_to_db(
        (r.components.bs_to_victim + r.components.relay_to_victim) * noise_lin);
    return r;
}

double rate_siso(const SnrReport& snr) {
    return std::log2(1.0 + snr.snr_linear);
}

double rate_df(const SnrReport& snr) {
    return 0.5 * std::log2(1.0 + snr.snr_linear);
}

double apply_sensitivity(double rx_power_dbm, double rate_bpshz, const ChannelParams& params) {
    return rx_power_dbm < params.rx_sensitivity_dbm ? 0.0 : rate_bpshz;
}

} // namespace harborlink::channel
