#pragma once

namespace harborlink::linkbudget {

/// Inputs of the analytic rate-versus-distance chain. Everything is
/// linear (watts, kelvin, hertz); dB never enters this module.
struct LinkBudgetParams {
    double tx_power_w = 31.6228;     // P_t (45 dBm)
    double tx_gain = 1.0;            // G_t
    double rx_gain = 1.0;            // G_r
    double wavelength_m = 0.0516883; // lambda (5.8 GHz)
    double temperature_k = 290.0;    // T
    double boltzmann = 1.380649e-23; // k, J/K
    double ebn0 = 10.0;              // required Eb/N0, linear
    double bandwidth_hz = 10e6;      // B

    void validate() const; // throws std::invalid_argument
};

/// Every intermediate of the chain, so each step is separately testable
/// and printable.
struct LinkBudgetRow {
    double distance_m = 0.0;
    double fspl = 0.0;        // (4 pi d / lambda)^2
    double eirp_w = 0.0;      // P_t G_t
    double rx_power_w = 0.0;  // EIRP * G_r / FSPL
    double rx_over_n = 0.0;   // P_r / (k T B)
    double rx_over_n0 = 0.0;  // P_r / (k T), Hz
    double rate_bps = 0.0;    // (P_r / N_0) / (Eb/N0)
};

double fspl_linear(double distance_m, double wavelength_m);

double eirp(const LinkBudgetParams& p);

/// EIRP * G_r / FSPL. The lambda/(4 pi d) squared form agrees with this
/// one to rounding error; a test pins the agreement.
double received_power(const LinkBudgetParams& p, double distance_m);

/// Closed-form achievable rate R = EIRP * (G_r / T) / (k * FSPL * Eb/N0),
/// using the squared FSPL consistently with received_power.
double analytic_rate(const LinkBudgetParams& p, double distance_m);

/// Evaluates the whole chain at one distance.
LinkBudgetRow evaluate(const LinkBudgetParams& p, double distance_m);

} // namespace harborlink::linkbudget
