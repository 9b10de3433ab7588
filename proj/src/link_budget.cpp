#include "harborlink/link_budget.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace harborlink::linkbudget {

void LinkBudgetParams::validate() const {
    const double fields[] = {tx_power_w, tx_gain,    rx_gain, wavelength_m,
                             temperature_k, boltzmann, ebn0,    bandwidth_hz};
    for (double v : fields) {
        if (!(v > 0.0)) throw std::invalid_argument("link budget parameters must be > 0");
    }
}

double fspl_linear(double distance_m, double wavelength_m) {
    if (distance_m < 1.0) throw std::domain_error("fspl_linear: distance below 1 m guard");
    const double ratio = 4.0 * std::numbers::pi * distance_m / wavelength_m;
    return ratio * ratio;
}

double eirp(const LinkBudgetParams& p) {
    return p.tx_power_w * p.tx_gain;
}

double received_power(const LinkBudgetParams& p, double distance_m) {
    return eirp(p) * p.rx_gain / fspl_linear(distance_m, p.wavelength_m);
}

double analytic_rate(const LinkBudgetParams& p, double distance_m) {
    return eirp(p) * (p.rx_gain / p.temperature_k) /
           (p.boltzmann * fspl_linear(distance_m, p.wavelength_m) * p.ebn0);
}

LinkBudgetRow evaluate(const LinkBudgetParams& p, double distance_m) {
    LinkBudgetRow row;
    row.distance_m = distance_m;
    row.fspl = fspl_linear(distance_m, p.wavelength_m);
    row.eirp_w = eirp(p);
    row.rx_power_w = received_power(p, distance_m);
    const double n0 = p.boltzmann * p.temperature_k;
    row.rx_over_n = row.rx_power_w / (n0 * p.bandwidth_hz);
    row.rx_over_n0 = row.rx_power_w / n0;
    row.rate_bps = analytic_rate(p, distance_m);
    return row;
}

} // namespace harborlink::linkbudget
