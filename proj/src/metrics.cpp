#include "harborlink/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace harborlink::metrics {

double average_rate(std::span<const double> per_ship_rates) {
    if (per_ship_rates.empty()) throw std::invalid_argument("average_rate: empty rate list");
    double sum = 0.0;
    for (double r : per_ship_rates) sum += r;
    return sum / static_cast<double>(per_ship_rates.size());
}

std::vector<double> cumulative_energy(std::span<const energy::EnergyLedgerEntry> entries) {
    std::vector<double> out;
    out.reserve(entries.size());
    double total = 0.0;
    for (const energy::EnergyLedgerEntry& e : entries) {
        total += e.total_j();
        out.push_back(total);
    }
    return out;
}

RateCdf::RateCdf(std::vector<double> samples) : samples_(std::move(samples)) {
    if (samples_.empty()) throw std::invalid_argument("RateCdf: empty sample set");
    std::sort(samples_.begin(), samples_.end());
}

double RateCdf::cdf(double x) const {
    const auto above = std::upper_bound(samples_.begin(), samples_.end(), x);
    return static_cast<double>(above - samples_.begin()) / static_cast<double>(samples_.size());
}

double RateCdf::quantile(double p) const {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("RateCdf::quantile: p outside [0, 1]");
    if (p == 0.0) return samples_.front();
    const auto n = static_cast<double>(samples_.size());
    const std::size_t rank = static_cast<std::size_t>(std::ceil(p * n));
    return samples_[std::min(rank, samples_.size()) - 1];
}

double percent_delta(double a, double b) {
    if (b == 0.0) throw std::invalid_argument("percent_delta: zero baseline");
    return 100.0 * (a - b) / b;
}

} // namespace harborlink::metrics
