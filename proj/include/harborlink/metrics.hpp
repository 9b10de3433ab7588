#pragma once

#include <span>
#include <vector>

#include "harborlink/energy.hpp"

namespace harborlink::metrics {

/// Arithmetic mean; throws std::invalid_argument on an empty list.
double average_rate(std::span<const double> per_ship_rates);

/// Prefix sums of the per-slot totals; non-decreasing since every
/// component is non-negative.
std::vector<double> cumulative_energy(std::span<const energy::EnergyLedgerEntry> entries);

/// Empirical distribution over pooled rate samples.
class RateCdf {
public:
    explicit RateCdf(std::vector<double> samples); // throws on empty input

    const std::vector<double>& sorted_samples() const { return samples_; }

    /// F(x): fraction of samples <= x.
    double cdf(double x) const;

    /// Smallest sample s with F(s) >= p, for p in [0, 1].
    double quantile(double p) const;

private:
    std::vector<double> samples_; // ascending
};

/// 100 * (a - b) / b; throws std::invalid_argument when b == 0.
double percent_delta(double a, double b);

} // namespace harborlink::metrics
