#include "harborlink/kernels/kernels.hpp"

#include <limits>

namespace harborlink::kernels::detail {

void squared_distances_scalar(const double* xs, const double* ys, const double* zs,
                              std::size_t n, double px, double py, double pz, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - px;
        const double dy = ys[i] - py;
        const double dz = zs[i] - pz;
        out[i] = (dx * dx + dy * dy) + dz * dz;
    }
}

void snr_from_squared_distance_scalar(const double* d2, const std::uint8_t* nlos, std::size_t n,
                                      double c_los, double c_nlos, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = (nlos[i] ? c_nlos : c_los) / d2[i];
    }
}

void df_combine_scalar(const double* backhaul, const double* direct, const double* access,
                       std::size_t n, double* out) {
    for (std::size_t i = 0; i < n; ++i) {
        const double combined = direct[i] + access[i];
        out[i] = backhaul[i] < combined ? backhaul[i] : combined;
    }
}

void assign_nearest_scalar(const double* px, const double* py, std::size_t n, const double* cx,
                           const double* cy, std::size_t k, std::uint32_t* assignment,
                           double* best_d2) {
    for (std::size_t i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        std::uint32_t best_idx = 0;
        for (std::size_t j = 0; j < k; ++j) {
            const double dx = px[i] - cx[j];
            const double dy = py[i] - cy[j];
            const double d2 = dx * dx + dy * dy;
            if (d2 < best) { // strict: ties keep the lowest index
                best = d2;
                best_idx = static_cast<std::uint32_t>(j);
            }
        }
        assignment[i] = best_idx;
        if (best_d2 != nullptr) best_d2[i] = best;
    }
}

} // namespace harborlink::kernels::detail
