#pragma once

#include <cstddef>
#include <cstdint>

// Batch arithmetic used by the per-slot link evaluation and by the
// k-means assignment step. Every kernel exists as a scalar reference
// implementation and (on x86-64 with AVX2) a vectorized variant; the
// variants are bit-for-bit equivalent to the reference, which the test
// suite asserts. The backend is picked once at startup and can be
// overridden with the HARBORLINK_KERNEL environment variable
// ("scalar" or "avx2") or programmatically via set_backend().
namespace harborlink::kernels {

enum class Backend { Scalar, Avx2 };

const char* to_string(Backend b);
bool backend_supported(Backend b);
Backend active_backend();
void set_backend(Backend b); // throws std::runtime_error when unsupported

/// out[i] = |(xs,ys,zs)[i] - p|^2
void squared_distances(const double* xs, const double* ys, const double* zs, std::size_t n,
                       double px, double py, double pz, double* out);

/// out[i] = (nlos[i] ? c_nlos : c_los) / d2[i]
/// c_* fold transmit power, antenna gains, carrier constant and the
/// additional loss into one linear coefficient, so SNR = c / d^2.
void snr_from_squared_distance(const double* d2, const std::uint8_t* nlos, std::size_t n,
                               double c_los, double c_nlos, double* out);

/// out[i] = min(backhaul[i], direct[i] + access[i])
void df_combine(const double* backhaul, const double* direct, const double* access,
                std::size_t n, double* out);

/// Nearest-centroid assignment in 2D; ties go to the lowest centroid
/// index. best_d2 may be null.
void assign_nearest(const double* px, const double* py, std::size_t n, const double* cx,
                    const double* cy, std::size_t k, std::uint32_t* assignment, double* best_d2);

namespace detail {
// Scalar reference implementations; the dispatched entry points above
// resolve to these on the scalar backend, and the vector variants reuse
// them for remainder tails.
void squared_distances_scalar(const double* xs, const double* ys, const double* zs,
                              std::size_t n, double px, double py, double pz, double* out);
void snr_from_squared_distance_scalar(const double* d2, const std::uint8_t* nlos, std::size_t n,
                                      double c_los, double c_nlos, double* out);
void df_combine_scalar(const double* backhaul, const double* direct, const double* access,
                       std::size_t n, double* out);
void assign_nearest_scalar(const double* px, const double* py, std::size_t n, const double* cx,
                           const double* cy, std::size_t k, std::uint32_t* assignment,
                           double* best_d2);

#if defined(__x86_64__) || defined(_M_X64)
void squared_distances_avx2(const double* xs, const double* ys, const double* zs, std::size_t n,
                            double px, double py, double pz, double* out);
void snr_from_squared_distance_avx2(const double* d2, const std::uint8_t* nlos, std::size_t n,
                                    double c_los, double c_nlos, double* out);
void df_combine_avx2(const double* backhaul, const double* direct, const double* access,
                     std::size_t n, double* out);
void assign_nearest_avx2(const double* px, const double* py, std::size_t n, const double* cx,
                         const double* cy, std::size_t k, std::uint32_t* assignment,
                         double* best_d2);
#endif
} // namespace detail

} // namespace harborlink::kernels
