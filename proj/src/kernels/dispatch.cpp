#include "harborlink/kernels/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace harborlink::kernels {

namespace {

#if defined(__x86_64__) || defined(_M_X64)
bool cpu_has_avx2() { return __builtin_cpu_supports("avx2") != 0; }
#else
bool cpu_has_avx2() { return false; }
#endif

Backend resolve_initial_backend() {
    if (const char* env = std::getenv("HARBORLINK_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
        if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Backend::Avx2;
        return Backend::Scalar; // unknown or unsupported request: stay safe
    }
    return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& backend_slot() {
    static std::atomic<Backend> slot{resolve_initial_backend()};
    return slot;
}

} // namespace

const char* to_string(Backend b) {
    return b == Backend::Avx2 ? "avx2" : "scalar";
}

bool backend_supported(Backend b) {
    return b == Backend::Scalar || cpu_has_avx2();
}

Backend active_backend() {
    return backend_slot().load(std::memory_order_relaxed);
}

void set_backend(Backend b) {
    if (!backend_supported(b)) {
        throw std::runtime_error("kernel backend not supported on this CPU");
    }
    backend_slot().store(b, std::memory_order_relaxed);
}

void squared_distances(const double* xs, const double* ys, const double* zs, std::size_t n,
                       double px, double py, double pz, double* out) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active_backend() == Backend::Avx2) {
        detail::squared_distances_avx2(xs, ys, zs, n, px, py, pz, out);
        return;
    }
#endif
    detail::squared_distances_scalar(xs, ys, zs, n, px, py, pz, out);
}

void snr_from_squared_distance(const double* d2, const std::uint8_t* nlos, std::size_t n,
                               double c_los, double c_nlos, double* out) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active_backend() == Backend::Avx2) {
        detail::snr_from_squared_distance_avx2(d2, nlos, n, c_los, c_nlos, out);
        return;
    }
#endif
    detail::snr_from_squared_distance_scalar(d2, nlos, n, c_los, c_nlos, out);
}

void df_combine(const double* backhaul, const double* direct, const double* access,
                std::size_t n, double* out) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active_backend() == Backend::Avx2) {
        detail::df_combine_avx2(backhaul, direct, access, n, out);
        return;
    }
#endif
    detail::df_combine_scalar(backhaul, direct, access, n, out);
}

void assign_nearest(const double* px, const double* py, std::size_t n, const double* cx,
                    const double* cy, std::size_t k, std::uint32_t* assignment, double* best_d2) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active_backend() == Backend::Avx2) {
        detail::assign_nearest_avx2(px, py, n, cx, cy, k, assignment, best_d2);
        return;
    }
#endif
    detail::assign_nearest_scalar(px, py, n, cx, cy, k, assignment, best_d2);
}

} // namespace harborlink::kernels
