// AVX2 variants of the batch kernels. Arithmetic order matches the scalar
// reference exactly (no FMA contraction; this file builds with
// -ffp-contract=off), so results are bit-identical lane for lane.
#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "harborlink/kernels/kernels.hpp"

namespace harborlink::kernels::detail {

void squared_distances_avx2(const double* xs, const double* ys, const double* zs, std::size_t n,
                            double px, double py, double pz, double* out) {
    const __m256d vpx = _mm256_set1_pd(px);
    const __m256d vpy = _mm256_set1_pd(py);
    const __m256d vpz = _mm256_set1_pd(pz);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vpx);
        const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vpy);
        const __m256d dz = _mm256_sub_pd(_mm256_loadu_pd(zs + i), vpz);
        const __m256d sum_xy = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
        _mm256_storeu_pd(out + i, _mm256_add_pd(sum_xy, _mm256_mul_pd(dz, dz)));
    }
    squared_distances_scalar(xs + i, ys + i, zs + i, n - i, px, py, pz, out + i);
}

void snr_from_squared_distance_avx2(const double* d2, const std::uint8_t* nlos, std::size_t n,
                                    double c_los, double c_nlos, double* out) {
    const __m256d vlos = _mm256_set1_pd(c_los);
    const __m256d vnlos = _mm256_set1_pd(c_nlos);
    const __m128i zero = _mm_setzero_si128();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        // Widen 4 flag bytes to 64-bit lanes and build an all-ones mask
        // for the NLoS lanes.
        std::uint32_t packed;
        __builtin_memcpy(&packed, nlos + i, 4);
        const __m128i bytes = _mm_cvtsi32_si128(static_cast<int>(packed));
        const __m256i lanes = _mm256_cvtepu8_epi64(bytes);
        const __m256i is_nlos =
            _mm256_xor_si256(_mm256_cmpeq_epi64(lanes, _mm256_setzero_si256()),
                             _mm256_set1_epi64x(-1));
        const __m256d coeff = _mm256_blendv_pd(vlos, vnlos, _mm256_castsi256_pd(is_nlos));
        _mm256_storeu_pd(out + i, _mm256_div_pd(coeff, _mm256_loadu_pd(d2 + i)));
    }
    (void)zero;
    snr_from_squared_distance_scalar(d2 + i, nlos + i, n - i, c_los, c_nlos, out + i);
}

void df_combine_avx2(const double* backhaul, const double* direct, const double* access,
                     std::size_t n, double* out) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d combined =
            _mm256_add_pd(_mm256_loadu_pd(direct + i), _mm256_loadu_pd(access + i));
        _mm256_storeu_pd(out + i, _mm256_min_pd(_mm256_loadu_pd(backhaul + i), combined));
    }
    df_combine_scalar(backhaul + i, direct + i, access + i, n - i, out + i);
}

void assign_nearest_avx2(const double* px, const double* py, std::size_t n, const double* cx,
                         const double* cy, std::size_t k, std::uint32_t* assignment,
                         double* best_d2) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d x = _mm256_loadu_pd(px + i);
        const __m256d y = _mm256_loadu_pd(py + i);
        __m256d best = _mm256_set1_pd(__builtin_huge_val());
        __m256i best_idx = _mm256_setzero_si256();
        for (std::size_t j = 0; j < k; ++j) {
            const __m256d dx = _mm256_sub_pd(x, _mm256_set1_pd(cx[j]));
            const __m256d dy = _mm256_sub_pd(y, _mm256_set1_pd(cy[j]));
            const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
            const __m256d closer = _mm256_cmp_pd(d2, best, _CMP_LT_OQ);
            best = _mm256_blendv_pd(best, d2, closer);
            best_idx = _mm256_blendv_epi8(best_idx, _mm256_set1_epi64x(static_cast<long long>(j)),
                                          _mm256_castpd_si256(closer));
        }
        alignas(32) long long idx_lanes[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(idx_lanes), best_idx);
        for (int lane = 0; lane < 4; ++lane) {
            assignment[i + static_cast<std::size_t>(lane)] =
                static_cast<std::uint32_t>(idx_lanes[lane]);
        }
        if (best_d2 != nullptr) _mm256_storeu_pd(best_d2 + i, best);
    }
    assign_nearest_scalar(px + i, py + i, n - i, cx, cy, k, assignment + i,
                          best_d2 != nullptr ? best_d2 + i : nullptr);
}

} // namespace harborlink::kernels::detail

#endif // x86-64
