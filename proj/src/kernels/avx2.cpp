#include "kernels_impl.hpp"

#if SWITCHDIM_HAVE_X86

#include <immintrin.h>

namespace switchdim::kernels::detail {

namespace {

__attribute__((target("avx2"))) double sum_sq_diff_avx2(const double* x, const double* y, std::size_t begin,
                                                         std::size_t end) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = begin;
    for (; i + 4 <= end; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < end; ++i) {
        const double d = x[i] - y[i];
        total += d * d;
    }
    return total;
}

}  // namespace

__attribute__((target("avx2"))) double scalar_square_diff_avx2(const double* x, const double* y, std::size_t len,
                                                                std::size_t positive) {
    if (positive > len) positive = len;
    return sum_sq_diff_avx2(x, y, 0, positive) - sum_sq_diff_avx2(x, y, positive, len);
}

__attribute__((target("avx2"))) void rotate_pair_avx2(double* x, double* y, std::size_t len, double c, double s) {
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        const __m256d xi = _mm256_loadu_pd(x + i);
        const __m256d yi = _mm256_loadu_pd(y + i);
        _mm256_storeu_pd(x + i, _mm256_sub_pd(_mm256_mul_pd(vc, xi), _mm256_mul_pd(vs, yi)));
        _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_mul_pd(vs, xi), _mm256_mul_pd(vc, yi)));
    }
    for (; i < len; ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

// Nibble-table popcount (Mula): per-byte counts via vpshufb, folded with vpsadbw.
__attribute__((target("avx2"))) std::uint64_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b,
                                                                 std::size_t words) {
    const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                           0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        const __m256i v = _mm256_and_si256(va, vb);
        const __m256i lo = _mm256_and_si256(v, low);
        const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
        const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(table, lo), _mm256_shuffle_epi8(table, hi));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(counts, _mm256_setzero_si256()));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < words; ++i) total += static_cast<std::uint64_t>(__builtin_popcountll(a[i] & b[i]));
    return total;
}

}  // namespace switchdim::kernels::detail

#endif
