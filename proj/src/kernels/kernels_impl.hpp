#pragma once

#include <cstddef>
#include <cstdint>

#if defined(__x86_64__) || defined(_M_X64)
#define SWITCHDIM_HAVE_X86 1
#else
#define SWITCHDIM_HAVE_X86 0
#endif

namespace switchdim::kernels::detail {

double scalar_square_diff_scalar(const double* x, const double* y, std::size_t len, std::size_t positive);
void rotate_pair_scalar(double* x, double* y, std::size_t len, double c, double s);
std::uint64_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);

#if SWITCHDIM_HAVE_X86
double scalar_square_diff_avx2(const double* x, const double* y, std::size_t len, std::size_t positive);
void rotate_pair_avx2(double* x, double* y, std::size_t len, double c, double s);
std::uint64_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
#endif

}  // namespace switchdim::kernels::detail
