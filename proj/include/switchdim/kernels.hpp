#pragma once

// Data-parallel inner loops. Each kernel has a portable scalar reference and,
// on x86-64, an AVX2 variant chosen at runtime when the CPU supports it.
//
//   scalar_square_diff  pseudo-Euclidean scalar square of x - y in R^{p,q}
//   rotate_pair         Givens/Jacobi plane rotation of two rows
//   and_popcount        popcount(a & b) over packed 64-bit words
//
// rotate_pair and and_popcount are bit-identical across variants.
// scalar_square_diff may differ in the last bits (different summation order).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace switchdim::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

struct KernelTable {
    Isa isa;
    /// sum_{i<positive}(x_i-y_i)^2 - sum_{i>=positive}(x_i-y_i)^2
    double (*scalar_square_diff)(const double* x, const double* y, std::size_t len, std::size_t positive);
    /// x <- c*x - s*y ; y <- s*x + c*y (elementwise, old values on the right)
    void (*rotate_pair)(double* x, double* y, std::size_t len, double c, double s);
    std::uint64_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
};

const KernelTable& scalar_kernels() noexcept;
/// nullptr when the binary was built without AVX2 support or the CPU lacks it.
const KernelTable* avx2_kernels() noexcept;
/// The best table for the running CPU.
const KernelTable& active() noexcept;

inline double scalar_square_diff(std::span<const double> x, std::span<const double> y, std::size_t positive) {
    return active().scalar_square_diff(x.data(), y.data(), x.size(), positive);
}

inline void rotate_pair(std::span<double> x, std::span<double> y, double c, double s) {
    active().rotate_pair(x.data(), y.data(), x.size(), c, s);
}

inline std::uint64_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    return active().and_popcount(a.data(), b.data(), a.size());
}

}  // namespace switchdim::kernels
