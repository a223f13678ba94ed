#include <bit>

#include "kernels_impl.hpp"

namespace switchdim::kernels::detail {

double scalar_square_diff_scalar(const double* x, const double* y, std::size_t len, std::size_t positive) {
    if (positive > len) positive = len;
    double plus = 0.0;
    for (std::size_t i = 0; i < positive; ++i) {
        const double d = x[i] - y[i];
        plus += d * d;
    }
    double minus = 0.0;
    for (std::size_t i = positive; i < len; ++i) {
        const double d = x[i] - y[i];
        minus += d * d;
    }
    return plus - minus;
}

void rotate_pair_scalar(double* x, double* y, std::size_t len, double c, double s) {
    for (std::size_t i = 0; i < len; ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

std::uint64_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < words; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return total;
}

}  // namespace switchdim::kernels::detail
