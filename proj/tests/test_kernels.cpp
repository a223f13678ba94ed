#include <doctest.h>

#include <bit>
#include <cmath>
#include <random>
#include <vector>

#include "switchdim/kernels.hpp"

using namespace switchdim::kernels;

namespace {

std::vector<double> random_vec(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    std::vector<double> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

}  // namespace

TEST_CASE("active table is one of the two variants") {
    const KernelTable& t = active();
    CHECK((t.isa == Isa::scalar || t.isa == Isa::avx2));
    if (avx2_kernels() != nullptr) CHECK(t.isa == Isa::avx2);
    CHECK(isa_name(Isa::scalar) == "scalar");
}

TEST_CASE("scalar reference values") {
    const KernelTable& s = scalar_kernels();
    const double x[] = {1, 2, 3};
    const double y[] = {0, 0, 1};
    // (1 + 4) - 4
    CHECK(s.scalar_square_diff(x, y, 3, 2) == doctest::Approx(1.0));
    CHECK(s.scalar_square_diff(x, y, 3, 3) == doctest::Approx(9.0));
    const std::uint64_t a[] = {0xFFu, 0x1u};
    const std::uint64_t b[] = {0x0Fu, 0x3u};
    CHECK(s.and_popcount(a, b, 2) == 5);
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
    const KernelTable* v = avx2_kernels();
    if (v == nullptr) {
        MESSAGE("AVX2 not available on this CPU; equivalence test skipped");
        return;
    }
    const KernelTable& s = scalar_kernels();
    std::mt19937_64 rng(2024);
    for (std::size_t len : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 31u, 66u, 101u}) {
        for (int rep = 0; rep < 20; ++rep) {
            const auto x = random_vec(rng, len);
            const auto y = random_vec(rng, len);
            const std::size_t positive = len == 0 ? 0 : rng() % (len + 1);
            const double ref = s.scalar_square_diff(x.data(), y.data(), len, positive);
            const double got = v->scalar_square_diff(x.data(), y.data(), len, positive);
            double mag = 0.0;
            for (std::size_t i = 0; i < len; ++i) mag += (x[i] - y[i]) * (x[i] - y[i]);
            CHECK(std::abs(ref - got) <= 1e-13 * std::max(1.0, mag));

            auto xs = x, ys = y, xv = x, yv = y;
            const double angle = std::uniform_real_distribution<double>(-3.1, 3.1)(rng);
            s.rotate_pair(xs.data(), ys.data(), len, std::cos(angle), std::sin(angle));
            v->rotate_pair(xv.data(), yv.data(), len, std::cos(angle), std::sin(angle));
            CHECK(xs == xv);  // bit-identical
            CHECK(ys == yv);
        }
        std::vector<std::uint64_t> a(len), b(len);
        for (std::size_t i = 0; i < len; ++i) {
            a[i] = rng();
            b[i] = rng();
        }
        std::uint64_t oracle = 0;
        for (std::size_t i = 0; i < len; ++i)
            for (int bit = 0; bit < 64; ++bit) oracle += ((a[i] & b[i]) >> bit) & 1U;
        CHECK(s.and_popcount(a.data(), b.data(), len) == oracle);
        CHECK(v->and_popcount(a.data(), b.data(), len) == oracle);
    }
}
