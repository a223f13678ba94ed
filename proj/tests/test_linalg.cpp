#include <doctest.h>

#include <random>
#include <sstream>

#include "switchdim/graph.hpp"
#include "switchdim/linalg.hpp"
#include "test_util.hpp"

using namespace switchdim;

TEST_CASE("rational arithmetic stays canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7").is_integer());
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    Rational a(1, 3);
    add_mul(a, Rational(1, 2), Rational(2, 3));
    CHECK(a == Rational(2, 3));
    sub_mul(a, Rational(2), Rational(1, 3));
    CHECK(a.is_zero());
    CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("inertia of small matrices") {
    CHECK(inertia(ExactMatrix::identity(3)) == Signature{3, 0, 0});
    const RationalVector d{Rational(1), Rational(-1), Rational(0)};
    CHECK(inertia(ExactMatrix::diagonal(d)) == Signature{1, 1, 1});
    // zero diagonal: needs the 2x2 pivot
    ExactMatrix h(2, 2);
    h(0, 1) = 1;
    h(1, 0) = 1;
    CHECK(inertia(h) == Signature{1, 1, 0});
    CHECK(inertia(ExactMatrix::zeros(4, 4)) == Signature{0, 0, 4});
    ExactMatrix bad(2, 2);
    bad(0, 1) = 1;
    CHECK_THROWS_AS(inertia(bad), std::invalid_argument);
}

TEST_CASE("2D' - 3J on J(10,2) has inertia (1,9,35)") {
    const Graph g = johnson(10);
    const ExactMatrix a = adjacency_matrix(g);
    const std::size_t n = g.order();
    // 2D - 3J with a=1, b=2: 2A + 4(J - I - A) - 3J = -2A + J - 4I
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(-2) * a(i, j) + Rational(1) - (i == j ? Rational(4) : Rational(0));
    // switching by a clique conjugates by a diagonal +-1 matrix
    VertexSet u(n);
    for (std::size_t v = 0; v < n; ++v)
        if (g.labels()[v][0] == 0) u.insert(v);
    const ExactMatrix iu = switching_matrix(u);
    CHECK(inertia(m) == Signature{1, 9, 35});
    CHECK(inertia(iu * m * iu) == Signature{1, 9, 35});
}

TEST_CASE("Sylvester invariance under random congruence") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        const ExactMatrix m = testutil::random_symmetric(rng, 6);
        ExactMatrix p(6, 6);
        // unit upper-triangular times a random permutation-free diagonal: invertible
        for (std::size_t i = 0; i < 6; ++i) {
            p(i, i) = Rational(1 + static_cast<long>(rng() % 3));
            for (std::size_t j = i + 1; j < 6; ++j) p(i, j) = testutil::random_rational(rng);
        }
        CHECK(inertia(p.transpose() * m * p) == inertia(m));
    }
}

TEST_CASE("Gower centering") {
    SUBCASE("zero input") {
        CHECK(gower_center(ExactMatrix::zeros(4, 4), centroid_weights(4)).is_zero());
    }
    SUBCASE("weights must sum to one") {
        const RationalVector l{Rational(1), Rational(1)};
        CHECK_THROWS_AS(gower_center(ExactMatrix::zeros(2, 2), l), std::invalid_argument);
    }
    SUBCASE("matches the product definition") {
        std::mt19937_64 rng(11);
        const ExactMatrix m = testutil::random_symmetric(rng, 5);
        const auto l = testutil::random_weights(rng, 5);
        ExactMatrix left = ExactMatrix::identity(5), right = ExactMatrix::identity(5);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) {
                left(i, j) -= l[j];   // I - j l^T
                right(i, j) -= l[i];  // I - l j^T
            }
        ExactMatrix expected = left * m * right;
        expected *= Rational(-1);
        CHECK(gower_center(m, l) == expected);
    }
    SUBCASE("signature does not depend on l") {
        std::mt19937_64 rng(3);
        const ExactMatrix m = testutil::random_symmetric(rng, 8);
        const Signature ref = inertia(gower_center(m, centroid_weights(8)));
        for (int rep = 0; rep < 10; ++rep) CHECK(inertia(gower_center(m, testutil::random_weights(rng, 8))) == ref);
    }
}

TEST_CASE("kernel basis") {
    CHECK(kernel_basis(ExactMatrix::identity(3)).empty());
    const ExactMatrix j = ExactMatrix::ones(4, 4);
    const auto basis = kernel_basis(j);
    CHECK(basis.size() == 3);
    for (const auto& v : basis) {
        const auto jv = j * std::span<const Rational>(v);
        for (const auto& e : jv) CHECK(e.is_zero());
    }
    CHECK(rank(j) == 1);

    // (A - kI)(A - lambda1 I) on J(5,2): kernel E0 + E1 of dimension 1 + 4
    const Graph g = johnson(5);
    const ExactMatrix a = adjacency_matrix(g);
    ExactMatrix x = a, y = a;
    for (std::size_t i = 0; i < g.order(); ++i) {
        x(i, i) -= Rational(6);
        y(i, i) -= Rational(1);
    }
    CHECK(kernel_basis(x * y).size() == 5);
}

TEST_CASE("exact linear solve") {
    ExactMatrix a(2, 2);
    a(0, 0) = 2;
    a(0, 1) = 1;
    a(1, 0) = 4;
    a(1, 1) = 2;
    const RationalVector ok{Rational(3), Rational(6)};
    const auto sol = solve_linear(a, ok);
    REQUIRE(sol);
    CHECK(sol->homogeneous.size() == 1);
    const auto check = a * std::span<const Rational>(sol->particular);
    CHECK(check == ok);
    const RationalVector bad{Rational(3), Rational(7)};
    CHECK_FALSE(solve_linear(a, bad));
}

TEST_CASE("Jacobi oracle") {
    SUBCASE("diagonal") {
        RealMatrix m(2, 2);
        m(0, 0) = 1;
        m(1, 1) = 3;
        const auto e = jacobi_eigen(m);
        CHECK(e.eigenvalues[0] == doctest::Approx(3.0));
        CHECK(e.eigenvalues[1] == doctest::Approx(1.0));
    }
    SUBCASE("J(4,2) adjacency spectrum 4, 0^3, -2^2") {
        const auto e = jacobi_eigen(RealMatrix::from_exact(adjacency_matrix(johnson(4))));
        const double expected[] = {4, 0, 0, 0, -2, -2};
        for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(e.eigenvalues[i] - expected[i]) < 1e-10);
        CHECK(e.residual < 1e-10);
        // orthonormal vectors
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) {
                double dot = 0;
                for (std::size_t k = 0; k < 6; ++k) dot += e.eigenvectors[i][k] * e.eigenvectors[j][k];
                CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) < 1e-10);
            }
    }
    SUBCASE("non-symmetric input rejected") {
        RealMatrix m(2, 2);
        m(0, 1) = 1;
        CHECK_THROWS_AS(jacobi_eigen(m), std::invalid_argument);
    }
    SUBCASE("iteration cap reports the off-diagonal norm") {
        std::mt19937_64 rng(5);
        const RealMatrix m = RealMatrix::from_exact(testutil::random_symmetric(rng, 12));
        try {
            jacobi_eigen(m, 1e-10, 1);
            FAIL("expected a convergence error");
        } catch (const ConvergenceError& e) {
            CHECK(e.off_diagonal_norm() > 0.0);
        }
    }
    SUBCASE("float signature equals exact inertia on 100 random 10x10 matrices") {
        std::mt19937_64 rng(99);
        int agree = 0;
        for (int rep = 0; rep < 100; ++rep) {
            ExactMatrix m = testutil::random_symmetric(rng, 10);
            // force some rank deficiency in part of the sample
            if (rep % 3 == 0) {
                // duplicate vertex 8 as vertex 9: singular by construction
                for (std::size_t j = 0; j < 10; ++j) {
                    m(9, j) = m(8, j);
                    m(j, 9) = m(8, j);
                }
                m(9, 8) = m(8, 8);
                m(8, 9) = m(8, 8);
                m(9, 9) = m(8, 8);
                REQUIRE(inertia(m).zero >= 1);
            }
            agree += float_signature(RealMatrix::from_exact(m)) == inertia(m);
        }
        CHECK(agree == 100);
    }
}

TEST_CASE("matrix CSV round trip") {
    std::mt19937_64 rng(1);
    const ExactMatrix m = testutil::random_symmetric(rng, 4);
    std::stringstream ss;
    write_csv(ss, m);
    CHECK(read_csv(ss) == m);
    std::stringstream bad("1,2\n3\n");
    CHECK_THROWS(read_csv(bad));
}
