#include <doctest.h>

#include <cmath>

#include "switchdim/io.hpp"
#include "switchdim/represent.hpp"
#include "switchdim/switchclass.hpp"

using namespace switchdim;

namespace {

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
    // Pascal's triangle, independent of the library's multiplicative formula
    std::vector<std::vector<std::uint64_t>> t(n + 1);
    for (std::uint64_t i = 0; i <= n; ++i) {
        t[i].assign(i + 1, 1);
        for (std::uint64_t j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return k > n ? 0 : t[n][k];
}

PointConfiguration euclidean(std::vector<std::vector<double>> pts) {
    PointConfiguration x;
    x.p = pts.empty() ? 0 : pts[0].size();
    x.points = std::move(pts);
    mark_duplicates(x);
    return x;
}

struct Realized {
    ExactMatrix d;
    PointConfiguration x;
};

Realized johnson_clique_switch(int m) {
    const Graph g = seidel_switch(johnson(m), johnson_clique(m, 0));
    const Dissimilarity dis(1, 2);
    ExactMatrix d = dissimilarity_matrix(g, dis);
    PointConfiguration x = realize(gower_center(d, centroid_weights(g.order())), d);
    return {d, x};
}

}  // namespace

TEST_CASE("scalar square") {
    const std::vector<double> x{3.0, 1.0, 2.0};
    const std::vector<double> y{1.0, 1.0, 0.0};
    CHECK(scalar_square(x, y, 3) == doctest::Approx(8.0));
    CHECK(scalar_square(x, y, 1) == doctest::Approx(0.0));
    CHECK(scalar_square(x, y, 0) == doctest::Approx(-8.0));
}

TEST_CASE("cardinality bounds") {
    CHECK(cardinality_bound(8, 0, 2, false) == 45);
    CHECK(cardinality_bound(10, 1, 2, true) == 66);
    CHECK(cardinality_bound(2, 2, 2, false) == 15);
    CHECK(antipodal_bound(7) == 56);
    for (std::size_t p = 0; p <= 6; ++p)
        for (std::size_t q = 0; q <= 6; ++q)
            for (std::size_t s = 1; s <= 4; ++s) {
                const std::uint64_t d = p + q;
                CHECK(cardinality_bound(p, q, s, false) == choose(d + s, s));
                if (d == 0) continue;
                const std::uint64_t sph = (p == 1 || q == 1) ? choose(d + s - 1, s)
                                                             : choose(d + s - 1, s) + choose(d + s - 2, s - 1);
                CHECK(cardinality_bound(p, q, s, true) == sph);
                CHECK(cardinality_bound(p, q, s, true) <= cardinality_bound(p, q, s, false));
                CHECK(cardinality_bound(p, q, s + 1, false) > cardinality_bound(p, q, s, false));
                CHECK(cardinality_bound(p + 1, q, s, false) > cardinality_bound(p, q, s, false));
            }
    CHECK_THROWS_AS(cardinality_bound(3, 0, 0, false), std::invalid_argument);
}

TEST_CASE("distance sets of small configurations") {
    const auto square = euclidean({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    const auto r = verify(square);
    REQUIRE(r.s == 2);
    CHECK(r.values[0].value == doctest::Approx(1.0));
    CHECK(r.values[0].multiplicity == 4);
    CHECK(r.values[1].value == doctest::Approx(2.0));
    CHECK(r.values[1].multiplicity == 2);
    CHECK(r.bound == 6u);
    CHECK_FALSE(r.attains_bound);
    REQUIRE(r.sphere);
    CHECK(r.sphere->radius_sq == doctest::Approx(0.5));
    CHECK(r.sphere->center[0] == doctest::Approx(0.5));

    const auto single = distance_set(euclidean({{1, 2}}));
    CHECK(single.s == 0);
    CHECK(single.points == 1);
    CHECK_FALSE(verify(euclidean({{1, 2}})).bound);

    const double h = std::sqrt(3.0) / 2.0;
    const auto tri = euclidean({{0, 0}, {1, 0}, {0.5, h}});
    const auto sph = sphericity_check(tri);
    REQUIRE(sph);
    CHECK(sph->center[0] == doctest::Approx(0.5));
    CHECK(sph->center[1] == doctest::Approx(h / 3.0));
    CHECK(sph->radius_sq == doctest::Approx(1.0 / 3.0));
    CHECK(verify(tri).bound == 3u);
    CHECK(verify(tri).attains_bound);
    CHECK(verify(tri, 1e-8, true).bound == 3u);

    const auto line = euclidean({{0}, {1}, {2}});
    CHECK_FALSE(sphericity_check(line));
    const auto flat = euclidean({{0, 0}, {1, 0}, {2, 0}});
    CHECK_THROWS_AS(sphericity_check(flat), NonUniqueCenter);

    const double delta = 2.5e-8;
    CHECK_THROWS_AS(distance_set(euclidean({{0}, {1}, {2 + delta}})), ClusteringError);
}

TEST_CASE("antipodal sets") {
    const auto square = euclidean({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
    const auto a = antipodal_check(square);
    CHECK(a.antipodal);
    CHECK(a.pairing == std::vector<std::size_t>{2, 3, 0, 1});
    CHECK_FALSE(antipodal_check(euclidean({{0, 0}, {1, 0}, {0, 1}})).antipodal);

    const auto tri = euclidean({{2, 0}, {-1, 1}, {-1, -1}});
    const std::vector<double> origin{0.0, 0.0};
    const auto both = doubled(tri, origin);
    CHECK(both.points.size() == 6);
    CHECK(antipodal_check(both).antipodal);
    CHECK(both.labels[3] == "-0");
}

TEST_CASE("realization of trivial and degenerate inputs") {
    const ExactMatrix zero(4, 4);
    const auto x = realize(zero, zero);
    CHECK(x.dimension() == 0);
    CHECK(x.distinct_points() == 1);

    // J(4,2) with b = 0: opposite pairs collapse onto a triangle
    const Graph g = johnson(4);
    const Dissimilarity d(1, 0);
    const ExactMatrix dm = dissimilarity_matrix(g, d);
    const auto y = realize(gower_center(dm, centroid_weights(6)), dm);
    CHECK(y.p == 2);
    CHECK(y.q == 0);
    const auto r = verify(y);
    CHECK(r.points == 3);
    CHECK(r.duplicates == 3);
    CHECK(r.s == 1);

    ExactMatrix bad(2, 2);
    bad(0, 1) = 1;
    CHECK_THROWS_AS(realize(bad, bad), std::invalid_argument);
}

TEST_CASE("Johnson switching class realizations") {
    {
        const auto [d, x] = johnson_clique_switch(10);
        CHECK(x.p == 8);
        CHECK(x.q == 0);
        CHECK(x.max_deviation < 1e-9);
        const auto r = verify(x);
        REQUIRE(r.s == 2);
        CHECK(r.values[0].value == doctest::Approx(1.0));
        CHECK(r.values[0].multiplicity == 540);
        CHECK(r.values[1].multiplicity == 450);
        CHECK(r.bound == 45u);
        CHECK(r.attains_bound);
        CHECK_FALSE(exact_sphericity(d).consistent);
        CHECK_FALSE(r.sphere);
        // every realized pair matches the target
        for (std::size_t i = 0; i < 45; ++i)
            for (std::size_t j = 0; j < 45; ++j)
                CHECK(std::abs(scalar_square(x.points[i], x.points[j], x.p) - d(i, j).to_double()) < 1e-9);
    }
    {
        const auto [d, x] = johnson_clique_switch(12);
        CHECK(x.p == 10);
        CHECK(x.q == 1);
        const auto es = exact_sphericity(d);
        CHECK(es.spherical);
        CHECK(es.radius_sq == Rational(1, 4));
        const auto r = verify(x, 1e-8, true);
        REQUIRE(r.sphere);
        CHECK(r.sphere->radius_sq == doctest::Approx(0.25));
        CHECK(r.bound == 66u);
        CHECK(r.attains_bound);
    }
    {
        const auto [d, x] = johnson_clique_switch(11);
        CHECK(x.p == 9);
        CHECK(x.q == 1);
        const auto es = exact_sphericity(d);
        CHECK(es.consistent);
        CHECK_FALSE(es.spherical);
        CHECK_FALSE(verify(x, 1e-8, true).sphere);
    }
    {
        const auto [d, x] = johnson_clique_switch(8);
        CHECK(x.p == 7);
        const auto es = exact_sphericity(d);
        CHECK(es.radius_sq == Rational(3, 4));
        const auto r = verify(x, 1e-8, true);
        REQUIRE(r.sphere);
        const auto y = doubled(x, r.sphere->center);
        const auto ry = verify(y, 1e-8, true);
        CHECK(ry.points == 56);
        CHECK(ry.points == antipodal_bound(7));
        CHECK(ry.antipodal);
        REQUIRE(ry.s == 3);
        CHECK(ry.values[0].value == doctest::Approx(1.0));
        CHECK(ry.values[1].value == doctest::Approx(2.0));
        CHECK(ry.values[2].value == doctest::Approx(3.0));
        CHECK(ry.values[2].multiplicity == 28);
        REQUIRE(ry.sphere);
        CHECK(ry.sphere->radius_sq == doctest::Approx(0.75));
    }
}

TEST_CASE("exact sphericity of a regular simplex") {
    // D = J - I on 4 points: regular simplex with squared circumradius 3/8
    ExactMatrix d = ExactMatrix::ones(4, 4) - ExactMatrix::identity(4);
    const auto es = exact_sphericity(d);
    CHECK(es.spherical);
    CHECK(es.radius_sq == Rational(3, 8));
}

TEST_CASE("JSON round trips") {
    const Graph g = johnson(5);
    const Graph back = io::graph_from_json(io::to_json(g));
    CHECK(back == g);
    CHECK(back.label(3) == g.label(3));
    CHECK_THROWS_AS(io::graph_from_json(io::json{{"n", 3}, {"edges", {{0, 7}}}}), std::invalid_argument);

    const auto [d, x] = johnson_clique_switch(10);
    const auto rep = verify(x);
    const io::json j = io::to_json(x, &rep);
    const PointConfiguration y = io::configuration_from_json(j);
    CHECK(y.p == x.p);
    CHECK(y.q == x.q);
    REQUIRE(y.points.size() == x.points.size());
    for (std::size_t i = 0; i < x.points.size(); ++i)
        for (std::size_t c = 0; c < x.dimension(); ++c) CHECK(y.points[i][c] == x.points[i][c]);
    const auto ry = verify(y);
    CHECK(ry.s == rep.s);
    CHECK(ry.attains_bound);
    CHECK(io::to_json(Signature{2, 1, 3}).dump().find("2") != std::string::npos);
}
