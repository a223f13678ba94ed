#include <doctest.h>

#include <algorithm>
#include <array>

#include "switchdim/graph.hpp"

using namespace switchdim;

namespace {

// Independent common-neighbour count by scanning the adjacency relation.
std::size_t count_common(const Graph& g, std::size_t u, std::size_t v) {
    std::size_t c = 0;
    for (std::size_t w = 0; w < g.order(); ++w) c += g.adjacent(u, w) && g.adjacent(v, w);
    return c;
}

bool isomorphic_by(const Graph& a, const Graph& b, const std::vector<std::size_t>& map) {
    for (std::size_t u = 0; u < a.order(); ++u)
        for (std::size_t v = 0; v < a.order(); ++v)
            if (u != v && a.adjacent(u, v) != b.adjacent(map[u], map[v])) return false;
    return true;
}

}  // namespace

TEST_CASE("vertex sets") {
    VertexSet s(70);
    s.insert(3);
    s.insert(69);
    CHECK(s.count() == 2);
    CHECK(s.members() == std::vector<std::size_t>{3, 69});
    const VertexSet c = s.complement();
    CHECK(c.count() == 68);
    CHECK_FALSE(c.contains(69));
    CHECK(c.complement() == s);
    CHECK_THROWS_AS(s.insert(70), std::out_of_range);
    const std::size_t a[] = {0, 1};
    const std::size_t b[] = {0, 2};
    CHECK(VertexSet::from_members(4, a) < VertexSet::from_members(4, b));
    const std::size_t one[] = {3};
    CHECK(VertexSet::from_members(4, one) < VertexSet::from_members(4, a));
}

TEST_CASE("Johnson graphs") {
    const Graph j4 = johnson(4);
    CHECK(j4.order() == 6);
    CHECK(is_regular(j4));
    CHECK(j4.degree(0) == 4);
    CHECK(j4.edge_count() == 6 * 4 / 2);
    CHECK(johnson(10).order() == 45);
    CHECK(j4.label(0) == "{0,1}");
    CHECK(j4.label(5) == "{2,3}");
    CHECK(johnson(2).order() == 1);
    CHECK_THROWS_AS(johnson(1), std::invalid_argument);
    for (int m = 4; m <= 12; ++m) CHECK(johnson(m).degree(0) == static_cast<std::size_t>(2 * (m - 2)));
}

TEST_CASE("Hamming graphs") {
    const Graph h2 = hamming(2);
    CHECK(h2.order() == 4);
    CHECK(h2.edge_count() == 4);
    for (std::size_t v = 0; v < 4; ++v) CHECK(h2.degree(v) == 2);
    CHECK(is_connected(h2));  // 2-regular connected on 4 vertices: the 4-cycle
    const Graph h3 = hamming(3);
    CHECK(h3.order() == 9);
    CHECK(h3.edge_count() == 9 * 4 / 2);
    CHECK(h3.label(5) == "(1,2)");
    CHECK_THROWS_AS(hamming(0), std::invalid_argument);
}

TEST_CASE("complement") {
    const Graph e(3);
    const Graph t = complement(e);
    CHECK(t.edge_count() == 3);
    const Graph j5 = johnson(5);
    CHECK(complement(complement(j5)) == j5);
    const Graph petersen = complement(j5);
    CHECK(is_regular(petersen));
    CHECK(petersen.degree(0) == 3);
    const auto p = srg_params(petersen);
    REQUIRE(p);
    CHECK(p->lambda == 0);
    CHECK(p->mu == 1);

    // (x,y) -> (x+y, x-y) mod 3 maps H(2,3) onto its complement
    const Graph h = hamming(3);
    std::vector<std::size_t> map(9);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) map[static_cast<std::size_t>(3 * x + y)] = static_cast<std::size_t>(3 * ((x + y) % 3) + (x - y + 3) % 3);
    CHECK(isomorphic_by(h, complement(h), map));
}

TEST_CASE("Seidel switching") {
    const Graph g = johnson(5);
    const std::size_t n = g.order();
    CHECK(seidel_switch(g, VertexSet(n)) == g);
    CHECK(seidel_switch(g, VertexSet::full(n)) == g);
    const std::size_t some[] = {0, 4, 7};
    const VertexSet u = VertexSet::from_members(n, some);
    CHECK(seidel_switch(seidel_switch(g, u), u) == g);
    CHECK(seidel_switch(g, u) == seidel_switch(g, u.complement()));

    // H(2,2) switched at one vertex is the claw
    const std::size_t v0[] = {0};
    const Graph claw = seidel_switch(hamming(2), VertexSet::from_members(4, v0));
    CHECK(claw.edge_count() == 3);
    std::vector<std::size_t> deg;
    for (std::size_t v = 0; v < 4; ++v) deg.push_back(claw.degree(v));
    std::sort(deg.begin(), deg.end());
    CHECK(deg == std::vector<std::size_t>{1, 1, 1, 3});
}

TEST_CASE("Seidel matrix") {
    Graph e2(2);
    Graph k2(2);
    k2.add_edge(0, 1);
    CHECK(seidel_matrix(k2)(0, 1) == Rational(1));
    CHECK(seidel_matrix(e2)(0, 1) == Rational(-1));
    CHECK(seidel_matrix(e2)(0, 0).is_zero());

    // I_U (A - Abar) I_U equals the Seidel matrix of the switched graph
    const Graph g = johnson(5);
    VertexSet clique(g.order());
    for (std::size_t v = 0; v < g.order(); ++v)
        if (g.labels()[v][0] == 0) clique.insert(v);
    const ExactMatrix iu = switching_matrix(clique);
    CHECK(iu * seidel_matrix(g) * iu == seidel_matrix(seidel_switch(g, clique)));
}

TEST_CASE("strongly regular parameters") {
    const Graph j5 = johnson(5);
    const auto p = srg_params(j5);
    REQUIRE(p);
    // oracle: direct counts over all pairs
    std::size_t lam = 0, mu = 0;
    for (std::size_t u = 0; u < j5.order(); ++u)
        for (std::size_t v = u + 1; v < j5.order(); ++v) (j5.adjacent(u, v) ? lam : mu) = count_common(j5, u, v);
    CHECK(p->n == 10);
    CHECK(p->k == 6);
    CHECK(p->lambda == static_cast<long>(lam));
    CHECK(p->mu == static_cast<long>(mu));
    CHECK(p->lambda == 3);
    CHECK(p->mu == 4);
    REQUIRE(p->spectrum);
    CHECK(p->spectrum->eigenvalues == std::array<long, 3>{6, 1, -2});
    CHECK(p->spectrum->multiplicities == std::array<long, 3>{1, 4, 5});
    CHECK(p->k * (p->k - p->lambda - 1) == (p->n - p->k - 1) * p->mu);

    const auto h4 = srg_params(hamming(4));
    REQUIRE(h4);
    REQUIRE(h4->spectrum);
    CHECK(h4->spectrum->eigenvalues == std::array<long, 3>{6, 2, -2});
    CHECK(h4->spectrum->multiplicities == std::array<long, 3>{1, 6, 9});

    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK_FALSE(srg_params(path));

    // the 5-cycle is a conference graph: parameters but no integral spectrum
    Graph c5(5);
    for (std::size_t v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
    const auto c = srg_params(c5);
    REQUIRE(c);
    CHECK_FALSE(c->spectrum);

    for (int m = 4; m <= 12; ++m) {
        const auto q = srg_params(johnson(m));
        REQUIRE(q);
        REQUIRE(q->spectrum);
        CHECK(q->spectrum->eigenvalues == std::array<long, 3>{2 * (m - 2), m - 4, -2});
        CHECK(q->spectrum->multiplicities == std::array<long, 3>{1, m - 1, m * (m - 3) / 2});
    }
    for (int m = 3; m <= 8; ++m) {
        const auto q = srg_params(hamming(m));
        REQUIRE(q);
        REQUIRE(q->spectrum);
        CHECK(q->spectrum->eigenvalues == std::array<long, 3>{2 * (m - 1), m - 2, -2});
        CHECK(q->spectrum->multiplicities == std::array<long, 3>{1, 2 * m - 2, (m - 1) * (m - 1)});
    }
}

TEST_CASE("Delsarte cliques") {
    auto check_family = [](const Graph& g, std::size_t count, std::size_t size) {
        const auto p = srg_params(g);
        REQUIRE(p);
        const auto cliques = delsarte_cliques(g, *p);
        CHECK(cliques.size() == count);
        for (const auto& c : cliques) {
            CHECK(c.count() == size);
            CHECK(is_clique(g, c));
            // not extendable
            for (std::size_t v = 0; v < g.order(); ++v) {
                if (c.contains(v)) continue;
                VertexSet bigger = c;
                bigger.insert(v);
                CHECK_FALSE(is_clique(g, bigger));
            }
        }
    };
    check_family(johnson(5), 5, 4);
    check_family(johnson(4), 8, 3);
    check_family(hamming(3), 6, 3);
    check_family(johnson(7), 7, 6);
}

TEST_CASE("equitable quotient") {
    const Graph g = johnson(5);
    const std::size_t n = g.order();
    VertexSet clique(n);
    for (std::size_t v = 0; v < n; ++v)
        if (g.labels()[v][0] == 0) clique.insert(v);
    const auto q = equitable_quotient(g, clique);
    REQUIRE(q);
    // direct count: a clique vertex {0,x} sees 3 clique vertices and 3 others;
    // an outside vertex {x,y} sees {0,x},{0,y} and 4 others
    CHECK(q->b[0] == std::array<long, 2>{3, 3});
    CHECK(q->b[1] == std::array<long, 2>{2, 4});
    // A pi = pi B exactly
    const ExactMatrix a = adjacency_matrix(g);
    ExactMatrix pi(n, 2), bm(2, 2);
    for (std::size_t v = 0; v < n; ++v) pi(v, clique.contains(v) ? 0 : 1) = 1;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) bm(i, j) = q->b[i][j];
    CHECK(a * pi == pi * bm);
    // k = 6 is an eigenvalue of B: B j = 6 j
    CHECK(q->b[0][0] + q->b[0][1] == 6);
    CHECK(q->b[1][0] + q->b[1][1] == 6);

    const std::size_t one[] = {0};
    CHECK_FALSE(equitable_quotient(g, VertexSet::from_members(n, one)));
    CHECK_FALSE(equitable_quotient(g, VertexSet(n)));
}
