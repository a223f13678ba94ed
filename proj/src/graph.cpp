#include "switchdim/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "switchdim/kernels.hpp"

namespace switchdim {

// VertexSet ---------------------------------------------------------------

VertexSet VertexSet::from_members(std::size_t universe, std::span<const std::size_t> members) {
    VertexSet s(universe);
    for (std::size_t v : members) s.insert(v);
    return s;
}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t v = 0; v < universe; ++v) s.insert(v);
    return s;
}

std::size_t VertexSet::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

void VertexSet::insert(std::size_t v) {
    if (v >= universe_) throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." + std::to_string(universe_));
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(std::size_t v) {
    if (v >= universe_) throw std::out_of_range("vertex outside universe");
    words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

VertexSet VertexSet::complement() const {
    VertexSet c(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
    if (universe_ % 64 != 0 && !c.words_.empty()) c.words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    return c;
}

std::vector<std::size_t> VertexSet::members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w != 0) {
            out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

RationalVector VertexSet::indicator() const {
    RationalVector u(universe_, Rational(0));
    for (std::size_t v : members()) u[v] = Rational(1);
    return u;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.count() <=> b.count(); c != 0) return c;
    const auto ma = a.members();
    const auto mb = b.members();
    return std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
}

// Graph -------------------------------------------------------------------

Graph::Graph(std::size_t n) : rows_(n, VertexSet(n)) {}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (const auto& r : rows_) total += r.count();
    return total / 2;
}

std::vector<std::array<std::size_t, 2>> Graph::edges() const {
    std::vector<std::array<std::size_t, 2>> out;
    for (std::size_t u = 0; u < order(); ++u)
        for (std::size_t v : rows_[u].members())
            if (u < v) out.push_back({u, v});
    return out;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw std::invalid_argument("loops are not allowed");
    rows_.at(u).insert(v);
    rows_.at(v).insert(u);
}

void Graph::remove_edge(std::size_t u, std::size_t v) {
    rows_.at(u).erase(v);
    rows_.at(v).erase(u);
}

void Graph::set_labels(LabelKind kind, std::vector<std::array<int, 2>> labels) {
    if (kind != LabelKind::none && labels.size() != order())
        throw std::invalid_argument("label count does not match vertex count");
    label_kind_ = kind;
    labels_ = kind == LabelKind::none ? std::vector<std::array<int, 2>>{} : std::move(labels);
}

std::string Graph::label(std::size_t v) const {
    switch (label_kind_) {
        case LabelKind::subset2:
            return "{" + std::to_string(labels_[v][0]) + "," + std::to_string(labels_[v][1]) + "}";
        case LabelKind::pair:
            return "(" + std::to_string(labels_[v][0]) + "," + std::to_string(labels_[v][1]) + ")";
        case LabelKind::none: break;
    }
    return std::to_string(v);
}

Graph johnson(int m) {
    if (m < 2) throw std::invalid_argument("johnson: m must be at least 2");
    std::vector<std::array<int, 2>> labels;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) labels.push_back({i, j});
    Graph g(labels.size());
    for (std::size_t u = 0; u < labels.size(); ++u)
        for (std::size_t v = u + 1; v < labels.size(); ++v) {
            const auto& s = labels[u];
            const auto& t = labels[v];
            const int shared = (s[0] == t[0] || s[0] == t[1]) + (s[1] == t[0] || s[1] == t[1]);
            if (shared == 1) g.add_edge(u, v);
        }
    g.set_labels(LabelKind::subset2, std::move(labels));
    return g;
}

Graph hamming(int m) {
    if (m < 2) throw std::invalid_argument("hamming: m must be at least 2");
    std::vector<std::array<int, 2>> labels;
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) labels.push_back({x, y});
    Graph g(labels.size());
    for (std::size_t u = 0; u < labels.size(); ++u)
        for (std::size_t v = u + 1; v < labels.size(); ++v) {
            const int differ = (labels[u][0] != labels[v][0]) + (labels[u][1] != labels[v][1]);
            if (differ == 1) g.add_edge(u, v);
        }
    g.set_labels(LabelKind::pair, std::move(labels));
    return g;
}

Graph complement(const Graph& g) {
    Graph c(g.order());
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    c.set_labels(g.label_kind(), g.labels());
    return c;
}

Graph seidel_switch(const Graph& g, const VertexSet& u) {
    if (u.universe() != g.order()) throw std::invalid_argument("seidel_switch: vertex set from another graph");
    Graph s(g.order());
    for (std::size_t x = 0; x < g.order(); ++x)
        for (std::size_t y = x + 1; y < g.order(); ++y) {
            const bool across = u.contains(x) != u.contains(y);
            if (g.adjacent(x, y) != across) s.add_edge(x, y);
        }
    s.set_labels(g.label_kind(), g.labels());
    return s;
}

ExactMatrix adjacency_matrix(const Graph& g) {
    ExactMatrix a(g.order(), g.order());
    for (const auto& [u, v] : g.edges()) {
        a(u, v) = 1;
        a(v, u) = 1;
    }
    return a;
}

ExactMatrix seidel_matrix(const Graph& g) {
    ExactMatrix s(g.order(), g.order());
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = 0; v < g.order(); ++v)
            if (u != v) s(u, v) = g.adjacent(u, v) ? 1 : -1;
    return s;
}

ExactMatrix switching_matrix(const VertexSet& u) {
    ExactMatrix m(u.universe(), u.universe());
    for (std::size_t v = 0; v < u.universe(); ++v) m(v, v) = u.contains(v) ? -1 : 1;
    return m;
}

bool is_regular(const Graph& g) {
    if (g.order() == 0) return true;
    const std::size_t k = g.degree(0);
    for (std::size_t v = 1; v < g.order(); ++v)
        if (g.degree(v) != k) return false;
    return true;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    VertexSet seen(g.order());
    std::vector<std::size_t> stack{0};
    seen.insert(0);
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : g.neighbours(v).members())
            if (!seen.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
    }
    return seen.count() == g.order();
}

std::size_t common_neighbours(const Graph& g, std::size_t u, std::size_t v) {
    return static_cast<std::size_t>(kernels::and_popcount(g.neighbours(u).words(), g.neighbours(v).words()));
}

namespace {

long isqrt_exact(long x) {
    if (x < 0) return -1;
    long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(x))));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r * r == x ? r : -1;
}

}  // namespace

std::optional<SrgParams> srg_params(const Graph& g) {
    const std::size_t n = g.order();
    if (n < 3 || !is_regular(g) || !is_connected(g)) return std::nullopt;
    const long k = static_cast<long>(g.degree(0));
    if (k == 0 || k == static_cast<long>(n) - 1) return std::nullopt;
    long lambda = -1, mu = -1;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            const long c = static_cast<long>(common_neighbours(g, u, v));
            long& slot = g.adjacent(u, v) ? lambda : mu;
            if (slot < 0) slot = c;
            else if (slot != c) return std::nullopt;
        }
    SrgParams p{static_cast<long>(n), k, lambda, mu, std::nullopt};
    // Non-principal eigenvalues solve x^2 - (lambda - mu) x - (k - mu) = 0.
    const long delta = (lambda - mu) * (lambda - mu) + 4 * (k - mu);
    const long root = isqrt_exact(delta);
    if (root < 0) return p;  // conference graph
    if ((lambda - mu + root) % 2 != 0) return p;
    const long l1 = (lambda - mu + root) / 2;
    const long l2 = (lambda - mu - root) / 2;
    // Multiplicities from trace(A) = 0 and m1 + m2 = n - 1.
    const long num = -(k + (static_cast<long>(n) - 1) * l2);
    if (num % (l1 - l2) != 0) return p;
    const long m1 = num / (l1 - l2);
    const long m2 = static_cast<long>(n) - 1 - m1;
    if (m1 <= 0 || m2 <= 0) return p;
    p.spectrum = SrgSpectrum{{k, l1, l2}, {1, m1, m2}};
    return p;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    const auto m = s.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (!g.adjacent(m[i], m[j])) return false;
    return true;
}

namespace {

struct CliqueSearch {
    const Graph& g;
    std::size_t target;
    std::vector<std::size_t> current;
    std::vector<VertexSet> found;

    void run(const VertexSet& candidates) {
        if (current.size() == target) {
            found.push_back(VertexSet::from_members(g.order(), current));
            return;
        }
        const auto cand = candidates.members();
        if (current.size() + cand.size() < target) return;
        for (std::size_t idx = 0; idx < cand.size(); ++idx) {
            if (current.size() + (cand.size() - idx) < target) return;
            const std::size_t v = cand[idx];
            // Extend only with later candidates adjacent to v, so each clique appears once.
            VertexSet next(g.order());
            for (std::size_t j = idx + 1; j < cand.size(); ++j)
                if (g.adjacent(v, cand[j])) next.insert(cand[j]);
            current.push_back(v);
            run(next);
            current.pop_back();
        }
    }
};

}  // namespace

std::vector<VertexSet> delsarte_cliques(const Graph& g, const SrgParams& params) {
    if (!params.spectrum) return {};
    const long l2 = params.spectrum->eigenvalues[2];
    if (l2 >= 0 || params.k % (-l2) != 0) return {};
    const std::size_t size = static_cast<std::size_t>(1 + params.k / (-l2));
    CliqueSearch search{g, size, {}, {}};
    search.run(VertexSet::full(g.order()));
    std::sort(search.found.begin(), search.found.end());
    return search.found;
}

std::optional<EquitableQuotient> equitable_quotient(const Graph& g, const VertexSet& u) {
    const std::size_t n = g.order();
    if (u.universe() != n) throw std::invalid_argument("equitable_quotient: vertex set from another graph");
    const std::size_t size = u.count();
    if (size == 0 || size == n) return std::nullopt;
    const VertexSet w = u.complement();
    EquitableQuotient q{u, {}};
    std::array<bool, 2> seen{false, false};
    for (std::size_t v = 0; v < n; ++v) {
        const int part = u.contains(v) ? 0 : 1;
        const long into_u = static_cast<long>(kernels::and_popcount(g.neighbours(v).words(), u.words()));
        const long into_w = static_cast<long>(kernels::and_popcount(g.neighbours(v).words(), w.words()));
        if (!seen[part]) {
            q.b[part] = {into_u, into_w};
            seen[part] = true;
        } else if (q.b[part][0] != into_u || q.b[part][1] != into_w) {
            return std::nullopt;
        }
    }
    return q;
}

}  // namespace switchdim
