#include "switchdim/switchclass.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace switchdim {

std::string to_string(Family f) { return f == Family::johnson ? "johnson" : "hamming"; }

Family parse_family(const std::string& name) {
    if (name == "johnson" || name == "J") return Family::johnson;
    if (name == "hamming" || name == "H") return Family::hamming;
    throw std::invalid_argument("unknown family '" + name + "' (expected johnson or hamming)");
}

Graph build_graph(Family f, int m) { return f == Family::johnson ? johnson(m) : hamming(m); }

std::vector<VertexSet> AdmissibleFamily::vertex_sets() const {
    std::vector<VertexSet> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(s.set);
    return out;
}

namespace {

void sort_family(AdmissibleFamily& fam) {
    std::sort(fam.sets.begin(), fam.sets.end(), [](const AdmissibleSet& x, const AdmissibleSet& y) { return x.set < y.set; });
    auto last = std::unique(fam.sets.begin(), fam.sets.end(),
                            [](const AdmissibleSet& x, const AdmissibleSet& y) { return x.set == y.set; });
    fam.sets.erase(last, fam.sets.end());
}

}  // namespace

AdmissibleFamily brute_force_admissible(const Graph& g, const SrgIdempotents& idem, Subspace s) {
    const std::size_t n = g.order();
    if (n > 24)
        throw std::invalid_argument("brute_force_admissible: n = " + std::to_string(n) +
                                    " exceeds 24; use the structural classifier");
    const long k = idem.eigenvalues[0];
    const long keep = idem.eigenvalues[s == Subspace::e0e1 ? 1 : 2];
    // P = (A - kI)(A - keep I) vanishes exactly on E0 + E_keep. Entries follow
    // from A^2 = k on the diagonal, lambda on edges, mu on non-edges.
    long lambda = 0, mu = 0;
    bool have_l = false, have_m = false;
    for (std::size_t v = 1; v < n && !(have_l && have_m); ++v) {
        if (g.adjacent(0, v) && !have_l) { lambda = static_cast<long>(common_neighbours(g, 0, v)); have_l = true; }
        if (!g.adjacent(0, v) && !have_m) { mu = static_cast<long>(common_neighbours(g, 0, v)); have_m = true; }
    }
    std::vector<long> p(n * n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            p[u * n + v] = u == v ? k + k * keep : (g.adjacent(u, v) ? lambda - (k + keep) : mu);

    AdmissibleFamily fam;
    fam.subspace = s;
    fam.graph_order = n;
    std::vector<long> pu(n, 0);
    std::size_t nonzero = 0;
    VertexSet current(n);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t i = 1; i < total; ++i) {
        const auto v = static_cast<std::size_t>(std::countr_zero(i));
        const bool adding = !current.contains(v);
        if (adding) current.insert(v);
        else current.erase(v);
        const long sign = adding ? 1 : -1;
        for (std::size_t r = 0; r < n; ++r) {
            const long before = pu[r];
            pu[r] += sign * p[r * n + v];
            nonzero += (pu[r] != 0) - (before != 0);
        }
        if (nonzero == 0 && 2 * current.count() <= n) {
            if (!membership(idem, current, s)) throw std::logic_error("brute_force_admissible: projector mismatch");
            fam.sets.push_back({current, "brute-force"});
        }
    }
    sort_family(fam);
    return fam;
}

VertexSet hamming_rows(int m, const std::vector<int>& rows) {
    VertexSet s(static_cast<std::size_t>(m * m));
    for (int x : rows)
        for (int y = 0; y < m; ++y) s.insert(static_cast<std::size_t>(x * m + y));
    return s;
}

VertexSet hamming_cols(int m, const std::vector<int>& cols) {
    VertexSet s(static_cast<std::size_t>(m * m));
    for (int y : cols)
        for (int x = 0; x < m; ++x) s.insert(static_cast<std::size_t>(x * m + y));
    return s;
}

VertexSet johnson_clique(int m, int i) {
    const Graph g = johnson(m);
    VertexSet s(g.order());
    for (std::size_t v = 0; v < g.order(); ++v)
        if (g.labels()[v][0] == i || g.labels()[v][1] == i) s.insert(v);
    return s;
}

bool structural_supported(Family f, int m, Subspace s) {
    if (f == Family::johnson) {
        if (s == Subspace::e0e1) return m >= 4;
        return m == 4 || m == 5;
    }
    if (s == Subspace::e0e1) return m >= 2;
    return m == 3;
}

namespace {

// All k-subsets of {0..n-1} in lexicographic order.
template <class Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (k > n) return;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

bool induces_cycle(const Graph& g, const std::vector<std::size_t>& verts) {
    for (std::size_t v : verts) {
        std::size_t deg = 0;
        for (std::size_t w : verts) deg += g.adjacent(v, w);
        if (deg != 2) return false;
    }
    // 2-regular on 5 vertices is connected unless it splits into a triangle
    // plus an edge, which would need degree 1.
    return true;
}

}  // namespace

AdmissibleFamily structural_admissible(Family f, int m, Subspace s) {
    if (!structural_supported(f, m, s))
        throw std::invalid_argument("structural_admissible: no closed form for " + to_string(f) + " m=" + std::to_string(m) +
                                    " " + to_string(s));
    const Graph g = build_graph(f, m);
    const std::size_t n = g.order();
    AdmissibleFamily fam;
    fam.subspace = s;
    fam.graph_order = n;
    if (f == Family::johnson && s == Subspace::e0e1) {
        for (int i = 0; i < m; ++i) {
            const VertexSet c = johnson_clique(m, i);
            fam.sets.push_back({c, "delsarte-clique"});
            const VertexSet rest = c.complement();
            if (2 * rest.count() <= n) fam.sets.push_back({rest, "clique-complement"});
        }
    } else if (f == Family::hamming && s == Subspace::e0e1) {
        for (int size = 1; size <= m / 2; ++size)
            for_each_subset(m, size, [&](const std::vector<int>& idx) {
                fam.sets.push_back({hamming_rows(m, idx), "row-union"});
                fam.sets.push_back({hamming_cols(m, idx), "column-union"});
            });
    } else if (f == Family::johnson && m == 4) {
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v) {
                const auto& x = g.labels()[u];
                const auto& y = g.labels()[v];
                if (x[0] != y[0] && x[0] != y[1] && x[1] != y[0] && x[1] != y[1]) {
                    const std::size_t members[] = {u, v};
                    fam.sets.push_back({VertexSet::from_members(n, members), "disjoint-pair"});
                }
            }
    } else if (f == Family::johnson && m == 5) {
        for_each_subset(static_cast<int>(n), 5, [&](const std::vector<int>& idx) {
            std::vector<std::size_t> verts(idx.begin(), idx.end());
            if (induces_cycle(g, verts)) fam.sets.push_back({VertexSet::from_members(n, verts), "induced-5-cycle"});
        });
    } else {  // Hamming m = 3, E0 + E2
        for_each_subset(static_cast<int>(n), 3, [&](const std::vector<int>& idx) {
            std::vector<std::size_t> verts(idx.begin(), idx.end());
            bool independent = true;
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = i + 1; j < 3; ++j) independent = independent && !g.adjacent(verts[i], verts[j]);
            if (independent) fam.sets.push_back({VertexSet::from_members(n, verts), "coclique"});
        });
    }
    sort_family(fam);
    return fam;
}

SwitchContext::SwitchContext(Graph g) : graph(std::move(g)), params(srg_params(graph)) {
    if (params && params->spectrum) idem = srg_idempotents(graph, *params);
}

SwitchReport switch_dimensionality(const SwitchContext& ctx, const VertexSet& u, const Dissimilarity& d) {
    const Graph& g = ctx.graph;
    const std::size_t n = g.order();
    if (!is_regular(g)) throw std::invalid_argument("switch_dimensionality: base graph must be regular");
    SwitchReport rep;
    rep.u = u;
    rep.a = d.a();
    rep.b = d.b();

    const Graph switched = seidel_switch(g, u);
    const std::size_t edges = switched.edge_count();
    rep.realizable = edges != 0 && edges != n * (n - 1) / 2;

    const ExactMatrix f = gower_center(dissimilarity_matrix(switched, d), centroid_weights(n));
    rep.signature_of_f = inertia(f);
    rep.dimensionality = rep.signature_of_f.rank();

    if (ctx.params && ctx.params->spectrum) {
        Signature big;
        for (const auto& e : switched_eigenvalues(*ctx.params, d)) {
            if (e.value.sign() > 0) big.positive += e.multiplicity;
            else if (e.value.sign() < 0) big.negative += e.multiplicity;
            else big.zero += e.multiplicity;
        }
        rep.signature_of_big = big;
    } else {
        rep.signature_of_big = inertia(shifted_matrix(switched, d));
    }

    try {
        SpectralReport sr = main_eigenvalue_analysis(g, d, u, ctx.idem ? &*ctx.idem : nullptr);
        const Signature predicted = signature_from_spectrum(sr, rep.signature_of_big);
        sr.signature_of_big = rep.signature_of_big;
        sr.signature_of_f = predicted;
        if (predicted != rep.signature_of_f)
            throw std::logic_error("spectral signature " + to_string(predicted) + " disagrees with exact inertia " +
                                   to_string(rep.signature_of_f));
        rep.spectral = std::move(sr);
    } catch (const NoFastPath&) {
    }
    return rep;
}

std::vector<CandidateRatio> candidate_ratios(const SrgParams& params) {
    if (!params.spectrum) throw std::invalid_argument("candidate_ratios: spectrum unavailable");
    std::vector<CandidateRatio> out;
    auto push = [&](Rational a, Rational b, const std::string& reason) {
        for (auto& c : out)
            if (c.a == a && c.b == b) {
                c.reason += ", " + reason;
                return;
            }
        out.push_back({std::move(a), std::move(b), reason});
    };
    // mu_i = 2 lambda_i a - 2 b (1 + lambda_i) vanishes at b/a = lambda_i / (1 + lambda_i).
    auto kill = [&](long lambda, const std::string& reason) {
        if (1 + lambda == 0) push(Rational(0), Rational(1), reason);
        else push(Rational(1), Rational(lambda, 1 + lambda), reason);
    };
    kill(params.spectrum->eigenvalues[2], "annihilate E2");
    kill(params.spectrum->eigenvalues[1], "annihilate E1");
    // mu0 = (2k - n) a - (2k - n + 2) b
    const long c = 2 * params.k - params.n + 2;
    if (c == 0) push(Rational(0), Rational(1), "mu0 = 0");
    else push(Rational(1), Rational(2 * params.k - params.n, c), "mu0 = 0");
    return out;
}

namespace {

std::string describe(const Graph& g, const VertexSet& u) {
    if (u.empty()) return "{}";
    std::string s = "{";
    bool first = true;
    for (std::size_t v : u.members()) {
        if (!first) s += " ";
        s += g.label(v);
        first = false;
    }
    return s + "}";
}

struct Aggregate {
    std::optional<std::size_t> best;
    std::map<std::pair<std::size_t, std::size_t>, Witness> at_best;
    std::size_t evaluations = 0;

    void offer(const Graph& g, const SwitchReport& r) {
        ++evaluations;
        if (!r.realizable) return;
        const std::size_t d = r.dimensionality;
        if (best && d > *best) return;
        if (!best || d < *best) {
            best = d;
            at_best.clear();
        }
        const auto key = std::make_pair(r.signature_of_f.positive, r.signature_of_f.negative);
        if (!at_best.contains(key)) at_best.emplace(key, Witness{r.signature_of_f, r.u, describe(g, r.u), r.a, r.b});
    }
};

}  // namespace

TableRow minimum_dimensionality(Family f, int m) {
    if ((f == Family::johnson && m < 4) || (f == Family::hamming && m < 2))
        throw std::invalid_argument("minimum_dimensionality: " + to_string(f) + " m=" + std::to_string(m) +
                                    " is out of range (johnson m >= 4, hamming m >= 2)");
    SwitchContext ctx(build_graph(f, m));
    const Graph& g = ctx.graph;
    const std::size_t n = g.order();
    if (!ctx.params || !ctx.params->spectrum) throw std::logic_error("family graph is not strongly regular");
    const SrgParams& params = *ctx.params;
    Aggregate agg;

    const auto ratios = candidate_ratios(params);
    const bool whole_class = f == Family::hamming && m == 2;
    for (const auto& ratio : ratios) {
        const Dissimilarity d(ratio.a, ratio.b);
        if (whole_class) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                VertexSet u(n);
                for (std::size_t v = 0; v < n; ++v)
                    if ((mask >> v) & 1U) u.insert(v);
                if (2 * u.count() > n) continue;
                agg.offer(g, switch_dimensionality(ctx, u, d));
            }
            continue;
        }
        const auto mu = switched_eigenvalues(params, d);
        std::size_t rank = 0;
        for (const auto& e : mu)
            if (!e.value.is_zero()) rank += e.multiplicity;
        // Any switching set leaves at least rank(2D' - (a+b)J) - 2 dimensions.
        const std::size_t lower = rank >= 2 ? rank - 2 : 0;
        if (agg.best && lower > *agg.best) continue;

        int killed = 0;
        if (mu[2].value.is_zero()) killed = 2;
        else if (mu[1].value.is_zero()) killed = 1;
        if (killed == 0)
            throw std::logic_error("ratio b/a = " + ratio.b.to_string() + " annihilates no idempotent and cannot be pruned");
        // u outside E0 + E_t makes the zero eigenvalue main, giving rank(...)
        // dimensions, which U = {} already matches or beats.
        const Subspace sub = killed == 2 ? Subspace::e0e1 : Subspace::e0e2;
        AdmissibleFamily fam = structural_supported(f, m, sub) ? structural_admissible(f, m, sub)
                               : n <= 24               ? brute_force_admissible(g, *ctx.idem, sub)
                                                       : throw std::logic_error("no admissible classifier for " +
                                                                                to_string(f) + " m=" + std::to_string(m));
        agg.offer(g, switch_dimensionality(ctx, VertexSet(n), d));
        for (const auto& s : fam.sets) agg.offer(g, switch_dimensionality(ctx, s.set, d));
    }
    if (!agg.best) throw std::logic_error("no realizable graph in the switching class");
    // Ratios outside the candidate list keep 2D' - (a+b)J nonsingular, so
    // they cannot go below n - 2.
    if (n < 2 || n - 2 <= *agg.best)
        throw std::logic_error("generic ratios are not excluded by the n - 2 bound");

    TableRow row;
    row.family = f;
    row.m = m;
    row.n = n;
    row.min_dim = *agg.best;
    row.evaluations = agg.evaluations;
    for (auto it = agg.at_best.rbegin(); it != agg.at_best.rend(); ++it) {
        row.signatures.push_back(it->first);
        row.witnesses.push_back(it->second);
    }
    return row;
}

long HammingThreshold::numerator(int m, long s) {
    const long ml = m;
    return 2 * s * (s - ml) * (ml - 2) + ml * ml;
}

HammingThreshold hamming_threshold(int m) {
    if (m < 5) throw std::invalid_argument("hamming_threshold: m must be at least 5");
    HammingThreshold t;
    t.m = m;
    t.radicand = Rational(m - 4, m - 2);
    // t < x  <=>  1 - 2x/m < sqrt(r)  <=>  1 - 2x/m < 0  or  (1 - 2x/m)^2 < r
    auto below_x = [&](const Rational& x) {
        const Rational w = Rational(1) - Rational(2) * x / Rational(m);
        return w.sign() < 0 || w * w < t.radicand;
    };
    Rational lo(0), hi(m, 2);
    while (hi - lo >= Rational(1, 4)) {
        const Rational mid = (lo + hi) / Rational(2);
        if (below_x(mid)) hi = mid;
        else lo = mid;
    }
    t.lower = lo;
    t.upper = hi;
    for (long s = 0; 2 * s <= m; ++s) {
        const long num = HammingThreshold::numerator(m, s);
        if (num == 0) throw std::logic_error("t_m is an integer for m = " + std::to_string(m));
        const Rational rs(s);
        if ((rs <= lo && num <= 0) || (rs >= hi && num >= 0))
            throw std::logic_error("isolating interval disagrees with the integer comparison");
    }
    return t;
}

std::vector<BranchCheck> hamming_branch_check(int m) {
    const HammingThreshold t = hamming_threshold(m);
    const SwitchContext ctx(hamming(m));
    const Dissimilarity d(1, 2);
    const auto um = static_cast<std::size_t>(m);
    std::vector<BranchCheck> out;
    for (long s = 1; 2 * s <= m; ++s) {
        std::vector<int> rows;
        for (int i = 0; i < s; ++i) rows.push_back(i);
        BranchCheck c;
        c.s = s;
        c.below_threshold = t.below(s);
        c.expected = c.below_threshold ? Signature{2 * um - 2, 0, 0} : Signature{2 * um - 3, 1, 0};
        c.observed = switch_dimensionality(ctx, hamming_rows(m, rows), d).signature_of_f;
        c.expected.zero = um * um - c.expected.rank();
        out.push_back(c);
    }
    return out;
}

GoldenRow golden_row(Family f, int m) {
    using P = std::pair<std::size_t, std::size_t>;
    const auto um = static_cast<std::size_t>(m);
    if (f == Family::johnson) {
        if (m < 4) throw std::invalid_argument("golden_row: johnson m >= 4");
        switch (m) {
            case 4: return {2, {P{2, 0}, P{1, 1}}};
            case 5: return {4, {P{4, 0}}};
            case 6: return {5, {P{5, 0}}};
            case 7: return {6, {P{6, 0}}};
            case 8: return {7, {P{7, 0}}};
            case 9: return {8, {P{8, 0}}};
            case 10: return {8, {P{8, 0}}};
            default: return {um - 1, {P{um - 1, 0}, P{um - 2, 1}}};
        }
    }
    if (m < 2) throw std::invalid_argument("golden_row: hamming m >= 2");
    switch (m) {
        case 2: return {1, {P{1, 0}}};
        case 3: return {4, {P{4, 0}}};
        case 4: return {5, {P{5, 0}}};
        default: return {2 * um - 2, {P{2 * um - 2, 0}, P{2 * um - 3, 1}}};
    }
}

bool matches_golden(const TableRow& row) {
    const GoldenRow g = golden_row(row.family, row.m);
    return g.d == row.min_dim && g.signatures == row.signatures;
}

}  // namespace switchdim
