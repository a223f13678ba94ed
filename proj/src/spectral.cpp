#include "switchdim/spectral.hpp"

#include <map>

namespace switchdim {

Dissimilarity::Dissimilarity(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_ == b_) throw std::invalid_argument("dissimilarity needs two distinct values (a == b)");
}

ExactMatrix dissimilarity_matrix(const Graph& g, const Dissimilarity& d) {
    const std::size_t n = g.order();
    ExactMatrix m(n, n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u != v) m(u, v) = g.adjacent(u, v) ? d.a() : d.b();
    return m;
}

ExactMatrix s_matrix(const Graph& g, const Dissimilarity& d) {
    const std::size_t n = g.order();
    const Rational diff = d.a() - d.b();
    ExactMatrix m(n, n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u != v) m(u, v) = g.adjacent(u, v) ? diff : -diff;
    return m;
}

ExactMatrix shifted_matrix(const Graph& g, const Dissimilarity& d) {
    // 2D - (a+b)J = S_D - (a+b)I
    ExactMatrix m = s_matrix(g, d);
    const Rational c = d.a() + d.b();
    for (std::size_t v = 0; v < g.order(); ++v) m(v, v) -= c;
    return m;
}

SrgIdempotents srg_idempotents(const Graph& g, const SrgParams& params) {
    if (!params.spectrum)
        throw std::invalid_argument("srg_idempotents: irrational eigenvalues (conference graph) are not supported");
    const std::size_t n = g.order();
    const auto& ev = params.spectrum->eigenvalues;
    SrgIdempotents out;
    out.eigenvalues = ev;
    out.multiplicities = params.spectrum->multiplicities;

    // A^2 has k on the diagonal, lambda on edges and mu on non-edges, so
    // (A - xI)(A - yI) = A^2 - (x+y) A + xy I is evaluated entrywise.
    auto product = [&](long x, long y, const Rational& scale) {
        ExactMatrix m(n, n);
        const long diag = params.k + x * y;
        const long adj = params.lambda - (x + y);
        const long non = params.mu;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) {
                const long e = u == v ? diag : (g.adjacent(u, v) ? adj : non);
                m(u, v) = Rational(e) * scale;
            }
        return m;
    };
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        const int l = (i + 2) % 3;
        const Rational scale = Rational(1) / Rational((ev[i] - ev[j]) * (ev[i] - ev[l]));
        out.e[i] = product(ev[j], ev[l], scale);
    }
    return out;
}

Rational switched_eigenvalue(long n, long k, long theta, bool principal, const Dissimilarity& d) {
    const Rational diff = d.a() - d.b();
    const Rational sum = d.a() + d.b();
    const long t = principal ? 2 * k - n + 1 : 2 * theta + 1;
    return diff * Rational(t) - sum;
}

std::array<EigenvalueEntry, 3> switched_eigenvalues(const SrgParams& params, const Dissimilarity& d) {
    if (!params.spectrum) throw std::invalid_argument("switched_eigenvalues: spectrum unavailable");
    const auto& ev = params.spectrum->eigenvalues;
    const auto& mult = params.spectrum->multiplicities;
    std::array<EigenvalueEntry, 3> out;
    for (int i = 0; i < 3; ++i) {
        out[i].value = switched_eigenvalue(params.n, params.k, ev[i], i == 0, d);
        out[i].multiplicity = static_cast<std::size_t>(mult[i]);
    }
    return out;
}

std::string to_string(Subspace s) { return s == Subspace::e0e1 ? "E0+E1" : "E0+E2"; }

namespace {

bool annihilates(const ExactMatrix& e, const VertexSet& u) {
    const auto members = u.members();
    for (std::size_t r = 0; r < e.rows(); ++r) {
        Rational acc(0);
        for (std::size_t v : members) acc += e(r, v);
        if (!acc.is_zero()) return false;
    }
    return true;
}

}  // namespace

bool membership(const SrgIdempotents& idem, const VertexSet& u, Subspace s) {
    return annihilates(idem.e[s == Subspace::e0e1 ? 2 : 1], u);
}

namespace {

// Main angles for u in E0 + E_t: n beta0^2 = (n - 2|U|)^2 / n.
void fill_pair_angles(SpectralReport& r, std::size_t principal, std::size_t other, std::size_t n, std::size_t size) {
    const Rational diff(static_cast<long>(n) - 2 * static_cast<long>(size));
    const Rational b0 = diff * diff / Rational(static_cast<long>(n * n));
    r.entries[principal].angle_sq = b0;
    r.entries[principal].main = !b0.is_zero();
    r.entries[other].angle_sq = Rational(1) - b0;
    r.entries[other].main = !r.entries[other].angle_sq.is_zero();
}

}  // namespace

SpectralReport main_eigenvalue_analysis(const Graph& g, const Dissimilarity& d, const VertexSet& u,
                                        const SrgIdempotents* idem) {
    const std::size_t n = g.order();
    if (u.universe() != n) throw std::invalid_argument("main_eigenvalue_analysis: vertex set from another graph");
    if (!is_regular(g)) throw NoFastPath("base graph is not regular");
    const std::size_t size = u.count();

    const auto params = srg_params(g);
    if (params && params->spectrum) {
        std::optional<SrgIdempotents> own;
        if (idem == nullptr) {
            own = srg_idempotents(g, *params);
            idem = &*own;
        }
        SpectralReport r;
        r.complete_spectrum = true;
        for (const auto& e : switched_eigenvalues(*params, d)) r.entries.push_back({e.value, e.multiplicity, false, Rational(0)});
        if (size == 0 || size == n) {
            r.path = "srg:trivial";
            r.entries[0].main = true;
            r.entries[0].angle_sq = Rational(1);
            return r;
        }
        if (membership(*idem, u, Subspace::e0e1)) {
            r.path = "srg:E0+E1";
            fill_pair_angles(r, 0, 1, n, size);
            return r;
        }
        if (membership(*idem, u, Subspace::e0e2)) {
            r.path = "srg:E0+E2";
            fill_pair_angles(r, 0, 2, n, size);
            return r;
        }
        throw NoFastPath("characteristic vector lies in neither E0+E1 nor E0+E2");
    }

    const auto q = equitable_quotient(g, u);
    if (!q) throw NoFastPath("partition {U, V\\U} is not equitable");
    const long k = static_cast<long>(g.degree(0));
    const long theta = q->b[0][0] - q->b[1][0];
    SpectralReport r;
    r.path = "equitable";
    r.entries.push_back({switched_eigenvalue(static_cast<long>(n), k, k, true, d), 0, false, Rational(0)});
    r.entries.push_back({switched_eigenvalue(static_cast<long>(n), k, theta, false, d), 0, false, Rational(0)});
    fill_pair_angles(r, 0, 1, n, size);
    return r;
}

Signature signature_from_spectrum(const SpectralReport& report, const Signature& big,
                                  std::optional<bool> zero_in_jperp) {
    bool zero_main = false;
    Rational s(0);
    for (const auto& e : report.entries) {
        if (!e.main) continue;
        if (e.mu.is_zero()) zero_main = true;
        else s += e.angle_sq / e.mu;
    }
    if (zero_in_jperp && *zero_in_jperp == zero_main)
        throw std::invalid_argument(zero_main ? "a main eigenvalue is zero, so the 0-eigenspace is not in j-perp"
                                              : "0-eigenspace reported outside j-perp but no main eigenvalue is zero");
    const std::size_t n = big.order();
    const std::size_t p = big.positive;
    const std::size_t q = big.negative;
    std::size_t fp = 0, fq = 0;
    auto need = [](std::size_t v) {
        if (v == 0) throw std::invalid_argument("signature rule needs a nonzero eigenvalue of the required sign");
        return v - 1;
    };
    // F_M(l) has the signature of -M restricted to the complement of l.
    if (zero_main) {
        fp = q;
        fq = p;
    } else if (s.is_zero()) {
        fp = need(q);
        fq = need(p);
    } else if (s.sign() > 0) {
        fp = q;
        fq = need(p);
    } else {
        fp = need(q);
        fq = p;
    }
    return {fp, fq, n - fp - fq};
}

Rational idempotent_coefficient(long lambda, const Dissimilarity& d) {
    return d.a() * Rational(lambda) - d.b() * Rational(1 + lambda);
}

SrgDimensionality srg_dimensionality(const Graph& g, const Dissimilarity& d, const SrgIdempotents& idem) {
    const std::size_t n = g.order();
    const ExactMatrix f = gower_center(dissimilarity_matrix(g, d), centroid_weights(n));
    SrgDimensionality out;
    ExactMatrix rebuilt(n, n);
    for (int i = 0; i < 3; ++i) {
        // trace(F E_i) / m_i; E_i symmetric so the trace is an entrywise sum.
        Rational t(0);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) add_mul(t, f(r, c), idem.e[i](r, c));
        out.coefficients[i] = t / Rational(idem.multiplicities[i]);
        rebuilt += idem.e[i] * out.coefficients[i];
    }
    if (!(rebuilt == f)) throw std::logic_error("srg_dimensionality: F is not in the span of the idempotents");
    for (int i = 1; i < 3; ++i) {
        const auto m = static_cast<std::size_t>(idem.multiplicities[i]);
        if (out.coefficients[i].sign() > 0) out.signature.positive += m;
        else if (out.coefficients[i].sign() < 0) out.signature.negative += m;
    }
    out.signature.zero = n - out.signature.rank();
    out.dimensionality = out.signature.rank();
    return out;
}

namespace {

std::vector<Rational> poly_mul_linear(const std::vector<Rational>& p, const Rational& root) {
    // p(x) * (root - x)
    std::vector<Rational> out(p.size() + 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] += p[i] * root;
        out[i + 1] -= p[i];
    }
    return out;
}

std::size_t sign_changes(const std::vector<Rational>& c) {
    std::size_t changes = 0;
    int last = 0;
    for (const auto& v : c) {
        const int s = v.sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

MainPolynomial main_eigenvalues_of_shift(const SpectralReport& report, const Rational& shift, std::size_t n) {
    if (!report.complete_spectrum) throw std::invalid_argument("main_eigenvalues_of_shift: full spectrum required");
    // Merge equal eigenvalues: (total multiplicity, summed n*beta^2, any main).
    struct Group {
        std::size_t multiplicity = 0;
        Rational weight;
        bool main = false;
    };
    std::map<Rational, Group> groups;
    for (const auto& e : report.entries) {
        auto& grp = groups[e.mu];
        grp.multiplicity += e.multiplicity;
        grp.weight += e.angle_sq * Rational(static_cast<long>(n));
        grp.main = grp.main || e.main;
    }
    std::vector<std::pair<Rational, Rational>> mains;
    MainPolynomial out;
    for (const auto& [mu, grp] : groups) {
        const std::size_t rest = grp.main ? grp.multiplicity - 1 : grp.multiplicity;
        if (mu.sign() > 0) out.signature_of_d.positive += rest;
        else if (mu.sign() < 0) out.signature_of_d.negative += rest;
        else out.signature_of_d.zero += rest;
        if (grp.main) mains.emplace_back(mu, grp.weight);
    }
    // P(x) = prod (mu_i - x) + shift * sum w_i prod_{j != i} (mu_j - x)
    std::vector<Rational> p{Rational(1)};
    for (const auto& [mu, w] : mains) p = poly_mul_linear(p, mu);
    for (std::size_t i = 0; i < mains.size(); ++i) {
        std::vector<Rational> term{shift * mains[i].second};
        for (std::size_t j = 0; j < mains.size(); ++j)
            if (j != i) term = poly_mul_linear(term, mains[j].first);
        for (std::size_t c = 0; c < term.size(); ++c) p[c] += term[c];
    }
    out.coefficients = p;
    std::size_t z = 0;
    while (z < p.size() && p[z].is_zero()) ++z;
    std::vector<Rational> reduced(p.begin() + static_cast<long>(z), p.end());
    out.zero_roots = z;
    // All roots are real (eigenvalues of a symmetric matrix), so Descartes'
    // rule counts them exactly.
    out.positive_roots = sign_changes(reduced);
    std::vector<Rational> flipped = reduced;
    for (std::size_t c = 1; c < flipped.size(); c += 2) flipped[c] = -flipped[c];
    out.negative_roots = sign_changes(flipped);
    out.signature_of_d.positive += out.positive_roots;
    out.signature_of_d.negative += out.negative_roots;
    out.signature_of_d.zero += out.zero_roots;
    return out;
}

}  // namespace switchdim
