#include "switchdim/represent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "switchdim/kernels.hpp"

namespace switchdim {

std::size_t PointConfiguration::distinct_points() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < duplicate_of.size(); ++i) c += duplicate_of[i] == i;
    return duplicate_of.empty() ? points.size() : c;
}

double scalar_square(std::span<const double> x, std::span<const double> y, std::size_t p) {
    return kernels::scalar_square_diff(x, y, p);
}

namespace {

double max_abs(const ExactMatrix& m) {
    double v = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (const auto& e : m.row(i)) v = std::max(v, std::abs(e.to_double()));
    return v;
}

double coordinate_scale(const PointConfiguration& x) {
    double s = 1.0;
    for (const auto& pt : x.points) {
        double e = 0.0;
        for (double c : pt) e += c * c;
        s = std::max(s, e);
    }
    return s;
}

}  // namespace

void mark_duplicates(PointConfiguration& x) {
    const std::size_t n = x.points.size();
    const double tol = x.tolerance * coordinate_scale(x);
    x.duplicate_of.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        x.duplicate_of[i] = i;
        for (std::size_t j = 0; j < i; ++j) {
            if (x.duplicate_of[j] != j) continue;
            // Euclidean (not pseudo-Euclidean) closeness: null vectors are not duplicates.
            double e = 0.0;
            for (std::size_t c = 0; c < x.points[i].size(); ++c) {
                const double d = x.points[i][c] - x.points[j][c];
                e += d * d;
            }
            if (e <= tol) {
                x.duplicate_of[i] = j;
                break;
            }
        }
    }
}

PointConfiguration realize(const ExactMatrix& f, const ExactMatrix& target, double tol) {
    if (!f.is_symmetric()) throw std::invalid_argument("realize: F must be symmetric");
    const std::size_t n = f.rows();
    if (target.rows() != n || target.cols() != n) throw std::invalid_argument("realize: target size mismatch");
    const Signature exact = inertia(f);

    RealMatrix gram = RealMatrix::from_exact(f);
    for (std::size_t i = 0; i < n; ++i)
        for (double& v : gram.row(i)) v *= 0.5;
    const double threshold = zero_threshold(gram);
    const FloatEigenDecomposition eig = jacobi_eigen(gram);

    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < eig.eigenvalues.size(); ++i) {
        if (eig.eigenvalues[i] > threshold) pos.push_back(i);
        else if (eig.eigenvalues[i] < -threshold) neg.push_back(i);
    }
    if (pos.size() != exact.positive || neg.size() != exact.negative)
        throw RealizationError("float split (" + std::to_string(pos.size()) + "," + std::to_string(neg.size()) +
                                   ") differs from exact inertia " + to_string(exact),
                               0, 0, 0.0);
    // Negative part ordered by decreasing |lambda|, mirroring the positive part.
    std::reverse(neg.begin(), neg.end());

    PointConfiguration x;
    x.p = pos.size();
    x.q = neg.size();
    x.source = target;
    x.tolerance = tol;
    x.points.assign(n, std::vector<double>(x.p + x.q, 0.0));
    std::size_t col = 0;
    for (const auto* group : {&pos, &neg}) {
        for (std::size_t idx : *group) {
            const double w = std::sqrt(std::abs(eig.eigenvalues[idx]));
            for (std::size_t v = 0; v < n; ++v) x.points[v][col] = eig.eigenvectors[idx][v] * w;
            ++col;
        }
    }
    for (std::size_t v = 0; v < n; ++v) x.labels.push_back(std::to_string(v));

    const double scale = std::max(1.0, max_abs(target));
    std::size_t wi = 0, wj = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dev = std::abs(scalar_square(x.points[i], x.points[j], x.p) - target(i, j).to_double()) / scale;
            if (dev > x.max_deviation) {
                x.max_deviation = dev;
                wi = i;
                wj = j;
            }
        }
    if (x.max_deviation > tol)
        throw RealizationError("realization residual " + std::to_string(x.max_deviation) + " at pair (" +
                                   std::to_string(wi) + "," + std::to_string(wj) + ") exceeds tolerance",
                               wi, wj, x.max_deviation);
    mark_duplicates(x);
    return x;
}

namespace {

std::vector<std::size_t> representatives(const PointConfiguration& x) {
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < x.points.size(); ++i)
        if (x.duplicate_of.empty() || x.duplicate_of[i] == i) reps.push_back(i);
    return reps;
}

}  // namespace

DistanceSetReport distance_set(const PointConfiguration& x, double tol) {
    DistanceSetReport r;
    const auto reps = representatives(x);
    r.points = reps.size();
    r.duplicates = x.points.size() - reps.size();
    std::vector<double> values;
    values.reserve(reps.size() * (reps.size() - (reps.empty() ? 0 : 1)) / 2);
    double scale = 1.0;
    for (std::size_t a = 0; a < reps.size(); ++a)
        for (std::size_t b = a + 1; b < reps.size(); ++b) {
            values.push_back(scalar_square(x.points[reps[a]], x.points[reps[b]], x.p));
            scale = std::max(scale, std::abs(values.back()));
        }
    std::sort(values.begin(), values.end());
    const double eps = tol * scale;
    auto close = [&](std::size_t from, std::size_t to) {
        const double sum = std::accumulate(values.begin() + static_cast<long>(from), values.begin() + static_cast<long>(to), 0.0);
        r.values.push_back({sum / static_cast<double>(to - from), to - from});
    };
    std::size_t start = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        const double gap = values[i] - values[i - 1];
        if (gap <= eps) continue;
        if (gap <= 10.0 * eps)
            throw ClusteringError("ambiguous distance clustering: gap " + std::to_string(gap) + " is within 10x tolerance");
        close(start, i);
        start = i;
    }
    if (!values.empty()) close(start, values.size());
    r.s = r.values.size();
    for (const auto& v : r.values) r.contains_zero = r.contains_zero || std::abs(v.value) <= eps;
    return r;
}

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

std::uint64_t cardinality_bound(std::size_t p, std::size_t q, std::size_t s, bool spherical) {
    if (s == 0) throw std::invalid_argument("cardinality_bound: s must be positive");
    const std::uint64_t d = p + q;
    if (!spherical) return binom(d + s, s);
    if (p == 1 || q == 1) return binom(d + s - 1, s);
    return binom(d + s - 1, s) + binom(d + s - 2, s - 1);
}

std::uint64_t antipodal_bound(std::size_t d) { return 2 * binom(d + 1, 2); }

std::optional<SphereInfo> sphericity_check(const PointConfiguration& x, double tol) {
    const auto reps = representatives(x);
    const std::size_t k = x.dimension();
    if (reps.size() < k + 1) throw NonUniqueCenter("fewer than p+q+1 distinct points", k + 1 - reps.size());
    const std::size_t p = x.p;
    const std::vector<double> zero(k, 0.0);
    auto sq = [&](std::span<const double> v) { return scalar_square(v, zero, p); };
    const auto& x0 = x.points[reps[0]];
    const double n0 = sq(x0);

    // ||x_i||^2 - ||x_0||^2 = 2 <x_i - x_0, c>, with <u,v> = u^T eta v.
    std::vector<double> ata(k * k, 0.0), atb(k, 0.0);
    double scale = 1.0;
    for (std::size_t r = 1; r < reps.size(); ++r) {
        const auto& xi = x.points[reps[r]];
        std::vector<double> row(k);
        for (std::size_t c = 0; c < k; ++c) row[c] = 2.0 * (xi[c] - x0[c]) * (c < p ? 1.0 : -1.0);
        const double rhs = sq(xi) - n0;
        scale = std::max(scale, std::abs(sq(xi)));
        for (std::size_t a = 0; a < k; ++a) {
            atb[a] += row[a] * rhs;
            for (std::size_t b = 0; b < k; ++b) ata[a * k + b] += row[a] * row[b];
        }
    }
    // Gaussian elimination with partial pivoting on the normal equations.
    double diag_max = 0.0;
    for (std::size_t a = 0; a < k; ++a) diag_max = std::max(diag_max, std::abs(ata[a * k + a]));
    std::size_t rank = 0;
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < k; ++r)
            if (std::abs(ata[r * k + col]) > std::abs(ata[piv * k + col])) piv = r;
        if (std::abs(ata[piv * k + col]) <= 1e-10 * std::max(1.0, diag_max)) continue;
        ++rank;
        if (piv != col) {
            for (std::size_t c = 0; c < k; ++c) std::swap(ata[piv * k + c], ata[col * k + c]);
            std::swap(atb[piv], atb[col]);
        }
        for (std::size_t r = col + 1; r < k; ++r) {
            const double f = ata[r * k + col] / ata[col * k + col];
            for (std::size_t c = col; c < k; ++c) ata[r * k + c] -= f * ata[col * k + c];
            atb[r] -= f * atb[col];
        }
    }
    if (rank < k) throw NonUniqueCenter("center not unique: points span an affine subspace of defect " +
                                            std::to_string(k - rank), k - rank);
    std::vector<double> c(k, 0.0);
    for (std::size_t a = k; a-- > 0;) {
        double v = atb[a];
        for (std::size_t b = a + 1; b < k; ++b) v -= ata[a * k + b] * c[b];
        c[a] = v / ata[a * k + a];
    }
    SphereInfo info;
    info.center = c;
    info.radius_sq = scalar_square(x0, c, p);
    for (std::size_t r : reps)
        info.max_residual = std::max(info.max_residual, std::abs(scalar_square(x.points[r], c, p) - info.radius_sq));
    if (info.max_residual > tol * scale) return std::nullopt;
    // A null "sphere" (radius 0) is a light cone, not a sphere.
    if (std::abs(info.radius_sq) <= tol * scale) return std::nullopt;
    return info;
}

ExactSphere exact_sphericity(const ExactMatrix& d) {
    const std::size_t n = d.rows();
    ExactMatrix sys(n + 1, n + 1);
    RationalVector rhs(n + 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) sys(i, j) = d(i, j);
        sys(i, n) = -1;
        sys(n, i) = 1;
    }
    rhs[n] = 1;
    ExactSphere out;
    const auto sol = solve_linear(sys, rhs);
    if (!sol) return out;
    out.consistent = true;
    if (!sol->particular[n].is_zero()) {
        out.spherical = true;
        out.radius_sq = sol->particular[n] / Rational(2);
        return out;
    }
    for (const auto& h : sol->homogeneous)
        if (!h[n].is_zero()) {
            out.spherical = true;
            out.radius_sq = h[n] / Rational(2);
            return out;
        }
    return out;
}

AntipodalReport antipodal_check(const PointConfiguration& x, double tol) {
    const std::size_t n = x.points.size();
    const double eps = tol * coordinate_scale(x);
    AntipodalReport r;
    r.pairing.assign(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double e = 0.0;
            for (std::size_t c = 0; c < x.points[i].size(); ++c) {
                const double s = x.points[i][c] + x.points[j][c];
                e += s * s;
            }
            if (e <= eps && j != i) {
                r.pairing[i] = j;
                break;
            }
        }
        if (r.pairing[i] == n) return r;
    }
    r.antipodal = true;
    return r;
}

PointConfiguration doubled(const PointConfiguration& x, std::span<const double> center) {
    PointConfiguration y;
    y.p = x.p;
    y.q = x.q;
    y.tolerance = x.tolerance;
    const std::size_t n = x.points.size();
    for (int sign : {1, -1})
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> pt(x.dimension());
            for (std::size_t c = 0; c < pt.size(); ++c) pt[c] = sign * (x.points[i][c] - center[c]);
            y.points.push_back(std::move(pt));
            const std::string base = i < x.labels.size() ? x.labels[i] : std::to_string(i);
            y.labels.push_back(sign > 0 ? base : "-" + base);
        }
    mark_duplicates(y);
    return y;
}

DistanceSetReport verify(const PointConfiguration& x, double tol, bool spherical_bound) {
    DistanceSetReport r = distance_set(x, tol);
    try {
        r.sphere = sphericity_check(x, tol);
    } catch (const NonUniqueCenter&) {
        r.sphere.reset();
    }
    if (r.s > 0) {
        if (spherical_bound && r.sphere) r.bound = cardinality_bound(x.p, x.q, r.s, true);
        else if (!r.contains_zero) r.bound = cardinality_bound(x.p, x.q, r.s, false);
    }
    r.attains_bound = r.bound && *r.bound == r.points;
    r.antipodal = antipodal_check(x, tol).antipodal;
    return r;
}

}  // namespace switchdim
