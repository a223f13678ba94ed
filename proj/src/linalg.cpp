#include "switchdim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "switchdim/kernels.hpp"

namespace switchdim {

std::ostream& operator<<(std::ostream& os, const Signature& s) {
    return os << '(' << s.positive << ',' << s.negative << ',' << s.zero << ')';
}

std::string to_string(const Signature& s) {
    std::ostringstream os;
    os << s;
    return os.str();
}

Signature inertia(const ExactMatrix& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("inertia: matrix is not symmetric");
    const std::size_t n = m.rows();
    ExactMatrix a = m;
    std::vector<std::size_t> active(n);
    std::iota(active.begin(), active.end(), std::size_t{0});
    Signature sig;

    auto erase_active = [&](std::size_t index) {
        active.erase(std::find(active.begin(), active.end(), index));
    };

    while (!active.empty()) {
        // 1x1 pivot: the smallest nonzero diagonal entry by bit size.
        std::optional<std::size_t> pivot;
        for (std::size_t i : active) {
            if (a(i, i).is_zero()) continue;
            if (!pivot || a(i, i).bit_size() < a(*pivot, *pivot).bit_size()) pivot = i;
        }
        if (pivot) {
            const std::size_t p = *pivot;
            const Rational d = a(p, p);
            (d.sign() > 0 ? sig.positive : sig.negative) += 1;
            erase_active(p);
            for (std::size_t ri = 0; ri < active.size(); ++ri) {
                const std::size_t r = active[ri];
                if (a(r, p).is_zero()) continue;
                const Rational f = a(r, p) / d;
                for (std::size_t si = ri; si < active.size(); ++si) {
                    const std::size_t s = active[si];
                    sub_mul(a(r, s), f, a(p, s));
                    if (s != r) a(s, r) = a(r, s);
                }
            }
            continue;
        }

        // 2x2 hyperbolic pivot [[0,c],[c,0]]: one positive and one negative eigenvalue.
        std::optional<std::pair<std::size_t, std::size_t>> block;
        for (std::size_t ii = 0; ii < active.size() && !block; ++ii)
            for (std::size_t jj = ii + 1; jj < active.size(); ++jj)
                if (!a(active[ii], active[jj]).is_zero()) {
                    block = std::pair{active[ii], active[jj]};
                    break;
                }
        if (!block) {
            sig.zero += active.size();
            break;
        }
        const auto [i, j] = *block;
        const Rational c = a(i, j);
        sig.positive += 1;
        sig.negative += 1;
        erase_active(i);
        erase_active(j);
        for (std::size_t ri = 0; ri < active.size(); ++ri) {
            const std::size_t r = active[ri];
            if (a(r, i).is_zero() && a(r, j).is_zero()) continue;
            const Rational fx = a(r, i) / c;
            const Rational fy = a(r, j) / c;
            for (std::size_t si = ri; si < active.size(); ++si) {
                const std::size_t s = active[si];
                sub_mul(a(r, s), fx, a(j, s));
                sub_mul(a(r, s), fy, a(i, s));
                if (s != r) a(s, r) = a(r, s);
            }
        }
    }
    return sig;
}

ExactMatrix gower_center(const ExactMatrix& m, std::span<const Rational> ell) {
    if (!m.is_square()) throw std::invalid_argument("gower_center: matrix not square");
    const std::size_t n = m.rows();
    if (ell.size() != n) throw std::invalid_argument("gower_center: weight vector has wrong length");
    Rational total;
    for (const auto& x : ell) total += x;
    if (total != Rational(1)) throw std::invalid_argument("gower_center: weights must sum to 1, got " + total.to_string());

    const RationalVector row_side = m * ell;                // M l
    const RationalVector col_side = m.transpose() * ell;    // M^T l
    Rational quad;
    for (std::size_t i = 0; i < n; ++i) add_mul(quad, ell[i], row_side[i]);

    ExactMatrix f(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) f(i, j) = row_side[i] + col_side[j] - m(i, j) - quad;
    return f;
}

RationalVector centroid_weights(std::size_t n) {
    if (n == 0) throw std::invalid_argument("centroid_weights: empty configuration");
    return RationalVector(n, Rational(1, static_cast<long>(n)));
}

namespace {

// In-place reduced row echelon form; returns pivot column per pivot row.
std::vector<std::size_t> rref(ExactMatrix& a, std::size_t column_limit) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < column_limit && row < a.rows(); ++col) {
        std::optional<std::size_t> best;
        for (std::size_t r = row; r < a.rows(); ++r) {
            if (a(r, col).is_zero()) continue;
            if (!best || a(r, col).bit_size() < a(*best, col).bit_size()) best = r;
        }
        if (!best) continue;
        if (*best != row)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(row, c), a(*best, c));
        const Rational inv = Rational(1) / a(row, col);
        for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            const Rational f = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) sub_mul(a(r, c), f, a(row, c));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<RationalVector> null_space_from_rref(const ExactMatrix& r, const std::vector<std::size_t>& pivots,
                                                 std::size_t unknowns) {
    std::vector<bool> is_pivot(unknowns, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < unknowns; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(unknowns);
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::vector<RationalVector> kernel_basis(const ExactMatrix& m) {
    ExactMatrix r = m;
    const auto pivots = rref(r, r.cols());
    return null_space_from_rref(r, pivots, m.cols());
}

std::size_t rank(const ExactMatrix& m) {
    ExactMatrix r = m;
    return rref(r, r.cols()).size();
}

std::optional<LinearSolution> solve_linear(const ExactMatrix& a, std::span<const Rational> b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: right-hand side has wrong length");
    ExactMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const auto pivots = rref(aug, a.cols());
    for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
        if (!aug(r, a.cols()).is_zero()) return std::nullopt;
    LinearSolution sol;
    sol.particular.assign(a.cols(), Rational{});
    for (std::size_t k = 0; k < pivots.size(); ++k) sol.particular[pivots[k]] = aug(k, a.cols());
    sol.homogeneous = null_space_from_rref(aug, pivots, a.cols());
    return sol;
}

FloatEigenDecomposition jacobi_eigen(const RealMatrix& m, double tol, int max_sweeps) {
    if (m.rows() != m.cols()) throw std::invalid_argument("jacobi_eigen: matrix not square");
    const std::size_t n = m.rows();
    const double scale = std::max(1.0, m.inf_norm());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::fabs(m(i, j) - m(j, i)) > tol * scale)
                throw std::invalid_argument("jacobi_eigen: matrix not symmetric within tolerance");

    RealMatrix a = m;
    RealMatrix vt(n, n);  // rows are eigenvectors
    for (std::size_t i = 0; i < n; ++i) vt(i, i) = 1.0;

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
        return std::sqrt(s);
    };
    const double stop = 1e-14 * scale;

    FloatEigenDecomposition out;
    int sweep = 0;
    double previous = std::numeric_limits<double>::infinity();
    bool stalled = false;
    for (; sweep < max_sweeps; ++sweep) {
        const double off = off_norm();
        if (off <= stop) break;
        // Rounding floor: further sweeps no longer reduce the off-diagonal mass.
        if (off >= previous && off <= 1e-10 * scale) {
            stalled = true;
            break;
        }
        previous = off;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::fabs(apq) <= 1e-300) continue;
                const double app = a(p, p);
                const double aqq = a(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                kernels::rotate_pair(a.row(p), a.row(q), c, s);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    a(k, p) = a(p, k);
                    a(k, q) = a(q, k);
                }
                kernels::rotate_pair(vt.row(p), vt.row(q), c, s);
            }
        }
    }
    if (!stalled && off_norm() > stop) {
        const double off = off_norm();
        throw ConvergenceError("jacobi_eigen: no convergence after " + std::to_string(max_sweeps) +
                                   " sweeps, off-diagonal norm " + std::to_string(off),
                               off);
    }
    out.sweeps = sweep;

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });
    for (std::size_t idx : order) {
        out.eigenvalues.push_back(a(idx, idx));
        out.eigenvectors.emplace_back(vt.row(idx).begin(), vt.row(idx).end());
    }

    double residual = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const auto& v = out.eigenvectors[k];
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) acc += m(i, j) * v[j];
            residual = std::max(residual, std::fabs(acc - out.eigenvalues[k] * v[i]));
        }
    }
    out.residual = residual;
    if (residual > tol * scale) {
        throw ConvergenceError("jacobi_eigen: residual " + std::to_string(residual) + " exceeds tolerance",
                               off_norm());
    }
    return out;
}

double zero_threshold(const RealMatrix& m) { return 1e-8 * std::max(1.0, m.inf_norm()); }

Signature float_signature(std::span<const double> eigenvalues, double threshold) {
    Signature s;
    for (double x : eigenvalues) {
        if (x > threshold) ++s.positive;
        else if (x < -threshold) ++s.negative;
        else ++s.zero;
    }
    return s;
}

Signature float_signature(const RealMatrix& m) {
    const auto eig = jacobi_eigen(m);
    return float_signature(eig.eigenvalues, zero_threshold(m));
}

void write_csv(std::ostream& os, const ExactMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            os << m(i, j).to_string();
        }
        os << '\n';
    }
}

ExactMatrix read_csv(std::istream& is) {
    std::vector<RationalVector> rows;
    std::string line;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        RationalVector row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(Rational::parse(cell));
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::invalid_argument("read_csv: ragged row " + std::to_string(rows.size() + 1));
        rows.push_back(std::move(row));
    }
    ExactMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

}  // namespace switchdim
