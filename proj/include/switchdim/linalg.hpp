#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "switchdim/matrix.hpp"
#include "switchdim/rational.hpp"

namespace switchdim {

/// Counts of positive, negative and zero eigenvalues of a symmetric matrix.
struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;

    std::size_t order() const noexcept { return positive + negative + zero; }
    std::size_t rank() const noexcept { return positive + negative; }
    Signature swapped() const noexcept { return {negative, positive, zero}; }

    friend auto operator<=>(const Signature&, const Signature&) = default;
};

std::ostream& operator<<(std::ostream& os, const Signature& s);
std::string to_string(const Signature& s);

/// Exact Sylvester inertia by symmetric congruence elimination. Uses 1x1
/// diagonal pivots, falling back to a 2x2 hyperbolic pivot when the remaining
/// diagonal is zero. Throws std::invalid_argument for non-symmetric input.
Signature inertia(const ExactMatrix& m);

/// F_M(l) = -(I - j l^T) M (I - l j^T). Requires l^T j = 1 exactly.
ExactMatrix gower_center(const ExactMatrix& m, std::span<const Rational> ell);

/// Centroid weights j/n.
RationalVector centroid_weights(std::size_t n);

/// Exact null-space basis from reduced row echelon form; empty when M has
/// full column rank.
std::vector<RationalVector> kernel_basis(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

/// Solution set of A x = b: one particular solution plus a null-space basis.
struct LinearSolution {
    RationalVector particular;
    std::vector<RationalVector> homogeneous;
};

/// Exact solve; std::nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_linear(const ExactMatrix& a, std::span<const Rational> b);

// Floating-point oracle ---------------------------------------------------

struct FloatEigenDecomposition {
    std::vector<double> eigenvalues;                ///< descending
    std::vector<std::vector<double>> eigenvectors;  ///< eigenvectors[i] pairs with eigenvalues[i]
    double residual = 0.0;                          ///< max_i ||M v_i - lambda_i v_i||_inf
    int sweeps = 0;
};

class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double off_diagonal_norm)
        : std::runtime_error(what), off_diagonal_norm_(off_diagonal_norm) {}
    double off_diagonal_norm() const noexcept { return off_diagonal_norm_; }

private:
    double off_diagonal_norm_;
};

/// Cyclic Jacobi eigensolver for a real symmetric matrix. Throws
/// std::invalid_argument when M is not symmetric within tol and
/// ConvergenceError when the sweep cap is reached.
FloatEigenDecomposition jacobi_eigen(const RealMatrix& m, double tol = 1e-10, int max_sweeps = 100);

/// Threshold below which an eigenvalue of M counts as zero:
/// 1e-8 * max(1, ||M||_inf).
double zero_threshold(const RealMatrix& m);

Signature float_signature(std::span<const double> eigenvalues, double threshold);
Signature float_signature(const RealMatrix& m);

// Matrix CSV: one row per line, entries "n" or "n/d", comma separated.

void write_csv(std::ostream& os, const ExactMatrix& m);
ExactMatrix read_csv(std::istream& is);

}  // namespace switchdim
