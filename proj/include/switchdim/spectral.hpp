#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "switchdim/graph.hpp"
#include "switchdim/linalg.hpp"

namespace switchdim {

/// D(a,b) = aA + bAbar on a fixed graph. Construction rejects a == b.
class Dissimilarity {
public:
    Dissimilarity(Rational a, Rational b);
    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }

private:
    Rational a_;
    Rational b_;
};

ExactMatrix dissimilarity_matrix(const Graph& g, const Dissimilarity& d);
/// S_D = D - Dbar = (a-b)(2A - J + I).
ExactMatrix s_matrix(const Graph& g, const Dissimilarity& d);
/// 2D - (a+b)J, the matrix whose spectrum drives the signature rule.
ExactMatrix shifted_matrix(const Graph& g, const Dissimilarity& d);

struct SrgIdempotents {
    std::array<ExactMatrix, 3> e;
    std::array<long, 3> eigenvalues{};
    std::array<long, 3> multiplicities{};
};

/// Primitive idempotents of the Bose-Mesner algebra. Throws
/// std::invalid_argument for conference graphs (irrational spectrum).
SrgIdempotents srg_idempotents(const Graph& g, const SrgParams& params);

struct EigenvalueEntry {
    Rational value;
    std::size_t multiplicity = 0;
};

/// Eigenvalues of 2D' - (a+b)J for any switching set, indexed like the
/// graph spectrum: mu0 (from k), mu1 (from lambda1), mu2 (from lambda2).
std::array<EigenvalueEntry, 3> switched_eigenvalues(const SrgParams& params, const Dissimilarity& d);
/// mu for a single adjacency eigenvalue theta (theta = k gives mu0).
Rational switched_eigenvalue(long n, long k, long theta, bool principal, const Dissimilarity& d);

enum class Subspace { e0e1, e0e2 };
std::string to_string(Subspace s);

/// u in E0 + E1 (resp. E0 + E2), decided by E2 u = 0 (resp. E1 u = 0).
bool membership(const SrgIdempotents& idem, const VertexSet& u, Subspace s);

/// Fast path unavailable: u is neither in an idempotent pair subspace nor an
/// equitable part.
class NoFastPath : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SpectralEntry {
    Rational mu;
    std::size_t multiplicity = 0;  ///< 0 when the full spectrum is unknown
    bool main = false;
    Rational angle_sq;  ///< beta^2
};

struct SpectralReport {
    std::string path;  ///< "srg:E0+E1", "srg:E0+E2", "srg:trivial" or "equitable"
    std::vector<SpectralEntry> entries;
    bool complete_spectrum = false;
    std::optional<Signature> signature_of_big;
    std::optional<Signature> signature_of_f;
};

/// Main eigenvalues and exact main angles of 2D' - (a+b)J for the switching
/// set U. Uses idempotent membership when the graph is strongly regular and
/// an equitable quotient otherwise. Throws NoFastPath.
SpectralReport main_eigenvalue_analysis(const Graph& g, const Dissimilarity& d, const VertexSet& u,
                                        const SrgIdempotents* idem = nullptr);

/// Signature of F_{M}(l) from the spectrum of M = 2D' - (a+b)J and its
/// signature (p,q). When zero_in_jperp is given it must agree with the
/// report; a main zero eigenvalue claimed to lie in j-perp is rejected.
Signature signature_from_spectrum(const SpectralReport& report, const Signature& big,
                                  std::optional<bool> zero_in_jperp = std::nullopt);

struct SrgDimensionality {
    std::array<Rational, 3> coefficients;  ///< F_D(j/n) = c1 E1 + c2 E2, c0 = 0
    Signature signature;
    std::size_t dimensionality = 0;
};

/// Dimensionality of D itself (no switching) from the idempotent expansion.
SrgDimensionality srg_dimensionality(const Graph& g, const Dissimilarity& d, const SrgIdempotents& idem);

/// Coefficient a_i = a*lambda_i - b*(1 + lambda_i) of D on E_i (i = 1, 2).
Rational idempotent_coefficient(long lambda, const Dissimilarity& d);

struct MainPolynomial {
    /// coefficients[i] multiplies x^i; leading coefficient (-1)^r.
    std::vector<Rational> coefficients;
    std::size_t positive_roots = 0;
    std::size_t negative_roots = 0;
    std::size_t zero_roots = 0;
    /// Signature of D' (equivalently of 2D').
    Signature signature_of_d;
};

/// Polynomial whose roots are the main eigenvalues of
/// 2D' = (2D' - (a+b)J) + shift*J, and the resulting signature of D'.
/// Requires a report with the complete spectrum.
MainPolynomial main_eigenvalues_of_shift(const SpectralReport& report, const Rational& shift, std::size_t n);

}  // namespace switchdim
