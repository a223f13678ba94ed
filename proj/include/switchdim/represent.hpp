#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "switchdim/linalg.hpp"

namespace switchdim {

/// n points in R^{p,q}; the first p coordinates are the positive part.
struct PointConfiguration {
    std::size_t p = 0;
    std::size_t q = 0;
    std::vector<std::vector<double>> points;
    std::vector<std::string> labels;
    ExactMatrix source;  ///< target dissimilarity, may be empty for imported points
    double tolerance = 1e-8;
    /// duplicate_of[i] = smallest j <= i with the same point (j == i if first).
    std::vector<std::size_t> duplicate_of;
    double max_deviation = 0.0;

    std::size_t dimension() const noexcept { return p + q; }
    std::size_t distinct_points() const;
};

class RealizationError : public std::runtime_error {
public:
    RealizationError(const std::string& what, std::size_t i, std::size_t j, double deviation)
        : std::runtime_error(what), i_(i), j_(j), deviation_(deviation) {}
    std::size_t i() const noexcept { return i_; }
    std::size_t j() const noexcept { return j_; }
    double deviation() const noexcept { return deviation_; }

private:
    std::size_t i_, j_;
    double deviation_;
};

/// Scalar square of x - y in R^{p,q}.
double scalar_square(std::span<const double> x, std::span<const double> y, std::size_t p);

/// Coordinates from the Gram matrix F/2 of a centred dissimilarity F. Checks
/// the split against exact inertia and every pair against target within tol
/// (relative to max(1, max|target|)).
PointConfiguration realize(const ExactMatrix& f, const ExactMatrix& target, double tol = 1e-8);

/// Marks coincident points (Euclidean coordinate distance <= tol * scale).
void mark_duplicates(PointConfiguration& x);

class ClusteringError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DistanceValue {
    double value = 0.0;
    std::size_t multiplicity = 0;
};

struct SphereInfo {
    std::vector<double> center;
    double radius_sq = 0.0;
    double max_residual = 0.0;
};

struct DistanceSetReport {
    std::vector<DistanceValue> values;  ///< A(X) over distinct points, ascending
    std::size_t s = 0;
    bool contains_zero = false;
    std::size_t points = 0;           ///< distinct points
    std::size_t duplicates = 0;       ///< vertices collapsed onto earlier points
    std::optional<std::uint64_t> bound;
    bool attains_bound = false;
    std::optional<SphereInfo> sphere;
    bool antipodal = false;
};

/// Clusters pairwise scalar squares of the distinct points. Throws
/// ClusteringError when a gap falls in (tol, 10 tol] relative to the scale.
DistanceSetReport distance_set(const PointConfiguration& x, double tol = 1e-8);

/// C(p+q+s, s); spherical: C(p+q+s-1, s) if p = 1 or q = 1, else
/// C(p+q+s-1, s) + C(p+q+s-2, s-1).
std::uint64_t cardinality_bound(std::size_t p, std::size_t q, std::size_t s, bool spherical);

/// Absolute bound 2 C(d+1, 2) for antipodal spherical 3-distance sets in R^d.
std::uint64_t antipodal_bound(std::size_t d);

class NonUniqueCenter : public std::runtime_error {
public:
    NonUniqueCenter(const std::string& what, std::size_t defect) : std::runtime_error(what), defect_(defect) {}
    std::size_t affine_defect() const noexcept { return defect_; }

private:
    std::size_t defect_;
};

/// Centre c with ||x_i - c|| = r for all distinct points, r != 0. Returns
/// std::nullopt when no such sphere exists within tol. Throws NonUniqueCenter
/// when the points do not affinely span R^{p,q}.
std::optional<SphereInfo> sphericity_check(const PointConfiguration& x, double tol = 1e-8);

struct ExactSphere {
    bool spherical = false;
    bool consistent = false;   ///< D l = rho j, j^T l = 1 has a solution
    Rational radius_sq;        ///< rho / 2 when spherical
};

/// Sphericity decided from the dissimilarity alone: a sphere of squared
/// radius rho/2 exists iff D l = rho j, j^T l = 1 is solvable with rho != 0.
ExactSphere exact_sphericity(const ExactMatrix& d);

struct AntipodalReport {
    bool antipodal = false;
    std::vector<std::size_t> pairing;  ///< pairing[i] = index of -x_i
};

/// Each point's negation must be another point of the set.
AntipodalReport antipodal_check(const PointConfiguration& x, double tol = 1e-8);

/// Translate by -center and append the negated copies.
PointConfiguration doubled(const PointConfiguration& x, std::span<const double> center);

/// distance_set plus bound, sphericity and antipodality.
DistanceSetReport verify(const PointConfiguration& x, double tol = 1e-8, bool spherical_bound = false);

}  // namespace switchdim
