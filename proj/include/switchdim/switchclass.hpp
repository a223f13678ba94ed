#pragma once

#include <optional>
#include <string>
#include <vector>

#include "switchdim/graph.hpp"
#include "switchdim/spectral.hpp"

namespace switchdim {

enum class Family { johnson, hamming };

std::string to_string(Family f);
Family parse_family(const std::string& name);
Graph build_graph(Family f, int m);

struct AdmissibleSet {
    VertexSet set;
    std::string provenance;  ///< structural rule name or "brute-force"
};

struct AdmissibleFamily {
    Subspace subspace = Subspace::e0e1;
    std::size_t graph_order = 0;
    std::vector<AdmissibleSet> sets;  ///< sorted by VertexSet order

    std::vector<VertexSet> vertex_sets() const;
};

/// Every non-empty U with |U| <= n/2 and u in the subspace. Gray-code scan;
/// requires n <= 24.
AdmissibleFamily brute_force_admissible(const Graph& g, const SrgIdempotents& idem, Subspace s);

/// Closed-form families for the supported (family, m, subspace) cases.
/// Throws std::invalid_argument for unsupported combinations.
AdmissibleFamily structural_admissible(Family f, int m, Subspace s);
bool structural_supported(Family f, int m, Subspace s);

/// Row cliques U_I (I a set of first coordinates) and column cliques V_I.
VertexSet hamming_rows(int m, const std::vector<int>& rows);
VertexSet hamming_cols(int m, const std::vector<int>& cols);
/// Delsarte clique {S : i in S} of J(m,2).
VertexSet johnson_clique(int m, int i);

/// Per-graph data reused across many switching sets.
struct SwitchContext {
    Graph graph;
    std::optional<SrgParams> params;
    std::optional<SrgIdempotents> idem;

    explicit SwitchContext(Graph g);
};

struct SwitchReport {
    VertexSet u;
    Rational a;
    Rational b;
    std::optional<SpectralReport> spectral;  ///< absent when no fast path applies
    Signature signature_of_big;
    Signature signature_of_f;
    std::size_t dimensionality = 0;
    /// False when the switched graph is complete or edgeless (one distance).
    bool realizable = true;
};

/// Signature of F_{D'}(j/n) by exact inertia of the directly built matrix and,
/// when available, by the spectral rule. Throws std::logic_error when the two
/// disagree.
SwitchReport switch_dimensionality(const SwitchContext& ctx, const VertexSet& u, const Dissimilarity& d);

struct Witness {
    Signature signature;
    VertexSet u;
    std::string description;  ///< sorted vertex labels
    Rational a;
    Rational b;
};

struct TableRow {
    Family family = Family::johnson;
    int m = 0;
    std::size_t n = 0;
    std::size_t min_dim = 0;
    std::vector<std::pair<std::size_t, std::size_t>> signatures;  ///< sorted descending by p
    std::vector<Witness> witnesses;                               ///< one per signature, same order
    std::size_t evaluations = 0;
};

/// Minimum p+q over the switching class with every achieved (p,q).
TableRow minimum_dimensionality(Family f, int m);

/// Distance ratios searched by the driver, normalized to a = 1 (or a = 0, b = 1).
struct CandidateRatio {
    Rational a;
    Rational b;
    std::string reason;
};
std::vector<CandidateRatio> candidate_ratios(const SrgParams& params);

struct HammingThreshold {
    int m = 0;
    Rational radicand;  ///< (m-4)/(m-2); t_m = (m/2)(1 - sqrt(radicand))
    Rational lower;     ///< t_m in (lower, upper), width < 1/4
    Rational upper;

    /// Sign of 2s(s-m)(m-2) + m^2: positive iff s < t_m (for 0 <= s <= m/2).
    static long numerator(int m, long s);
    bool below(long s) const { return numerator(m, s) > 0; }
};

/// Throws std::invalid_argument for m < 5 and std::logic_error if an integer
/// equals t_m.
HammingThreshold hamming_threshold(int m);

struct BranchCheck {
    long s = 0;
    bool below_threshold = false;  ///< s < t_m by the integer comparison
    Signature expected;            ///< (2m-2, 0) below t_m, (2m-3, 1) above
    Signature observed;            ///< U = union of the first s rows, a = 1, b = 2
    bool ok() const { return expected.positive == observed.positive && expected.negative == observed.negative; }
};

/// Evaluates every 1 <= s <= m/2 and compares with the t_m branch rule.
std::vector<BranchCheck> hamming_branch_check(int m);

struct GoldenRow {
    std::size_t d;
    std::vector<std::pair<std::size_t, std::size_t>> signatures;
};

/// Reference rows for J(m,2), m >= 4, and H(2,m), m >= 2.
GoldenRow golden_row(Family f, int m);
bool matches_golden(const TableRow& row);

}  // namespace switchdim
