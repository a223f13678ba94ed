#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "switchdim/matrix.hpp"

namespace switchdim {

/// Subset of the vertices 0..n-1 of a particular graph, stored as packed bits.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet from_members(std::size_t universe, std::span<const std::size_t> members);
    static VertexSet full(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }
    std::size_t count() const noexcept;
    bool empty() const noexcept { return count() == 0; }
    bool contains(std::size_t v) const { return (words_[v / 64] >> (v % 64)) & 1U; }
    void insert(std::size_t v);
    void erase(std::size_t v);

    VertexSet complement() const;
    std::vector<std::size_t> members() const;
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    /// Characteristic vector u as exact rationals.
    RationalVector indicator() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    /// Orders by size, then lexicographically by sorted members.
    friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

enum class LabelKind { none, subset2, pair };

/// Simple undirected graph on vertices 0..n-1.
///
/// Johnson graphs carry 2-subset labels {i,j} (i<j), Hamming graphs carry
/// coordinate labels (x,y). Both use 0-based symbols.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    std::size_t order() const noexcept { return rows_.size(); }
    bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].contains(v); }
    const VertexSet& neighbours(std::size_t u) const { return rows_[u]; }
    std::size_t degree(std::size_t u) const { return rows_[u].count(); }
    std::size_t edge_count() const;
    /// Sorted (i<j) edge list.
    std::vector<std::array<std::size_t, 2>> edges() const;

    void add_edge(std::size_t u, std::size_t v);
    void remove_edge(std::size_t u, std::size_t v);

    LabelKind label_kind() const noexcept { return label_kind_; }
    const std::vector<std::array<int, 2>>& labels() const noexcept { return labels_; }
    void set_labels(LabelKind kind, std::vector<std::array<int, 2>> labels);
    /// "{i,j}", "(x,y)" or the vertex index.
    std::string label(std::size_t v) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

private:
    std::vector<VertexSet> rows_;
    LabelKind label_kind_ = LabelKind::none;
    std::vector<std::array<int, 2>> labels_;
};

/// J(m,2): 2-subsets of {0..m-1}, adjacent when they share one point.
Graph johnson(int m);
/// H(2,m): pairs over {0..m-1}, adjacent when they differ in exactly one coordinate.
Graph hamming(int m);

Graph complement(const Graph& g);
/// Complements every pair across the cut {U, V\U}.
Graph seidel_switch(const Graph& g, const VertexSet& u);

ExactMatrix adjacency_matrix(const Graph& g);
/// A - Abar: 0 on the diagonal, +1 for edges, -1 for non-edges.
ExactMatrix seidel_matrix(const Graph& g);
/// Diagonal I_U with -1 on members of U and +1 elsewhere.
ExactMatrix switching_matrix(const VertexSet& u);

bool is_regular(const Graph& g);
bool is_connected(const Graph& g);
std::size_t common_neighbours(const Graph& g, std::size_t u, std::size_t v);

struct SrgSpectrum {
    /// k, lambda1, lambda2 with lambda1 > lambda2.
    std::array<long, 3> eigenvalues{};
    /// 1, m1, m2.
    std::array<long, 3> multiplicities{};
};

struct SrgParams {
    long n = 0;
    long k = 0;
    long lambda = 0;
    long mu = 0;
    /// Absent for conference graphs with irrational eigenvalues.
    std::optional<SrgSpectrum> spectrum;
};

/// Detects a connected strongly regular graph with at least one edge and one
/// non-edge; std::nullopt otherwise.
std::optional<SrgParams> srg_params(const Graph& g);

/// All cliques of size 1 - k/lambda2; empty when that bound is not an integer.
std::vector<VertexSet> delsarte_cliques(const Graph& g, const SrgParams& params);

bool is_clique(const Graph& g, const VertexSet& s);

struct EquitableQuotient {
    VertexSet part;  ///< U; the other part is V\U
    std::array<std::array<long, 2>, 2> b{};
};

/// Quotient matrix of {U, V\U} when the partition is equitable.
std::optional<EquitableQuotient> equitable_quotient(const Graph& g, const VertexSet& u);

}  // namespace switchdim
