#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hdx/complex.hpp"
#include "hdx/rational.hpp"

namespace hdx {

/// Finite simple undirected graph. Neighbor lists are sorted ascending; the
/// walk engines rely on that order.
class Graph {
public:
    Graph() = default;
    // Throws DomainError on self-loops, parallel edges or out-of-range ids.
    Graph(int vertex_count, std::span<const Edge> edges);

    int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const int> neighbors(int v) const {
        return adjacency_.at(static_cast<std::size_t>(v));
    }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(int u, int v) const;
    // Common degree when the graph is regular (and non-empty).
    std::optional<int> regular_degree() const noexcept { return regular_k_; }
    bool is_connected() const;

    // Row-major 0/1 adjacency matrix.
    std::vector<double> adjacency_matrix() const;

private:
    std::vector<std::vector<int>> adjacency_;
    std::vector<Edge> edges_;
    std::optional<int> regular_k_;
};

/// Graph family helpers used throughout the tests and the CLI.
Graph cycle_graph(int n);
Graph complete_graph(int n);

struct SpectralReport {
    int degree = 0;
    std::vector<double> normalized_eigenvalues;  // descending, each lambda_i / k
    double lambda2 = 0.0;
    double lambda_n = 0.0;
    double lambda_max_nontrivial = 0.0;  // max(|lambda2|, |lambda_n|)
    double tolerance = 0.0;  // achieved bound on the eigenvalue error
    double spectral_gap() const noexcept { return 1.0 - lambda2; }
};

/// Edge-graph G1(X): vertex i of the graph is edge to_edge[i] of X.
struct EdgeGraphMap {
    Graph graph;
    std::vector<int> to_edge;
    std::vector<int> from_edge;
};

// G0(X): the 1-skeleton.
Graph underlying_graph(const Complex2& complex);
// G1(X): edges of X, adjacent iff their union is a triangle of X.
EdgeGraphMap edge_graph(const Complex2& complex);

inline constexpr double kEigenTolerance = 1e-9;
inline constexpr double kAuditSlack = 1e-9;

// Throws RegularityError for non-regular graphs and for degree 0.
SpectralReport normalized_spectrum(const Graph& graph, double tolerance = kEigenTolerance);

inline constexpr int kCheegerMaxVertices = 26;
inline constexpr int kMixingMaxVertices = 22;

struct CheegerResult {
    Rational h_normalized;  // min |E(S, S^c)| / (k |S|) over 0 < |S| <= n/2
    std::vector<int> witness;  // lexicographically smallest minimizer
};

// Exhaustive over subsets containing vertex 0 and their complements.
CheegerResult cheeger_exhaustive(const Graph& graph, int max_vertices = kCheegerMaxVertices);

struct MixingAudit {
    double lambda2 = 0.0;
    double max_residual = 0.0;  // max over S of 2|E(S)| - k|S|(|S|/n + lambda2)
    std::vector<int> witness;
    bool passes = false;  // max_residual <= threshold
};

inline constexpr double kMixingThreshold = 1e-6;

MixingAudit mixing_lemma_audit(const Graph& graph, int max_vertices = kMixingMaxVertices,
                               double threshold = kMixingThreshold);

struct CheegerInequalityAudit {
    Rational h_normalized;
    double lambda2 = 0.0;
    double slack = 0.0;  // (1 - h^2/2) - lambda2
    bool passes = false;
};

CheegerInequalityAudit cheeger_inequality_audit(const Graph& graph,
                                                double slack_tolerance = kAuditSlack);

struct EdgeGraphFloorAudit {
    double lambda_n = 0.0;  // smallest normalized eigenvalue of G1(X)
    double slack = 0.0;  // lambda_n + 17/18
    bool passes = false;
};

// Needs every edge of X in the same (positive) number of triangles.
EdgeGraphFloorAudit edge_graph_floor_audit(const Complex2& complex,
                                           double slack_tolerance = kAuditSlack);

}  // namespace hdx
