#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hdx {

using Edge = std::array<int, 2>;
using Triangle = std::array<int, 3>;

/// A 2-dimensional simplicial complex on the dense vertex ids 0..n-1.
///
/// Edges and triangles are stored with sorted vertex ids and in lexicographic
/// order, so face indices are canonical: two complexes with the same face sets
/// have identical indexing. Instances are immutable once built.
///
/// The normal way to obtain one is build_from_triangles(), which enforces the
/// closure rule. from_faces_unchecked() stores whatever it is given and exists
/// so that validate() has something to find.
class Complex2 {
public:
    Complex2() = default;

    static Complex2 from_faces_unchecked(int vertex_count, std::vector<Edge> edges,
                                         std::vector<Triangle> triangles,
                                         std::vector<std::string> labels = {});

    int vertex_count() const noexcept { return vertex_count_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    int triangle_count() const noexcept { return static_cast<int>(triangles_.size()); }
    // |X(dim)| for dim in {0, 1, 2}.
    int face_count(int dim) const;

    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Triangle> triangles() const noexcept { return triangles_; }
    const Edge& edge(int index) const { return edges_.at(static_cast<std::size_t>(index)); }
    const Triangle& triangle(int index) const {
        return triangles_.at(static_cast<std::size_t>(index));
    }

    // Incident edge indices of a vertex, ascending.
    std::span<const int> edges_at(int vertex) const {
        return vertex_edges_.at(static_cast<std::size_t>(vertex));
    }
    // Triangles containing an edge, ascending.
    std::span<const int> triangles_at(int edge) const {
        return edge_triangles_.at(static_cast<std::size_t>(edge));
    }
    // Edge indices of {a,b}, {a,c}, {b,c} for triangle {a,b,c}; -1 where the
    // edge is missing (only possible for unchecked complexes).
    const std::array<int, 3>& triangle_edges(int triangle) const {
        return triangle_edges_.at(static_cast<std::size_t>(triangle));
    }

    std::optional<int> find_edge(int u, int v) const;
    std::optional<int> find_triangle(int a, int b, int c) const;

    // Optional display labels, one per vertex, or empty.
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    // Incidence maps recomputed from the face lists alone.
    struct Incidence {
        std::vector<std::vector<int>> vertex_edges;
        std::vector<std::vector<int>> edge_triangles;
        std::vector<std::array<int, 3>> triangle_edges;
        friend bool operator==(const Incidence&, const Incidence&) = default;
    };
    Incidence rebuild_incidence() const;
    Incidence stored_incidence() const {
        return {vertex_edges_, edge_triangles_, triangle_edges_};
    }

    // Face-for-face equality, labels included.
    friend bool operator==(const Complex2& a, const Complex2& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_ &&
               a.triangles_ == b.triangles_ && a.labels_ == b.labels_;
    }

private:
    void index();

    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<Triangle> triangles_;
    std::vector<std::string> labels_;

    std::vector<std::vector<int>> vertex_edges_;
    std::vector<std::vector<int>> edge_triangles_;
    std::vector<std::array<int, 3>> triangle_edges_;
    std::unordered_map<std::uint64_t, int> edge_lookup_;
    std::unordered_map<std::uint64_t, int> triangle_lookup_;
};

/// Per-face degree counts. `regular` holds (k0, k1) iff the complex has at
/// least one vertex and one edge and both count vectors are constant.
struct DegreeProfile {
    std::vector<int> vertex_edge_degrees;
    std::vector<int> edge_triangle_degrees;
    std::optional<std::pair<int, int>> regular;

    // k1 when every edge lies in the same number of triangles.
    std::optional<int> edge_regular() const;
    // k0 when every vertex lies in the same number of edges.
    std::optional<int> vertex_regular() const;
};

struct ValidationReport {
    std::vector<std::string> findings;
    bool valid() const noexcept { return findings.empty(); }
};

/// Builds the closure of the given triangles plus any extra edges. Vertex
/// count is the largest id seen plus one (at least min_vertices); unused ids
/// become isolated vertices.
///
/// Throws InvalidFaceError on a negative id or repeated vertex and
/// DuplicateFaceError when a triangle (or an extra edge) is listed twice.
/// Extra edges that coincide with triangle edges are fine.
Complex2 build_from_triangles(std::span<const Triangle> triangles,
                              std::span<const Edge> extra_edges = {}, int min_vertices = 0,
                              std::vector<std::string> labels = {});

// Complete 2-skeleton of the (n-1)-simplex.
Complex2 complete_complex(int n);

// Complete graph on n vertices with each triangle kept independently with
// probability p, triangles visited in lexicographic order.
Complex2 random_complex(int n, double p, std::uint64_t seed);

DegreeProfile degree_profile(const Complex2& complex);

ValidationReport validate(const Complex2& complex);

}  // namespace hdx
