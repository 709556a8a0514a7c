#include "hdx/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hdx/error.hpp"
#include "hdx/rng.hpp"

namespace hdx {

namespace {

std::uint64_t edge_key(int u, int v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
}

std::uint64_t triangle_key(int a, int b, int c) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 42) |
           (static_cast<std::uint64_t>(static_cast<std::uint32_t>(b)) << 21) |
           static_cast<std::uint32_t>(c);
}

std::string face_string(std::span<const int> face) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < face.size(); ++i) {
        os << (i ? "," : "") << face[i];
    }
    os << '}';
    return os.str();
}

Triangle canonical_triangle(const Triangle& raw) {
    Triangle t = raw;
    std::sort(t.begin(), t.end());
    if (t[0] < 0) {
        throw InvalidFaceError("negative vertex id in triangle " + face_string(raw));
    }
    if (t[0] == t[1] || t[1] == t[2]) {
        throw InvalidFaceError("degenerate triangle " + face_string(raw));
    }
    return t;
}

Edge canonical_edge(const Edge& raw) {
    Edge e = raw;
    if (e[0] > e[1]) {
        std::swap(e[0], e[1]);
    }
    if (e[0] < 0) {
        throw InvalidFaceError("negative vertex id in edge " + face_string(raw));
    }
    if (e[0] == e[1]) {
        throw InvalidFaceError("degenerate edge " + face_string(raw));
    }
    return e;
}

}  // namespace

Complex2 Complex2::from_faces_unchecked(int vertex_count, std::vector<Edge> edges,
                                        std::vector<Triangle> triangles,
                                        std::vector<std::string> labels) {
    Complex2 x;
    x.vertex_count_ = vertex_count;
    x.edges_ = std::move(edges);
    x.triangles_ = std::move(triangles);
    x.labels_ = std::move(labels);
    x.index();
    return x;
}

int Complex2::face_count(int dim) const {
    switch (dim) {
        case 0: return vertex_count();
        case 1: return edge_count();
        case 2: return triangle_count();
        default: throw DomainError("face dimension must be 0, 1 or 2, got " + std::to_string(dim));
    }
}

std::optional<int> Complex2::find_edge(int u, int v) const {
    if (u > v) {
        std::swap(u, v);
    }
    if (auto it = edge_lookup_.find(edge_key(u, v)); it != edge_lookup_.end()) {
        return it->second;
    }
    return std::nullopt;
}

std::optional<int> Complex2::find_triangle(int a, int b, int c) const {
    Triangle t{a, b, c};
    std::sort(t.begin(), t.end());
    if (auto it = triangle_lookup_.find(triangle_key(t[0], t[1], t[2]));
        it != triangle_lookup_.end()) {
        return it->second;
    }
    return std::nullopt;
}

Complex2::Incidence Complex2::rebuild_incidence() const {
    Incidence inc;
    inc.vertex_edges.assign(static_cast<std::size_t>(std::max(vertex_count_, 0)), {});
    inc.edge_triangles.assign(edges_.size(), {});
    inc.triangle_edges.assign(triangles_.size(), {-1, -1, -1});

    std::unordered_map<std::uint64_t, int> lookup;
    for (int e = 0; e < edge_count(); ++e) {
        const auto [u, v] = edges_[static_cast<std::size_t>(e)];
        lookup.emplace(edge_key(std::min(u, v), std::max(u, v)), e);
        for (int w : {u, v}) {
            if (w >= 0 && w < vertex_count_) {
                inc.vertex_edges[static_cast<std::size_t>(w)].push_back(e);
            }
        }
    }
    for (int t = 0; t < triangle_count(); ++t) {
        const auto [a, b, c] = triangles_[static_cast<std::size_t>(t)];
        const std::array<Edge, 3> sides{{{a, b}, {a, c}, {b, c}}};
        for (int s = 0; s < 3; ++s) {
            const auto [p, q] = sides[static_cast<std::size_t>(s)];
            if (auto it = lookup.find(edge_key(std::min(p, q), std::max(p, q)));
                it != lookup.end()) {
                inc.triangle_edges[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] =
                    it->second;
                inc.edge_triangles[static_cast<std::size_t>(it->second)].push_back(t);
            }
        }
    }
    return inc;
}

void Complex2::index() {
    Incidence inc = rebuild_incidence();
    vertex_edges_ = std::move(inc.vertex_edges);
    edge_triangles_ = std::move(inc.edge_triangles);
    triangle_edges_ = std::move(inc.triangle_edges);

    edge_lookup_.clear();
    triangle_lookup_.clear();
    for (int e = 0; e < edge_count(); ++e) {
        const auto [u, v] = edges_[static_cast<std::size_t>(e)];
        edge_lookup_.emplace(edge_key(std::min(u, v), std::max(u, v)), e);
    }
    for (int t = 0; t < triangle_count(); ++t) {
        Triangle s = triangles_[static_cast<std::size_t>(t)];
        std::sort(s.begin(), s.end());
        triangle_lookup_.emplace(triangle_key(s[0], s[1], s[2]), t);
    }
}

std::optional<int> DegreeProfile::edge_regular() const {
    if (edge_triangle_degrees.empty()) {
        return std::nullopt;
    }
    const int k = edge_triangle_degrees.front();
    if (std::all_of(edge_triangle_degrees.begin(), edge_triangle_degrees.end(),
                    [k](int d) { return d == k; })) {
        return k;
    }
    return std::nullopt;
}

std::optional<int> DegreeProfile::vertex_regular() const {
    if (vertex_edge_degrees.empty()) {
        return std::nullopt;
    }
    const int k = vertex_edge_degrees.front();
    if (std::all_of(vertex_edge_degrees.begin(), vertex_edge_degrees.end(),
                    [k](int d) { return d == k; })) {
        return k;
    }
    return std::nullopt;
}

Complex2 build_from_triangles(std::span<const Triangle> triangles,
                              std::span<const Edge> extra_edges, int min_vertices,
                              std::vector<std::string> labels) {
    std::set<Triangle> triangle_set;
    std::set<Edge> edge_set;
    int max_id = -1;

    for (const Triangle& raw : triangles) {
        const Triangle t = canonical_triangle(raw);
        if (!triangle_set.insert(t).second) {
            throw DuplicateFaceError("duplicate triangle " + face_string(t));
        }
        edge_set.insert({t[0], t[1]});
        edge_set.insert({t[0], t[2]});
        edge_set.insert({t[1], t[2]});
        max_id = std::max(max_id, t[2]);
    }

    std::set<Edge> listed;
    for (const Edge& raw : extra_edges) {
        const Edge e = canonical_edge(raw);
        if (!listed.insert(e).second) {
            throw DuplicateFaceError("duplicate edge " + face_string(e));
        }
        edge_set.insert(e);
        max_id = std::max(max_id, e[1]);
    }

    const int n = std::max(max_id + 1, std::max(min_vertices, 0));
    if (!labels.empty() && static_cast<int>(labels.size()) != n) {
        throw DomainError("label count " + std::to_string(labels.size()) +
                          " does not match vertex count " + std::to_string(n));
    }
    return Complex2::from_faces_unchecked(n, {edge_set.begin(), edge_set.end()},
                                          {triangle_set.begin(), triangle_set.end()},
                                          std::move(labels));
}

Complex2 complete_complex(int n) {
    if (n < 0) {
        throw DomainError("vertex count must be non-negative");
    }
    std::vector<Edge> edges;
    std::vector<Triangle> triangles;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            edges.push_back({a, b});
            for (int c = b + 1; c < n; ++c) {
                triangles.push_back({a, b, c});
            }
        }
    }
    return Complex2::from_faces_unchecked(n, std::move(edges), std::move(triangles));
}

Complex2 random_complex(int n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("triangle probability must lie in [0, 1], got " + std::to_string(p));
    }
    if (n < 0) {
        throw DomainError("vertex count must be non-negative");
    }
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    std::vector<Triangle> triangles;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            edges.push_back({a, b});
        }
    }
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                if (rng.uniform01() < p) {
                    triangles.push_back({a, b, c});
                }
            }
        }
    }
    return Complex2::from_faces_unchecked(n, std::move(edges), std::move(triangles));
}

DegreeProfile degree_profile(const Complex2& complex) {
    DegreeProfile profile;
    profile.vertex_edge_degrees.resize(static_cast<std::size_t>(complex.vertex_count()));
    for (int v = 0; v < complex.vertex_count(); ++v) {
        profile.vertex_edge_degrees[static_cast<std::size_t>(v)] =
            static_cast<int>(complex.edges_at(v).size());
    }
    profile.edge_triangle_degrees.resize(static_cast<std::size_t>(complex.edge_count()));
    for (int e = 0; e < complex.edge_count(); ++e) {
        profile.edge_triangle_degrees[static_cast<std::size_t>(e)] =
            static_cast<int>(complex.triangles_at(e).size());
    }
    const auto k0 = profile.vertex_regular();
    const auto k1 = profile.edge_regular();
    if (k0 && k1) {
        profile.regular = std::pair{*k0, *k1};
    }
    return profile;
}

ValidationReport validate(const Complex2& complex) {
    ValidationReport report;
    auto& out = report.findings;
    const int n = complex.vertex_count();

    if (!complex.labels().empty() && static_cast<int>(complex.labels().size()) != n) {
        out.push_back("label count does not match vertex count");
    }

    std::set<Edge> edges;
    for (int e = 0; e < complex.edge_count(); ++e) {
        const Edge& edge = complex.edge(e);
        const std::string name = "edge " + std::to_string(e) + " " + face_string(edge);
        if (!(edge[0] < edge[1])) {
            out.push_back(name + " is not stored with strictly increasing vertex ids");
        }
        for (int v : edge) {
            if (v < 0 || v >= n) {
                out.push_back("closure: " + name + " has vertex " + std::to_string(v) +
                              " outside 0.." + std::to_string(n - 1));
            }
        }
        if (!edges.insert(edge).second) {
            out.push_back("duplicate " + name);
        } else if (e > 0 && !(complex.edge(e - 1) < edge)) {
            out.push_back(name + " is out of lexicographic order");
        }
    }

    std::set<Triangle> triangles;
    for (int t = 0; t < complex.triangle_count(); ++t) {
        const Triangle& tri = complex.triangle(t);
        const std::string name = "triangle " + std::to_string(t) + " " + face_string(tri);
        if (!(tri[0] < tri[1] && tri[1] < tri[2])) {
            out.push_back(name + " is not stored with strictly increasing vertex ids");
        }
        if (!triangles.insert(tri).second) {
            out.push_back("duplicate " + name);
        } else if (t > 0 && !(complex.triangle(t - 1) < tri)) {
            out.push_back(name + " is out of lexicographic order");
        }
        const std::array<Edge, 3> sides{{{tri[0], tri[1]}, {tri[0], tri[2]}, {tri[1], tri[2]}}};
        for (const Edge& side : sides) {
            if (!edges.contains(side)) {
                out.push_back("closure: " + name + " is missing edge " + face_string(side));
            }
        }
    }

    if (complex.rebuild_incidence() != complex.stored_incidence()) {
        out.push_back("incidence maps disagree with the face lists");
    }
    return report;
}

}  // namespace hdx
