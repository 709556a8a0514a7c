#include "hdx/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "hdx/error.hpp"
#include "hdx/parallel.hpp"
#include "hdx/subsets.hpp"
#include "hdx/symmetric_eigen.hpp"

namespace hdx {

Graph::Graph(int vertex_count, std::span<const Edge> edges) {
    if (vertex_count < 0) {
        throw DomainError("vertex count must be non-negative");
    }
    adjacency_.assign(static_cast<std::size_t>(vertex_count), {});
    std::set<Edge> seen;
    for (const Edge& raw : edges) {
        Edge e{std::min(raw[0], raw[1]), std::max(raw[0], raw[1])};
        if (e[0] < 0 || e[1] >= vertex_count) {
            throw DomainError("edge endpoint out of range");
        }
        if (e[0] == e[1]) {
            throw DomainError("self-loop at vertex " + std::to_string(e[0]));
        }
        if (!seen.insert(e).second) {
            throw DomainError("parallel edge {" + std::to_string(e[0]) + "," +
                              std::to_string(e[1]) + "}");
        }
        adjacency_[static_cast<std::size_t>(e[0])].push_back(e[1]);
        adjacency_[static_cast<std::size_t>(e[1])].push_back(e[0]);
    }
    edges_.assign(seen.begin(), seen.end());
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());

    if (vertex_count > 0) {
        const auto k = adjacency_.front().size();
        if (std::all_of(adjacency_.begin(), adjacency_.end(),
                        [k](const auto& list) { return list.size() == k; })) {
            regular_k_ = static_cast<int>(k);
        }
    }
}

bool Graph::adjacent(int u, int v) const {
    const auto n = neighbors(u);
    return std::binary_search(n.begin(), n.end(), v);
}

bool Graph::is_connected() const {
    const int n = vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

std::vector<double> Graph::adjacency_matrix() const {
    const auto n = static_cast<std::size_t>(vertex_count());
    std::vector<double> a(n * n, 0.0);
    for (const Edge& e : edges_) {
        const auto u = static_cast<std::size_t>(e[0]);
        const auto v = static_cast<std::size_t>(e[1]);
        a[u * n + v] = 1.0;
        a[v * n + u] = 1.0;
    }
    return a;
}

Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    }
    return Graph(n, edges);
}

Graph underlying_graph(const Complex2& complex) {
    return Graph(complex.vertex_count(), complex.edges());
}

EdgeGraphMap edge_graph(const Complex2& complex) {
    std::set<Edge> adjacency;
    for (int t = 0; t < complex.triangle_count(); ++t) {
        const auto& sides = complex.triangle_edges(t);
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                const int a = sides[static_cast<std::size_t>(i)];
                const int b = sides[static_cast<std::size_t>(j)];
                if (a >= 0 && b >= 0) {
                    adjacency.insert({std::min(a, b), std::max(a, b)});
                }
            }
        }
    }
    EdgeGraphMap map;
    const std::vector<Edge> edges(adjacency.begin(), adjacency.end());
    map.graph = Graph(complex.edge_count(), edges);
    map.to_edge.resize(static_cast<std::size_t>(complex.edge_count()));
    map.from_edge.resize(static_cast<std::size_t>(complex.edge_count()));
    for (int e = 0; e < complex.edge_count(); ++e) {
        map.to_edge[static_cast<std::size_t>(e)] = e;
        map.from_edge[static_cast<std::size_t>(e)] = e;
    }
    return map;
}

namespace {

int require_regular(const Graph& graph, const char* what) {
    const auto k = graph.regular_degree();
    if (!k) {
        throw RegularityError(std::string(what) + " requires a regular graph");
    }
    if (*k == 0) {
        throw RegularityError(std::string(what) + " requires positive degree");
    }
    return *k;
}

// Neighborhood bit masks, for graphs of at most 64 vertices.
std::vector<std::uint64_t> neighbor_masks(const Graph& graph) {
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(graph.vertex_count()), 0);
    for (int v = 0; v < graph.vertex_count(); ++v) {
        for (int w : graph.neighbors(v)) masks[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;
    }
    return masks;
}

int cut_size(const std::vector<std::uint64_t>& adj, std::uint64_t set, std::uint64_t all) {
    int cut = 0;
    for (std::uint64_t rest = set; rest; rest &= rest - 1) {
        cut += std::popcount(adj[static_cast<std::size_t>(std::countr_zero(rest))] & ~set & all);
    }
    return cut;
}

}  // namespace

SpectralReport normalized_spectrum(const Graph& graph, double tolerance) {
    const int k = require_regular(graph, "spectral normalization");
    const int n = graph.vertex_count();
    std::vector<double> a = graph.adjacency_matrix();
    for (double& x : a) x /= k;
    const EigenResult eig = symmetric_eigenvalues(a, n, tolerance);

    SpectralReport report;
    report.degree = k;
    report.normalized_eigenvalues = eig.values;
    report.tolerance = eig.off_diagonal_norm;
    report.lambda2 = n >= 2 ? eig.values[1] : eig.values[0];
    report.lambda_n = eig.values.back();
    report.lambda_max_nontrivial = n >= 2 ? std::max(std::abs(report.lambda2), std::abs(report.lambda_n)) : 0.0;
    return report;
}

CheegerResult cheeger_exhaustive(const Graph& graph, int max_vertices) {
    const int k = require_regular(graph, "Cheeger constant");
    const int n = graph.vertex_count();
    if (n > std::min(max_vertices, 63)) {
        throw CapacityError("graph too large for exhaustive Cheeger enumeration", n, max_vertices);
    }
    if (n < 2) {
        throw DomainError("Cheeger constant needs at least two vertices");
    }
    const auto adj = neighbor_masks(graph);
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;

    struct Best {
        bool valid = false;
        int cut = 0;
        int size = 1;
        std::uint64_t mask = 0;
    };
    auto better = [](const Best& a, const Best& b) {
        if (!b.valid) return a.valid;
        if (!a.valid) return false;
        const long long lhs = static_cast<long long>(a.cut) * b.size;
        const long long rhs = static_cast<long long>(b.cut) * a.size;
        return lhs < rhs || (lhs == rhs && lex_less(a.mask, b.mask));
    };

    // T always contains vertex 0; S ranges over T and its complement.
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    const unsigned chunks = default_chunks(total);
    std::vector<Best> partial(chunks);
    for_each_chunk(total, chunks, [&](unsigned c, std::uint64_t begin, std::uint64_t end) {
        if (begin == end) return;
        Best best;
        std::uint64_t t = 1 | (gray(begin) << 1);
        int cut = cut_size(adj, t, all);
        int size = std::popcount(t);
        auto consider = [&](std::uint64_t set, int set_size) {
            if (set_size == 0 || 2 * set_size > n) return;
            const Best candidate{true, cut, set_size, set};
            if (better(candidate, best)) best = candidate;
        };
        for (std::uint64_t i = begin;;) {
            consider(t, size);
            consider(all & ~t, n - size);
            if (++i == end) break;
            const int v = std::countr_zero(i) + 1;
            const std::uint64_t bit = std::uint64_t{1} << v;
            const int inner = std::popcount(adj[static_cast<std::size_t>(v)] & (t & ~bit));
            if (t & bit) {
                cut -= k - 2 * inner;
                --size;
            } else {
                cut += k - 2 * inner;
                ++size;
            }
            t ^= bit;
        }
        partial[c] = best;
    });

    Best best;
    for (const Best& b : partial) {
        if (better(b, best)) best = b;
    }
    return {Rational(best.cut, static_cast<std::int64_t>(k) * best.size), mask_members(best.mask)};
}

MixingAudit mixing_lemma_audit(const Graph& graph, int max_vertices, double threshold) {
    const int k = require_regular(graph, "mixing lemma audit");
    const int n = graph.vertex_count();
    if (n > std::min(max_vertices, 63)) {
        throw CapacityError("graph too large for exhaustive mixing audit", n, max_vertices);
    }
    const double lambda2 = normalized_spectrum(graph).lambda2;
    const auto adj = neighbor_masks(graph);
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    struct Worst {
        double residual = 0.0;
        std::uint64_t mask = 0;
    };
    auto residual = [&](int cut, int size) {
        const double internal_twice = static_cast<double>(k) * size - cut;
        return internal_twice - static_cast<double>(k) * size * (static_cast<double>(size) / n + lambda2);
    };

    const std::uint64_t total = std::uint64_t{1} << n;
    const unsigned chunks = default_chunks(total);
    std::vector<Worst> partial(chunks);
    for_each_chunk(total, chunks, [&](unsigned c, std::uint64_t begin, std::uint64_t end) {
        if (begin == end) return;
        std::uint64_t s = gray(begin);
        int cut = cut_size(adj, s, all);
        int size = std::popcount(s);
        Worst worst{residual(cut, size), s};
        for (std::uint64_t i = begin + 1; i < end; ++i) {
            const int v = std::countr_zero(i);
            const std::uint64_t bit = std::uint64_t{1} << v;
            const int inner = std::popcount(adj[static_cast<std::size_t>(v)] & (s & ~bit));
            if (s & bit) {
                cut -= k - 2 * inner;
                --size;
            } else {
                cut += k - 2 * inner;
                ++size;
            }
            s ^= bit;
            const double r = residual(cut, size);
            if (r > worst.residual || (r == worst.residual && lex_less(s, worst.mask))) {
                worst = {r, s};
            }
        }
        partial[c] = worst;
    });

    Worst worst = partial.front();
    for (const Worst& w : partial) {
        if (w.residual > worst.residual || (w.residual == worst.residual && lex_less(w.mask, worst.mask))) {
            worst = w;
        }
    }
    return {lambda2, worst.residual, mask_members(worst.mask), worst.residual <= threshold};
}

CheegerInequalityAudit cheeger_inequality_audit(const Graph& graph, double slack_tolerance) {
    const CheegerResult cheeger = cheeger_exhaustive(graph);
    const double lambda2 = normalized_spectrum(graph).lambda2;
    const double h = cheeger.h_normalized.to_double();
    const double slack = (1.0 - h * h / 2.0) - lambda2;
    return {cheeger.h_normalized, lambda2, slack, slack >= -slack_tolerance};
}

EdgeGraphFloorAudit edge_graph_floor_audit(const Complex2& complex, double slack_tolerance) {
    const auto k1 = degree_profile(complex).edge_regular();
    if (!k1 || *k1 == 0) {
        throw RegularityError("edge-graph floor needs every edge in the same positive number of triangles");
    }
    const SpectralReport spectrum = normalized_spectrum(edge_graph(complex).graph);
    const double slack = spectrum.lambda_n + 17.0 / 18.0;
    return {spectrum.lambda_n, slack, slack >= -slack_tolerance};
}

}  // namespace hdx
