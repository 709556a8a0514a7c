#include "hdx/walk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>

#include "hdx/error.hpp"
#include "hdx/parallel.hpp"
#include "hdx/rng.hpp"

namespace hdx {

Distribution::Distribution(std::vector<double> probabilities) : p_(std::move(probabilities)) {
    double sum = 0.0;
    for (double x : p_) {
        if (!(x >= 0.0)) {
            throw DomainError("probabilities must be non-negative");
        }
        sum += x;
    }
    if (!p_.empty() && std::abs(sum - 1.0) > 1e-12) {
        throw DomainError("probabilities sum to " + std::to_string(sum));
    }
}

Distribution Distribution::uniform(int n) {
    return Distribution(std::vector<double>(static_cast<std::size_t>(n), 1.0 / n));
}

Distribution Distribution::point_mass(int n, int vertex) {
    if (vertex < 0 || vertex >= n) {
        throw DomainError("point mass outside 0.." + std::to_string(n - 1));
    }
    std::vector<double> p(static_cast<std::size_t>(n), 0.0);
    p[static_cast<std::size_t>(vertex)] = 1.0;
    return Distribution(std::move(p));
}

namespace {

double distance_uniform(const std::vector<double>& p) {
    const double u = 1.0 / static_cast<double>(p.size());
    double sum = 0.0;
    for (double x : p) sum += (x - u) * (x - u);
    return std::sqrt(sum);
}

void require_walkable(const Graph& graph) {
    for (int v = 0; v < graph.vertex_count(); ++v) {
        if (graph.degree(v) == 0) {
            throw UndefinedTransitionError("vertex " + std::to_string(v) + " has no neighbors");
        }
    }
    if (!graph.regular_degree()) {
        throw RegularityError("exact evolution needs a regular graph");
    }
}

int step_from(std::span<const int> neighbors, SplitMix64& rng) {
    return neighbors[static_cast<std::size_t>(rng.uniform_index(neighbors.size()))];
}

}  // namespace

double Distribution::distance_to_uniform() const {
    return distance_uniform(p_);
}

std::vector<double> step_distribution(const Graph& graph, const std::vector<double>& p) {
    std::vector<double> next(p.size(), 0.0);
    for (int v = 0; v < graph.vertex_count(); ++v) {
        const auto nbrs = graph.neighbors(v);
        if (nbrs.empty()) {
            throw UndefinedTransitionError("vertex " + std::to_string(v) + " has no neighbors");
        }
        const double share = p[static_cast<std::size_t>(v)] / static_cast<double>(nbrs.size());
        for (int w : nbrs) next[static_cast<std::size_t>(w)] += share;
    }
    return next;
}

WalkTrace evolve_exact(const Graph& graph, const Distribution& p0, int steps,
                       std::optional<double> alpha) {
    if (steps < 0) {
        throw DomainError("step count must be non-negative");
    }
    if (p0.size() != graph.vertex_count()) {
        throw DimensionMismatchError("distribution size does not match the graph");
    }
    require_walkable(graph);

    WalkTrace trace;
    trace.alpha = alpha;
    trace.distributions.reserve(static_cast<std::size_t>(steps) + 1);
    trace.distributions.push_back(p0.probabilities());
    for (int i = 0; i < steps; ++i) {
        trace.distributions.push_back(step_distribution(graph, trace.distributions.back()));
    }
    double power = 1.0;
    for (const auto& p : trace.distributions) {
        const double d = distance_uniform(p);
        trace.distances.push_back(d);
        if (alpha) {
            trace.bound_satisfied.push_back(d <= power + kBoundSlack);
            power *= *alpha;
        }
    }
    return trace;
}

std::vector<int> high_order_neighbors(const Complex2& complex, int edge) {
    if (edge < 0 || edge >= complex.edge_count()) {
        throw DomainError("edge " + std::to_string(edge) + " out of range");
    }
    std::vector<int> out;
    for (int t : complex.triangles_at(edge)) {
        for (int f : complex.triangle_edges(t)) {
            if (f >= 0 && f != edge) out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> high_order_simulate(const Complex2& complex, int start_edge, int steps,
                                     std::uint64_t seed) {
    if (steps < 0) {
        throw DomainError("step count must be non-negative");
    }
    std::vector<int> path{start_edge};
    if (start_edge < 0 || start_edge >= complex.edge_count()) {
        throw DomainError("edge " + std::to_string(start_edge) + " out of range");
    }
    SplitMix64 rng(seed);
    for (int i = 0; i < steps; ++i) {
        const std::vector<int> nbrs = high_order_neighbors(complex, path.back());
        if (nbrs.empty()) {
            throw UndefinedTransitionError("edge " + std::to_string(path.back()) +
                                           " lies in no triangle");
        }
        path.push_back(step_from(nbrs, rng));
    }
    return path;
}

std::vector<int> simulate(const Graph& graph, int start_vertex, int steps, std::uint64_t seed) {
    if (steps < 0) {
        throw DomainError("step count must be non-negative");
    }
    if (start_vertex < 0 || start_vertex >= graph.vertex_count()) {
        throw DomainError("vertex " + std::to_string(start_vertex) + " out of range");
    }
    std::vector<int> path{start_vertex};
    SplitMix64 rng(seed);
    for (int i = 0; i < steps; ++i) {
        const auto nbrs = graph.neighbors(path.back());
        if (nbrs.empty()) {
            throw UndefinedTransitionError("vertex " + std::to_string(path.back()) +
                                           " has no neighbors");
        }
        path.push_back(step_from(nbrs, rng));
    }
    return path;
}

std::vector<std::vector<std::uint64_t>> high_order_ensemble(const Complex2& complex,
                                                            int start_edge, int steps,
                                                            std::uint64_t paths,
                                                            std::uint64_t seed) {
    if (steps < 0) {
        throw DomainError("step count must be non-negative");
    }
    if (start_edge < 0 || start_edge >= complex.edge_count()) {
        throw DomainError("edge " + std::to_string(start_edge) + " out of range");
    }
    const auto m = static_cast<std::size_t>(complex.edge_count());
    std::vector<std::vector<int>> neighbors(m);
    for (std::size_t e = 0; e < m; ++e) neighbors[e] = high_order_neighbors(complex, static_cast<int>(e));

    using Counts = std::vector<std::vector<std::uint64_t>>;
    const unsigned chunks = paths >= 4096 ? 32 : 1;
    std::vector<Counts> partial(chunks, Counts(static_cast<std::size_t>(steps) + 1,
                                               std::vector<std::uint64_t>(m, 0)));
    for_each_chunk(paths, chunks, [&](unsigned c, std::uint64_t begin, std::uint64_t end) {
        Counts& counts = partial[c];
        for (std::uint64_t j = begin; j < end; ++j) {
            SplitMix64 rng(derive_seed(seed, j));
            int at = start_edge;
            ++counts[0][static_cast<std::size_t>(at)];
            for (int i = 1; i <= steps; ++i) {
                const auto& nbrs = neighbors[static_cast<std::size_t>(at)];
                if (nbrs.empty()) {
                    throw UndefinedTransitionError("edge " + std::to_string(at) +
                                                   " lies in no triangle");
                }
                at = step_from(nbrs, rng);
                ++counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(at)];
            }
        }
    });

    Counts total(static_cast<std::size_t>(steps) + 1, std::vector<std::uint64_t>(m, 0));
    for (const Counts& part : partial) {
        for (std::size_t i = 0; i < total.size(); ++i) {
            for (std::size_t e = 0; e < m; ++e) total[i][e] += part[i][e];
        }
    }
    return total;
}

double total_variation(const std::vector<double>& p, const std::vector<double>& q) {
    if (p.size() != q.size()) {
        throw DimensionMismatchError("distributions of different sizes");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
    return sum / 2.0;
}

RapidMixingReport rapid_mixing_audit(const Complex2& complex,
                                     const ExpansionCertificate& certificate, int steps,
                                     double slack) {
    RapidMixingReport report;
    report.steps = steps;
    const DegreeProfile profile = degree_profile(complex);
    if (!profile.regular) {
        report.reason = "complex is not (k0, k1)-regular";
        return report;
    }
    if (profile.regular->second == 0) {
        report.reason = "edges lie in no triangle; the high-order walk is undefined";
        return report;
    }
    const SpectralReport g0 = normalized_spectrum(underlying_graph(complex));
    report.lambda2_g0 = g0.lambda2;
    if (!(g0.lambda2 < 0.5)) {
        report.reason = "lambda2(G0) >= 1/2";
        return report;
    }
    report.applicable = true;
    report.epsilon = certificate.epsilon_cosystolic.to_double();
    report.alpha = alpha_bound(report.epsilon, g0.lambda2);

    const Graph g1 = edge_graph(complex).graph;
    report.lambda_g1 = normalized_spectrum(g1).lambda_max_nontrivial;

    const int m = g1.vertex_count();
    report.worst_distances.assign(static_cast<std::size_t>(steps) + 1, -1.0);
    report.worst_start.assign(static_cast<std::size_t>(steps) + 1, 0);
    for (int start = 0; start < m; ++start) {
        const WalkTrace trace = evolve_exact(g1, Distribution::point_mass(m, start), steps);
        for (std::size_t i = 0; i < trace.distances.size(); ++i) {
            if (trace.distances[i] > report.worst_distances[i]) {
                report.worst_distances[i] = trace.distances[i];
                report.worst_start[i] = start;
            }
        }
    }

    report.passes = true;
    report.spectral_decay_holds = true;
    const double d0 = report.worst_distances.front();
    double alpha_power = 1.0;
    double lambda_power = 1.0;
    for (double d : report.worst_distances) {
        const bool ok = d <= alpha_power + slack;
        report.alpha_ok.push_back(ok);
        report.passes = report.passes && ok;
        report.spectral_decay_holds = report.spectral_decay_holds && d <= lambda_power * d0 + slack;
        alpha_power *= report.alpha;
        lambda_power *= report.lambda_g1;
    }
    return report;
}

}  // namespace hdx
