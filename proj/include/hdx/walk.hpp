#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hdx/complex.hpp"
#include "hdx/expansion.hpp"
#include "hdx/spectral.hpp"

namespace hdx {

/// Probability vector over the vertices of a graph.
class Distribution {
public:
    // Throws DomainError on negative entries or a sum away from 1 by > 1e-12.
    explicit Distribution(std::vector<double> probabilities);

    static Distribution uniform(int n);
    static Distribution point_mass(int n, int vertex);

    int size() const noexcept { return static_cast<int>(p_.size()); }
    const std::vector<double>& probabilities() const noexcept { return p_; }
    double operator[](int v) const { return p_.at(static_cast<std::size_t>(v)); }

    // ||p - u||_2 with u uniform.
    double distance_to_uniform() const;

private:
    std::vector<double> p_;
};

inline constexpr double kBoundSlack = 1e-9;

struct WalkTrace {
    std::vector<std::vector<double>> distributions;  // p_0 .. p_T
    std::vector<double> distances;  // ||p_i - u||_2
    std::optional<double> alpha;
    std::vector<bool> bound_satisfied;  // d_i <= alpha^i + slack, when alpha is set
};

// One step of the uniform-neighbor walk: p'(w) = sum_{v ~ w} p(v) / deg(v).
std::vector<double> step_distribution(const Graph& graph, const std::vector<double>& p);

/// Exact evolution p_i = M p_{i-1}. Throws UndefinedTransitionError if a
/// vertex has no neighbors and RegularityError for non-regular graphs.
WalkTrace evolve_exact(const Graph& graph, const Distribution& p0, int steps,
                       std::optional<double> alpha = std::nullopt);

// Edges sharing a triangle with edge e, ascending.
std::vector<int> high_order_neighbors(const Complex2& complex, int edge);

/// Seeded paths of length steps + 1. Each step draws uniform_index(deg) from
/// SplitMix64(seed) over the ascending neighbor list, so the high-order walk
/// on X and the vertex walk on G1(X) agree for equal seeds.
std::vector<int> high_order_simulate(const Complex2& complex, int start_edge, int steps,
                                     std::uint64_t seed);
std::vector<int> simulate(const Graph& graph, int start_vertex, int steps, std::uint64_t seed);

/// counts[i][x]: how many of `paths` walks stood on x after i steps. Path j
/// uses derive_seed(seed, j), so the result does not depend on threading.
std::vector<std::vector<std::uint64_t>> high_order_ensemble(const Complex2& complex,
                                                            int start_edge, int steps,
                                                            std::uint64_t paths,
                                                            std::uint64_t seed);

double total_variation(const std::vector<double>& p, const std::vector<double>& q);

struct RapidMixingReport {
    bool applicable = false;
    std::string reason;  // why not applicable
    double epsilon = 0.0;
    double lambda2_g0 = 0.0;
    double lambda_g1 = 0.0;  // max(|lambda2|, |lambda_n|) of G1
    double alpha = 1.0;
    int steps = 0;
    // Worst over all point-mass starts, per step.
    std::vector<double> worst_distances;
    std::vector<int> worst_start;
    std::vector<bool> alpha_ok;
    bool passes = false;  // d_i <= alpha^i + slack for every i
    bool spectral_decay_holds = false;  // d_i <= lambda_g1^i d_0 + slack
};

RapidMixingReport rapid_mixing_audit(const Complex2& complex,
                                     const ExpansionCertificate& certificate, int steps,
                                     double slack = kBoundSlack);

}  // namespace hdx
