#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hdx/cochain.hpp"
#include "hdx/complex.hpp"
#include "hdx/rational.hpp"
#include "hdx/spectral.hpp"

namespace hdx {

/// Exact expansion constants of one face dimension i.
struct DimensionCertificate {
    int dimension = 0;
    int faces = 0;  // |X(i)|
    int degree = 0;  // k_i
    int cocycle_rank = 0;
    int coboundary_rank = 0;

    // min |delta(S)| / (k_i dist(S, Z^i)) over S with delta(S) != 0.
    Rational epsilon_cosystolic;
    std::vector<int> cosystolic_witness;
    // Same ratio with the distance taken to B^i.
    Rational epsilon_coboundary;
    std::vector<int> coboundary_witness;
    // min |z| / |X(i)| over cocycles z outside B^i; absent when Z^i = B^i.
    std::optional<Rational> mu;
    std::vector<int> mu_witness;
};

struct ExpansionCertificate {
    int k0 = 0;
    int k1 = 0;
    std::array<DimensionCertificate, 2> dimensions;

    // Minimum over both dimensions; the lemma audits consume these.
    Rational epsilon_cosystolic;
    Rational epsilon_coboundary;
    Rational mu;
    // No nontrivial cocycle exists in either dimension; mu is then reported
    // as 1 and never binds.
    bool mu_vacuous = true;

    // G0(X) connected. For disconnected inputs Z^0 and B^0 differ and the two
    // epsilons answer different questions.
    bool connected = true;
};

inline constexpr int kCertifyMaxBits = 24;

/// Exhaustive over every subset of X(0) and X(1). Needs a (k0, k1)-regular
/// complex. Throws RegularityError, CapacityError when |X(i)| > max_bits, or
/// DegenerateError when some dimension has no non-cocycle at all.
ExpansionCertificate certify_exact(const Complex2& complex, int max_bits = kCertifyMaxBits);

// |delta(S)| / (k_i dist(S, space)) for one chain; used to re-evaluate witnesses.
Rational expansion_ratio(const Complex2& complex, const Chain& chain, const CodeSpace& space,
                         int degree);

// 3 sqrt((1 + 2 l)^2 + 32) - 2 l - 17, the bracket shared by the sum lemma
// and the mixing rate.
double coboundary_bracket(double lambda2);

// Fatness constant (1/8)(1 + 2 l + sqrt((1 + 2 l)^2 + 32)); needs l < 1/2.
double fatness_constant(double lambda2);

// 1 - eps^2/128 * bracket^2; needs eps >= 0 and l < 1/2.
double alpha_bound(double epsilon, double lambda2);

enum class Fatness { fat, semi_fat, non_fat };
const char* to_string(Fatness f);

struct FatnessPartition {
    double eta = 0.0;
    int k0 = 0;
    std::vector<int> local_sizes;  // |F_v| per vertex
    std::vector<int> fat;
    std::vector<int> semi_fat;
    std::vector<int> non_fat;

    // Thresholds: fat iff |F_v| > eta k0; semi-fat iff k0/2 < |F_v| <= eta k0.
    static Fatness classify(int local_size, int k0, double eta);
    Fatness of(int vertex) const;
};

// Needs a vertex-regular complex and 1/2 < eta < 1.
FatnessPartition fatness_partition(const Complex2& complex, const Chain& edges, double eta);

struct OutgoingEdgesCheck {
    long long lhs = 0;  // |E_G1(S, S^c)| for the G1 vertex set of F
    long long rhs = 0;  // sum over v of |delta(F_v)|
    bool holds() const noexcept { return lhs == rhs; }
};

OutgoingEdgesCheck outgoing_edges_identity(const Complex2& complex, const Chain& edges);
OutgoingEdgesCheck outgoing_edges_identity(const Complex2& complex, const EdgeGraphMap& g1,
                                           const Chain& edges);

struct LargeCutsAudit {
    int k = 0;
    int min_cut = 0;
    std::vector<int> witness;
    double lambda2 = 0.0;
    bool precondition_met = false;  // |V| >= 4 / (1 - 2 lambda2)
    bool holds = false;  // min_cut >= k
    // Only asserted when the size precondition holds.
    bool passes() const noexcept { return !precondition_met || holds; }
};

// Needs a regular graph with lambda2 < 1/2.
LargeCutsAudit large_cuts_audit(const Graph& g0, int max_vertices = kCheegerMaxVertices);

/// Everything the per-F lemma audits share, computed once per complex.
struct AuditContext {
    Complex2 complex;
    int k0 = 0;
    int k1 = 0;
    Graph g0;
    SpectralReport g0_spectrum;
    double lambda2 = 0.0;
    EdgeGraphMap g1;
    CodeSpace z1;
    ExpansionCertificate certificate;
    double eta = 0.0;
    bool large_cuts_precondition = false;  // |V| >= 4 / (1 - 2 lambda2)
    bool non_expanding_precondition = false;  // |V| >= 3 / mu
    bool preconditions_met() const noexcept {
        return large_cuts_precondition && non_expanding_precondition;
    }
};

// Throws RegularityError for non-regular X, DomainError when lambda2 >= 1/2,
// and whatever certify_exact throws.
AuditContext prepare_audit(const Complex2& complex, int max_bits = kCertifyMaxBits);

struct VertexDistance {
    int vertex = 0;
    int local_size = 0;
    int distance = 0;  // dist(F_v, Z^1) by enumeration
    int formula = 0;  // min(|F_v|, k0 - |F_v|)
    bool equal() const noexcept { return distance == formula; }
};

struct DistanceFormulaAudit {
    std::vector<VertexDistance> vertices;
    bool proper_nonempty = false;  // empty != F != E
    bool preconditions_met = false;
    bool asserted = false;
    bool all_equal = false;
    bool passes() const noexcept { return !asserted || all_equal; }
    std::string note;
};

DistanceFormulaAudit distance_formula_audit(const AuditContext& context, const Chain& edges);

struct VertexBound {
    int vertex = 0;
    Fatness fatness = Fatness::non_fat;
    int local_size = 0;
    int coboundary_size = 0;
    double bound = 0.0;
    bool holds = true;
};

struct LocalViewBoundsAudit {
    std::vector<VertexBound> vertices;  // semi-fat and non-fat only
    bool preconditions_met = false;
    bool all_hold = true;
    bool passes() const noexcept { return !preconditions_met || all_hold; }
};

LocalViewBoundsAudit local_view_bounds_audit(const AuditContext& context, const Chain& edges,
                                             const Rational& epsilon, double eta,
                                             double slack = kAuditSlack);

struct SumCoboundariesAudit {
    long long lhs = 0;
    double rhs = 0.0;
    bool passes = false;
};

// Throws DomainError when |F| > |E|/2.
SumCoboundariesAudit sum_coboundaries_audit(const AuditContext& context, const Chain& edges,
                                            const Rational& epsilon, double slack = kAuditSlack);

}  // namespace hdx
