#include "hdx/expansion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "hdx/error.hpp"
#include "hdx/parallel.hpp"
#include "hdx/subsets.hpp"

namespace hdx {

namespace {

// A candidate fraction num/den attached to the subset that produced it.
struct Candidate {
    bool valid = false;
    long long num = 0;
    long long den = 1;
    std::uint64_t mask = 0;
};

bool smaller(const Candidate& a, const Candidate& b) {
    if (!b.valid) return a.valid;
    if (!a.valid) return false;
    const __int128 lhs = static_cast<__int128>(a.num) * b.den;
    const __int128 rhs = static_cast<__int128>(b.num) * a.den;
    return lhs < rhs || (lhs == rhs && lex_less(a.mask, b.mask));
}

struct ScanResult {
    Candidate cosystolic;
    Candidate coboundary;
    Candidate mu;
};

// Walks every subset of X(i) in Gray-code order, keeping delta(S) packed.
ScanResult scan_dimension(const Complex2& complex, int dimension, int degree,
                          const std::vector<std::uint8_t>& dist_z,
                          const std::vector<std::uint8_t>& dist_b) {
    const int n = complex.face_count(dimension);
    const int m = complex.face_count(dimension + 1);
    const std::size_t words = static_cast<std::size_t>((m + 63) / 64);

    // columns[j * words + w]: word w of delta(face j).
    std::vector<std::uint64_t> columns(static_cast<std::size_t>(n) * words, 0);
    auto set_bit = [&](int j, int bit) {
        columns[static_cast<std::size_t>(j) * words + static_cast<std::size_t>(bit / 64)] ^=
            std::uint64_t{1} << (bit % 64);
    };
    if (dimension == 0) {
        for (int v = 0; v < n; ++v) {
            for (int e : complex.edges_at(v)) set_bit(v, e);
        }
    } else {
        for (int e = 0; e < n; ++e) {
            for (int t : complex.triangles_at(e)) set_bit(e, t);
        }
    }

    const std::uint64_t total = std::uint64_t{1} << n;
    const unsigned chunks = default_chunks(total);
    std::vector<ScanResult> partial(chunks);

    for_each_chunk(total, chunks, [&](unsigned c, std::uint64_t begin, std::uint64_t end) {
        if (begin == end) return;
        ScanResult local;
        std::vector<std::uint64_t> delta(words, 0);
        std::uint64_t s = gray(begin);
        for (std::uint64_t rest = s; rest; rest &= rest - 1) {
            const auto j = static_cast<std::size_t>(std::countr_zero(rest));
            for (std::size_t w = 0; w < words; ++w) delta[w] ^= columns[j * words + w];
        }
        for (std::uint64_t i = begin;;) {
            int size = 0;
            for (std::uint64_t w : delta) size += std::popcount(w);
            if (size > 0) {
                const Candidate z{true, size, static_cast<long long>(degree) * dist_z[s], s};
                if (smaller(z, local.cosystolic)) local.cosystolic = z;
                const Candidate b{true, size, static_cast<long long>(degree) * dist_b[s], s};
                if (smaller(b, local.coboundary)) local.coboundary = b;
            } else if (dist_b[s] > 0) {
                const Candidate mu{true, std::popcount(s), n, s};
                if (smaller(mu, local.mu)) local.mu = mu;
            }
            if (++i == end) break;
            const auto j = static_cast<std::size_t>(std::countr_zero(i));
            s ^= std::uint64_t{1} << j;
            for (std::size_t w = 0; w < words; ++w) delta[w] ^= columns[j * words + w];
        }
        partial[c] = local;
    });

    ScanResult merged;
    for (const ScanResult& r : partial) {
        if (smaller(r.cosystolic, merged.cosystolic)) merged.cosystolic = r.cosystolic;
        if (smaller(r.coboundary, merged.coboundary)) merged.coboundary = r.coboundary;
        if (smaller(r.mu, merged.mu)) merged.mu = r.mu;
    }
    return merged;
}

double vertex_bound_threshold(double lambda2) {
    return 4.0 / (1.0 - 2.0 * lambda2);
}

}  // namespace

ExpansionCertificate certify_exact(const Complex2& complex, int max_bits) {
    const DegreeProfile profile = degree_profile(complex);
    if (!profile.regular) {
        throw RegularityError("certification needs a (k0, k1)-regular complex");
    }
    const int limit = std::min(max_bits, 62);
    for (int i = 0; i < 2; ++i) {
        if (complex.face_count(i) > limit) {
            throw CapacityError("too many " + std::string(i == 0 ? "vertices" : "edges") +
                                    " for exhaustive certification",
                                complex.face_count(i), max_bits);
        }
    }

    ExpansionCertificate cert;
    cert.k0 = profile.regular->first;
    cert.k1 = profile.regular->second;
    cert.connected = underlying_graph(complex).is_connected();

    bool first = true;
    for (int i = 0; i < 2; ++i) {
        DimensionCertificate& dim = cert.dimensions[static_cast<std::size_t>(i)];
        dim.dimension = i;
        dim.faces = complex.face_count(i);
        dim.degree = i == 0 ? cert.k0 : cert.k1;

        const CodeSpace z = cocycle_space(complex, i);
        const CodeSpace b = coboundary_space(complex, i);
        dim.cocycle_rank = z.rank();
        dim.coboundary_rank = b.rank();

        const auto dist_z = distance_table(z, limit);
        const auto dist_b = distance_table(b, limit);
        const ScanResult scan = scan_dimension(complex, i, dim.degree, dist_z, dist_b);
        if (!scan.cosystolic.valid) {
            throw DegenerateError("every subset of X(" + std::to_string(i) +
                                  ") is a cocycle; expansion is undefined");
        }
        dim.epsilon_cosystolic = Rational(scan.cosystolic.num, scan.cosystolic.den);
        dim.cosystolic_witness = mask_members(scan.cosystolic.mask);
        dim.epsilon_coboundary = Rational(scan.coboundary.num, scan.coboundary.den);
        dim.coboundary_witness = mask_members(scan.coboundary.mask);
        if (scan.mu.valid) {
            dim.mu = Rational(scan.mu.num, scan.mu.den);
            dim.mu_witness = mask_members(scan.mu.mask);
        }

        if (first || dim.epsilon_cosystolic < cert.epsilon_cosystolic) {
            cert.epsilon_cosystolic = dim.epsilon_cosystolic;
        }
        if (first || dim.epsilon_coboundary < cert.epsilon_coboundary) {
            cert.epsilon_coboundary = dim.epsilon_coboundary;
        }
        if (dim.mu && (cert.mu_vacuous || *dim.mu < cert.mu)) {
            cert.mu = *dim.mu;
            cert.mu_vacuous = false;
        }
        first = false;
    }
    if (cert.mu_vacuous) {
        cert.mu = Rational(1);
    }
    return cert;
}

Rational expansion_ratio(const Complex2& complex, const Chain& chain, const CodeSpace& space,
                         int degree) {
    const int boundary = coboundary(complex, chain).size();
    const int distance = distance_to_space(chain, space).distance;
    if (distance == 0 || degree == 0) {
        throw DomainError("expansion ratio undefined for a chain inside the code space");
    }
    return Rational(boundary, static_cast<std::int64_t>(degree) * distance);
}

double coboundary_bracket(double lambda2) {
    const double a = 1.0 + 2.0 * lambda2;
    return 3.0 * std::sqrt(a * a + 32.0) - 2.0 * lambda2 - 17.0;
}

double fatness_constant(double lambda2) {
    if (!(lambda2 < 0.5)) {
        throw DomainError("fatness constant needs lambda2 < 1/2, got " + std::to_string(lambda2));
    }
    const double a = 1.0 + 2.0 * lambda2;
    const double eta = (a + std::sqrt(a * a + 32.0)) / 8.0;
    if (!(eta > 0.5)) {
        throw DomainError("fatness constant " + std::to_string(eta) + " is not above 1/2");
    }
    return eta;
}

double alpha_bound(double epsilon, double lambda2) {
    if (!(lambda2 < 0.5)) {
        throw DomainError("mixing rate needs lambda2 < 1/2, got " + std::to_string(lambda2));
    }
    if (!(epsilon >= 0.0)) {
        throw DomainError("mixing rate needs a non-negative epsilon");
    }
    const double bracket = coboundary_bracket(lambda2);
    return 1.0 - epsilon * epsilon / 128.0 * bracket * bracket;
}

const char* to_string(Fatness f) {
    switch (f) {
        case Fatness::fat: return "fat";
        case Fatness::semi_fat: return "semi-fat";
        case Fatness::non_fat: return "non-fat";
    }
    return "?";
}

Fatness FatnessPartition::classify(int local_size, int k0, double eta) {
    if (local_size > eta * k0) return Fatness::fat;
    if (2 * local_size > k0) return Fatness::semi_fat;
    return Fatness::non_fat;
}

Fatness FatnessPartition::of(int vertex) const {
    return classify(local_sizes.at(static_cast<std::size_t>(vertex)), k0, eta);
}

FatnessPartition fatness_partition(const Complex2& complex, const Chain& edges, double eta) {
    if (!(eta > 0.5 && eta < 1.0)) {
        throw DomainError("fatness constant must lie in (1/2, 1), got " + std::to_string(eta));
    }
    const auto k0 = degree_profile(complex).vertex_regular();
    if (!k0) {
        throw RegularityError("fatness needs every vertex in the same number of edges");
    }
    if (edges.dimension() != 1) {
        throw DimensionMismatchError("fatness partition expects a 1-chain");
    }
    check_chain(complex, edges);

    FatnessPartition p;
    p.eta = eta;
    p.k0 = *k0;
    p.local_sizes.assign(static_cast<std::size_t>(complex.vertex_count()), 0);
    for (int e : edges.members()) {
        for (int v : complex.edge(e)) ++p.local_sizes[static_cast<std::size_t>(v)];
    }
    for (int v = 0; v < complex.vertex_count(); ++v) {
        switch (p.of(v)) {
            case Fatness::fat: p.fat.push_back(v); break;
            case Fatness::semi_fat: p.semi_fat.push_back(v); break;
            case Fatness::non_fat: p.non_fat.push_back(v); break;
        }
    }
    return p;
}

namespace {

long long local_coboundary_sum(const Complex2& complex, const Chain& edges) {
    long long sum = 0;
    for (int v = 0; v < complex.vertex_count(); ++v) {
        sum += coboundary_edges(complex, local_view(complex, edges, v)).size();
    }
    return sum;
}

}  // namespace

OutgoingEdgesCheck outgoing_edges_identity(const Complex2& complex, const EdgeGraphMap& g1,
                                           const Chain& edges) {
    if (edges.dimension() != 1) {
        throw DimensionMismatchError("outgoing-edges identity expects a 1-chain");
    }
    check_chain(complex, edges);
    std::vector<char> inside(static_cast<std::size_t>(complex.edge_count()), 0);
    for (int e : edges.members()) inside[static_cast<std::size_t>(g1.from_edge[static_cast<std::size_t>(e)])] = 1;

    OutgoingEdgesCheck check;
    for (const Edge& link : g1.graph.edges()) {
        if (inside[static_cast<std::size_t>(link[0])] != inside[static_cast<std::size_t>(link[1])]) {
            ++check.lhs;
        }
    }
    check.rhs = local_coboundary_sum(complex, edges);
    return check;
}

OutgoingEdgesCheck outgoing_edges_identity(const Complex2& complex, const Chain& edges) {
    return outgoing_edges_identity(complex, edge_graph(complex), edges);
}

LargeCutsAudit large_cuts_audit(const Graph& g0, int max_vertices) {
    const SpectralReport spectrum = normalized_spectrum(g0);
    if (!(spectrum.lambda2 < 0.5)) {
        throw DomainError("large-cuts audit needs lambda2 < 1/2");
    }
    const int n = g0.vertex_count();
    if (n > std::min(max_vertices, 63)) {
        throw CapacityError("graph too large for exhaustive cut enumeration", n, max_vertices);
    }
    if (n < 2) {
        throw DomainError("large-cuts audit needs at least two vertices");
    }

    LargeCutsAudit audit;
    audit.k = spectrum.degree;
    audit.lambda2 = spectrum.lambda2;
    audit.precondition_met = n + kAuditSlack >= vertex_bound_threshold(spectrum.lambda2);

    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        for (int w : g0.neighbors(v)) adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;
    }
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;

    // Cuts are complement-symmetric: enumerate sets containing vertex 0.
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    const unsigned chunks = default_chunks(total);
    std::vector<Candidate> partial(chunks);
    for_each_chunk(total, chunks, [&](unsigned c, std::uint64_t begin, std::uint64_t end) {
        Candidate best;
        for (std::uint64_t i = begin; i < end; ++i) {
            const std::uint64_t s = 1 | (gray(i) << 1);
            if (s == all) continue;
            long long cut = 0;
            for (std::uint64_t rest = s; rest; rest &= rest - 1) {
                cut += std::popcount(adj[static_cast<std::size_t>(std::countr_zero(rest))] & ~s & all);
            }
            const Candidate cand{true, cut, 1, s};
            if (smaller(cand, best)) best = cand;
        }
        partial[c] = best;
    });
    Candidate best;
    for (const Candidate& p : partial) {
        if (smaller(p, best)) best = p;
    }
    audit.min_cut = static_cast<int>(best.num);
    audit.witness = mask_members(best.mask);
    audit.holds = audit.min_cut >= audit.k;
    return audit;
}

AuditContext prepare_audit(const Complex2& complex, int max_bits) {
    const DegreeProfile profile = degree_profile(complex);
    if (!profile.regular) {
        throw RegularityError("lemma audits need a (k0, k1)-regular complex");
    }
    AuditContext ctx;
    ctx.complex = complex;
    ctx.k0 = profile.regular->first;
    ctx.k1 = profile.regular->second;
    ctx.g0 = underlying_graph(complex);
    ctx.g0_spectrum = normalized_spectrum(ctx.g0);
    ctx.lambda2 = ctx.g0_spectrum.lambda2;
    if (!(ctx.lambda2 < 0.5)) {
        throw DomainError("lemma audits need lambda2(G0) < 1/2, got " + std::to_string(ctx.lambda2));
    }
    ctx.g1 = edge_graph(complex);
    ctx.z1 = cocycle_space(complex, 1);
    ctx.certificate = certify_exact(complex, max_bits);
    ctx.eta = fatness_constant(ctx.lambda2);

    const int n = complex.vertex_count();
    ctx.large_cuts_precondition = n + kAuditSlack >= vertex_bound_threshold(ctx.lambda2);
    const Rational& mu = ctx.certificate.mu;
    ctx.non_expanding_precondition =
        static_cast<__int128>(n) * mu.num() >= static_cast<__int128>(3) * mu.den();
    return ctx;
}

DistanceFormulaAudit distance_formula_audit(const AuditContext& context, const Chain& edges) {
    const Complex2& x = context.complex;
    check_chain(x, edges);
    DistanceFormulaAudit audit;
    audit.proper_nonempty = edges.size() > 0 && edges.size() < x.edge_count();
    audit.preconditions_met = context.preconditions_met();
    audit.asserted = audit.proper_nonempty && audit.preconditions_met;
    if (!audit.proper_nonempty) {
        audit.note = "F must be a proper nonempty edge set; reported informationally";
    } else if (!audit.preconditions_met) {
        audit.note = "size preconditions not met; reported informationally";
    }

    audit.all_equal = true;
    for (int v = 0; v < x.vertex_count(); ++v) {
        const Chain view = local_view(x, edges, v);
        VertexDistance row;
        row.vertex = v;
        row.local_size = view.size();
        row.distance = distance_to_space(view, context.z1).distance;
        row.formula = std::min(row.local_size, context.k0 - row.local_size);
        audit.all_equal = audit.all_equal && row.equal();
        audit.vertices.push_back(row);
    }
    return audit;
}

LocalViewBoundsAudit local_view_bounds_audit(const AuditContext& context, const Chain& edges,
                                             const Rational& epsilon, double eta, double slack) {
    const Complex2& x = context.complex;
    const FatnessPartition partition = fatness_partition(x, edges, eta);
    LocalViewBoundsAudit audit;
    audit.preconditions_met = context.preconditions_met();
    const double eps = epsilon.to_double();

    for (int v = 0; v < x.vertex_count(); ++v) {
        const Fatness f = partition.of(v);
        if (f == Fatness::fat) continue;
        VertexBound row;
        row.vertex = v;
        row.fatness = f;
        row.local_size = partition.local_sizes[static_cast<std::size_t>(v)];
        row.coboundary_size = coboundary_edges(x, local_view(x, edges, v)).size();
        if (f == Fatness::semi_fat) {
            row.bound = eps * context.k1 * (1.0 - eta) * context.k0;
            row.holds = row.coboundary_size >= row.bound - slack;
        } else {
            row.bound = eps * context.k1 * row.local_size;
            // Both sides rational: |delta| * den >= num * k1 * |F_v|.
            row.holds = static_cast<__int128>(row.coboundary_size) * epsilon.den() >=
                        static_cast<__int128>(epsilon.num()) * context.k1 * row.local_size;
        }
        audit.all_hold = audit.all_hold && row.holds;
        audit.vertices.push_back(row);
    }
    return audit;
}

SumCoboundariesAudit sum_coboundaries_audit(const AuditContext& context, const Chain& edges,
                                            const Rational& epsilon, double slack) {
    const Complex2& x = context.complex;
    check_chain(x, edges);
    if (2 * edges.size() > x.edge_count()) {
        throw DomainError("sum-of-coboundaries bound needs |F| <= |E|/2");
    }
    SumCoboundariesAudit audit;
    audit.lhs = local_coboundary_sum(x, edges);
    audit.rhs = epsilon.to_double() * context.k1 / 4.0 * coboundary_bracket(context.lambda2) *
                edges.size();
    audit.passes = static_cast<double>(audit.lhs) >= audit.rhs - slack;
    return audit;
}

}  // namespace hdx
