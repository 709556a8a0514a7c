#include "hdx/cli.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iterator>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "hdx/cochain.hpp"
#include "hdx/complex.hpp"
#include "hdx/complex_io.hpp"
#include "hdx/error.hpp"
#include "hdx/expansion.hpp"
#include "hdx/rng.hpp"
#include "hdx/spectral.hpp"
#include "hdx/walk.hpp"

namespace hdx::cli {

using Json = nlohmann::ordered_json;

std::string file_sha256(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 digest failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < length; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xF];
    }
    return out;
}

namespace {

enum class Status { pass, fail, not_applicable, error };

const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::not_applicable: return "not-applicable";
        case Status::error: return "error";
    }
    return "error";
}

// fail dominates, then pass; all not-applicable stays not-applicable.
Status combine(const std::vector<Status>& parts) {
    if (std::find(parts.begin(), parts.end(), Status::fail) != parts.end()) return Status::fail;
    if (std::find(parts.begin(), parts.end(), Status::pass) != parts.end()) return Status::pass;
    return Status::not_applicable;
}

struct Options {
    bool strict = false;
    std::string file;
    std::string output;
    int n = 4;
    double p = 0.5;
    std::uint64_t seed = 0;
    std::string graph = "g0";
    double tol = kEigenTolerance;
    int dim = 1;
    int max_bits = kCertifyMaxBits;
    int max_vertices = kCheegerMaxVertices;
    std::string lemma = "all";
    std::uint64_t samples = 1000;
    int exhaustive_bits = 12;
    double slack = kAuditSlack;
    int start = 0;
    int steps = 10;
    bool exact = false;
    std::uint64_t paths = 0;
};

struct Report {
    Json command;
    Json inputs = Json::array();
    Json results = Json::object();
    Status status = Status::pass;

    Json document() const {
        Json doc;
        doc["command"] = command;
        doc["inputs"] = inputs;
        doc["results"] = results;
        doc["status"] = status_name(status);
        return doc;
    }
};

Complex2 load(const std::string& path, Report& report) {
    report.inputs.push_back({{"path", path}, {"sha256", file_sha256(path)}});
    return read_complex(path);
}

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Json chains_json(const std::vector<Chain>& chains) {
    Json out = Json::array();
    for (const Chain& c : chains) out.push_back(c.members());
    return out;
}

Json certificate_json(const ExpansionCertificate& cert) {
    Json dims = Json::array();
    for (const DimensionCertificate& d : cert.dimensions) {
        dims.push_back({
            {"dimension", d.dimension},
            {"faces", d.faces},
            {"degree", d.degree},
            {"cocycle_rank", d.cocycle_rank},
            {"coboundary_rank", d.coboundary_rank},
            {"epsilon_cosystolic", d.epsilon_cosystolic.to_string()},
            {"cosystolic_witness", d.cosystolic_witness},
            {"epsilon_coboundary", d.epsilon_coboundary.to_string()},
            {"coboundary_witness", d.coboundary_witness},
            {"mu", d.mu ? Json(d.mu->to_string()) : Json(nullptr)},
            {"mu_witness", d.mu_witness},
        });
    }
    return {
        {"k0", cert.k0},
        {"k1", cert.k1},
        {"connected", cert.connected},
        {"epsilon_cosystolic", cert.epsilon_cosystolic.to_string()},
        {"epsilon_coboundary", cert.epsilon_coboundary.to_string()},
        {"mu", cert.mu.to_string()},
        {"mu_vacuous", cert.mu_vacuous},
        {"dimensions", dims},
    };
}

Graph select_graph(const Complex2& x, const std::string& which) {
    return which == "g1" ? edge_graph(x).graph : underlying_graph(x);
}

// ---- gen / validate / spectrum / cheeger / cocycles / certify ----------------

void emit_generated(const Complex2& x, const Options& o, Report& report, std::ostream& out,
                    bool& raw) {
    if (o.output.empty()) {
        out << serialize(x);
        raw = true;
        return;
    }
    write_complex(x, o.output);
    report.results = {
        {"path", o.output},
        {"sha256", file_sha256(o.output)},
        {"vertices", x.vertex_count()},
        {"edges", x.edge_count()},
        {"triangles", x.triangle_count()},
    };
}

void cmd_validate(const Options& o, Report& report) {
    const Complex2 x = load(o.file, report);
    const ValidationReport v = validate(x);
    const DegreeProfile d = degree_profile(x);
    Json regular = nullptr;
    if (d.regular) regular = {{"k0", d.regular->first}, {"k1", d.regular->second}};
    report.results = {
        {"vertices", x.vertex_count()},
        {"edges", x.edge_count()},
        {"triangles", x.triangle_count()},
        {"valid", v.valid()},
        {"findings", v.findings},
        {"vertex_edge_degrees", d.vertex_edge_degrees},
        {"edge_triangle_degrees", d.edge_triangle_degrees},
        {"regular", regular},
        {"connected", underlying_graph(x).is_connected()},
    };
    report.status = v.valid() ? Status::pass : Status::error;
}

void cmd_spectrum(const Options& o, Report& report) {
    const Complex2 x = load(o.file, report);
    const Graph g = select_graph(x, o.graph);
    const SpectralReport s = normalized_spectrum(g, o.tol);
    report.results = {
        {"graph", o.graph},
        {"vertices", g.vertex_count()},
        {"degree", s.degree},
        {"eigenvalues", s.normalized_eigenvalues},
        {"lambda2", s.lambda2},
        {"lambda_n", s.lambda_n},
        {"lambda_max_nontrivial", s.lambda_max_nontrivial},
        {"spectral_gap", s.spectral_gap()},
        {"error_bound", s.tolerance},
    };
}

void cmd_cheeger(const Options& o, Report& report) {
    const Complex2 x = load(o.file, report);
    const Graph g = select_graph(x, o.graph);
    const CheegerResult c = cheeger_exhaustive(g, o.max_vertices);
    report.results = {
        {"graph", o.graph},
        {"vertices", g.vertex_count()},
        {"degree", *g.regular_degree()},
        {"h", c.h_normalized.to_string()},
        {"h_value", c.h_normalized.to_double()},
        {"witness", c.witness},
    };
}

void cmd_cocycles(const Options& o, Report& report) {
    const Complex2 x = load(o.file, report);
    const CodeSpace z = cocycle_space(x, o.dim);
    const CodeSpace b = coboundary_space(x, o.dim);
    report.results = {
        {"dimension", o.dim},
        {"faces", x.face_count(o.dim)},
        {"cocycles", {{"rank", z.rank()}, {"basis", chains_json(z.basis)}}},
        {"coboundaries", {{"rank", b.rank()}, {"basis", chains_json(b.basis)}}},
        {"quotient_rank", z.rank() - b.rank()},
    };
}

void cmd_certify(const Options& o, Report& report) {
    const Complex2 x = load(o.file, report);
    report.results = certificate_json(certify_exact(x, o.max_bits));
}

// ---- audit ------------------------------------------------------------------

// Edge sets to audit: every subset of size <= max_size when |E| is within the
// exhaustive budget, otherwise `samples` seeded draws. Draw j uses
// derive_seed(seed, j): a size uniform in [0, max_size], then a partial
// Fisher-Yates shuffle of the edge indices.
std::vector<Chain> edge_sets(int m, int max_size, const Options& o, bool& exhaustive) {
    std::vector<Chain> sets;
    exhaustive = m <= std::min(o.exhaustive_bits, 20);
    if (exhaustive) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            if (std::popcount(mask) <= max_size) sets.push_back(Chain::from_mask(1, mask));
        }
        return sets;
    }
    std::vector<int> order(static_cast<std::size_t>(m));
    for (std::uint64_t j = 0; j < o.samples; ++j) {
        SplitMix64 rng(derive_seed(o.seed, j));
        std::iota(order.begin(), order.end(), 0);
        const auto size = static_cast<std::size_t>(rng.uniform_index(static_cast<std::uint64_t>(max_size) + 1));
        for (std::size_t i = 0; i < size; ++i) {
            const auto pick = i + static_cast<std::size_t>(rng.uniform_index(order.size() - i));
            std::swap(order[i], order[pick]);
        }
        sets.emplace_back(1, std::vector<int>(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(size)));
    }
    return sets;
}

constexpr std::size_t kMaxViolations = 5;

struct LemmaOutcome {
    Status status = Status::not_applicable;
    Json body = Json::object();
};

LemmaOutcome not_applicable(const std::string& reason) {
    LemmaOutcome r;
    r.body["reason"] = reason;
    return r;
}

void add_violation(Json& list, Json item) {
    if (list.size() < kMaxViolations) list.push_back(std::move(item));
}

LemmaOutcome audit_outgoing(const Complex2& x, const Options& o) {
    bool exhaustive = false;
    const auto sets = edge_sets(x.edge_count(), x.edge_count(), o, exhaustive);
    const EdgeGraphMap g1 = edge_graph(x);
    LemmaOutcome r;
    Json violations = Json::array();
    std::size_t failed = 0;
    for (const Chain& f : sets) {
        const OutgoingEdgesCheck c = outgoing_edges_identity(x, g1, f);
        if (!c.holds()) {
            ++failed;
            add_violation(violations, {{"F", f.members()}, {"lhs", c.lhs}, {"rhs", c.rhs}});
        }
    }
    r.status = failed ? Status::fail : Status::pass;
    r.body = {{"exhaustive", exhaustive}, {"checked", sets.size()}, {"failed", failed},
              {"violations", violations}};
    return r;
}

LemmaOutcome audit_large_cuts(const AuditContext& ctx) {
    const LargeCutsAudit a = large_cuts_audit(ctx.g0);
    LemmaOutcome r;
    r.status = a.precondition_met ? (a.holds ? Status::pass : Status::fail) : Status::not_applicable;
    r.body = {{"k", a.k}, {"min_cut", a.min_cut}, {"witness", a.witness}, {"lambda2", a.lambda2},
              {"vertex_threshold", 4.0 / (1.0 - 2.0 * a.lambda2)},
              {"precondition_met", a.precondition_met}, {"holds", a.holds}};
    return r;
}

LemmaOutcome audit_distance(const AuditContext& ctx, const Options& o) {
    bool exhaustive = false;
    const auto sets = edge_sets(ctx.complex.edge_count(), ctx.complex.edge_count(), o, exhaustive);
    std::size_t asserted = 0;
    std::size_t failed = 0;
    std::size_t informational_mismatches = 0;
    Json violations = Json::array();
    for (const Chain& f : sets) {
        const DistanceFormulaAudit a = distance_formula_audit(ctx, f);
        if (a.asserted) ++asserted;
        if (a.all_equal) continue;
        if (!a.asserted) {
            ++informational_mismatches;
            continue;
        }
        ++failed;
        Json rows = Json::array();
        for (const VertexDistance& v : a.vertices) {
            if (!v.equal()) {
                rows.push_back({{"vertex", v.vertex}, {"distance", v.distance}, {"formula", v.formula}});
            }
        }
        add_violation(violations, {{"F", f.members()}, {"vertices", rows}});
    }
    LemmaOutcome r;
    r.status = asserted == 0 ? Status::not_applicable : (failed ? Status::fail : Status::pass);
    r.body = {{"exhaustive", exhaustive}, {"checked", sets.size()}, {"asserted", asserted},
              {"failed", failed}, {"informational_mismatches", informational_mismatches},
              {"preconditions_met", ctx.preconditions_met()}, {"violations", violations}};
    return r;
}

LemmaOutcome audit_local_views(const AuditContext& ctx, const Options& o) {
    bool exhaustive = false;
    const auto sets = edge_sets(ctx.complex.edge_count(), ctx.complex.edge_count(), o, exhaustive);
    const Rational& eps = ctx.certificate.epsilon_cosystolic;
    std::size_t failed = 0;
    Json violations = Json::array();
    for (const Chain& f : sets) {
        const LocalViewBoundsAudit a = local_view_bounds_audit(ctx, f, eps, ctx.eta, o.slack);
        if (a.all_hold) continue;
        ++failed;
        Json rows = Json::array();
        for (const VertexBound& v : a.vertices) {
            if (!v.holds) {
                rows.push_back({{"vertex", v.vertex}, {"fatness", to_string(v.fatness)},
                                {"local_size", v.local_size}, {"coboundary", v.coboundary_size},
                                {"bound", v.bound}});
            }
        }
        add_violation(violations, {{"F", f.members()}, {"vertices", rows}});
    }
    LemmaOutcome r;
    const bool asserted = ctx.preconditions_met();
    r.status = asserted ? (failed ? Status::fail : Status::pass) : Status::not_applicable;
    r.body = {{"exhaustive", exhaustive}, {"checked", sets.size()}, {"epsilon", eps.to_string()},
              {"eta", ctx.eta}, {"preconditions_met", asserted}, {"failed", failed},
              {"violations", violations}};
    return r;
}

LemmaOutcome audit_sum(const AuditContext& ctx, const Options& o) {
    bool exhaustive = false;
    const int m = ctx.complex.edge_count();
    const auto sets = edge_sets(m, m / 2, o, exhaustive);
    const Rational& eps = ctx.certificate.epsilon_cosystolic;
    std::size_t failed = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    Json violations = Json::array();
    for (const Chain& f : sets) {
        const SumCoboundariesAudit a = sum_coboundaries_audit(ctx, f, eps, o.slack);
        min_slack = std::min(min_slack, static_cast<double>(a.lhs) - a.rhs);
        if (!a.passes) {
            ++failed;
            add_violation(violations, {{"F", f.members()}, {"lhs", a.lhs}, {"rhs", a.rhs}});
        }
    }
    LemmaOutcome r;
    r.status = failed ? Status::fail : Status::pass;
    r.body = {{"exhaustive", exhaustive}, {"checked", sets.size()}, {"epsilon", eps.to_string()},
              {"bracket", coboundary_bracket(ctx.lambda2)}, {"min_slack", min_slack},
              {"failed", failed}, {"violations", violations}};
    return r;
}

LemmaOutcome audit_mixing(const Complex2& x) {
    const Graph g0 = underlying_graph(x);
    if (!g0.regular_degree() || *g0.regular_degree() == 0) {
        return not_applicable("G0 is not regular with positive degree");
    }
    const MixingAudit a = mixing_lemma_audit(g0);
    LemmaOutcome r;
    r.status = a.passes ? Status::pass : Status::fail;
    r.body = {{"lambda2", a.lambda2}, {"max_residual", a.max_residual}, {"witness", a.witness},
              {"threshold", kMixingThreshold}};
    return r;
}

LemmaOutcome audit_cheeger(const Complex2& x, const Options& o) {
    const Graph g0 = underlying_graph(x);
    if (!g0.regular_degree() || *g0.regular_degree() == 0) {
        return not_applicable("G0 is not regular with positive degree");
    }
    const CheegerInequalityAudit a = cheeger_inequality_audit(g0, o.slack);
    LemmaOutcome r;
    r.status = a.passes ? Status::pass : Status::fail;
    r.body = {{"h", a.h_normalized.to_string()}, {"lambda2", a.lambda2}, {"slack", a.slack}};
    return r;
}

LemmaOutcome audit_floor(const Complex2& x, const Options& o) {
    const auto k1 = degree_profile(x).edge_regular();
    if (!k1 || *k1 == 0) {
        return not_applicable("edges do not all lie in the same positive number of triangles");
    }
    const EdgeGraphFloorAudit a = edge_graph_floor_audit(x, o.slack);
    LemmaOutcome r;
    r.status = a.passes ? Status::pass : Status::fail;
    r.body = {{"lambda_n", a.lambda_n}, {"floor", -17.0 / 18.0}, {"slack", a.slack}};
    return r;
}

const std::vector<std::string> kLemmas = {"outgoing", "large-cuts", "distance", "local-views",
                                          "sum",      "mixing",     "cheeger",  "floor"};

bool needs_context(const std::string& lemma) {
    return lemma == "large-cuts" || lemma == "distance" || lemma == "local-views" || lemma == "sum";
}

void cmd_audit(const Options& o, Report& report) {
    const Complex2 x = load(o.file, report);
    std::vector<std::string> lemmas;
    if (o.lemma == "all") {
        lemmas = kLemmas;
    } else {
        lemmas = {o.lemma};
    }

    std::optional<AuditContext> ctx;
    std::string ctx_reason;
    if (std::any_of(lemmas.begin(), lemmas.end(), needs_context)) {
        try {
            ctx = prepare_audit(x, o.max_bits);
        } catch (const RegularityError& e) {
            ctx_reason = e.what();
        } catch (const DomainError& e) {
            ctx_reason = e.what();
        } catch (const DegenerateError& e) {
            ctx_reason = e.what();
        }
    }
    if (ctx) {
        const Rational& mu = ctx->certificate.mu;
        report.results["context"] = {
            {"k0", ctx->k0},
            {"k1", ctx->k1},
            {"lambda2", ctx->lambda2},
            {"eta", ctx->eta},
            {"epsilon", ctx->certificate.epsilon_cosystolic.to_string()},
            {"mu", mu.to_string()},
            {"mu_vacuous", ctx->certificate.mu_vacuous},
            {"vertices", x.vertex_count()},
            {"vertex_threshold_spectral", 4.0 / (1.0 - 2.0 * ctx->lambda2)},
            {"vertex_threshold_mu", 3.0 / mu.to_double()},
            {"large_cuts_precondition", ctx->large_cuts_precondition},
            {"non_expanding_precondition", ctx->non_expanding_precondition},
        };
    } else if (!ctx_reason.empty()) {
        report.results["context"] = {{"reason", ctx_reason}};
    }

    Json list = Json::array();
    std::vector<Status> statuses;
    for (const std::string& lemma : lemmas) {
        LemmaOutcome r;
        if (needs_context(lemma) && !ctx) {
            r = not_applicable(ctx_reason);
        } else if (lemma == "outgoing") {
            r = audit_outgoing(x, o);
        } else if (lemma == "large-cuts") {
            r = audit_large_cuts(*ctx);
        } else if (lemma == "distance") {
            r = audit_distance(*ctx, o);
        } else if (lemma == "local-views") {
            r = audit_local_views(*ctx, o);
        } else if (lemma == "sum") {
            r = audit_sum(*ctx, o);
        } else if (lemma == "mixing") {
            r = audit_mixing(x);
        } else if (lemma == "cheeger") {
            r = audit_cheeger(x, o);
        } else {
            r = audit_floor(x, o);
        }
        Json entry = {{"lemma", lemma}, {"status", status_name(r.status)}};
        entry.update(r.body);
        list.push_back(std::move(entry));
        statuses.push_back(r.status);
    }
    report.results["lemmas"] = std::move(list);
    report.status = combine(statuses);
}

// ---- walk / verify-theorem ----------------------------------------------------

struct AlphaInfo {
    std::optional<double> alpha;
    std::string reason;
};

AlphaInfo walk_alpha(const Complex2& x, int max_bits) {
    const DegreeProfile d = degree_profile(x);
    if (!d.regular || d.regular->second == 0) {
        return {std::nullopt, "complex is not (k0, k1)-regular with k1 > 0"};
    }
    const double lambda2 = normalized_spectrum(underlying_graph(x)).lambda2;
    if (!(lambda2 < 0.5)) {
        return {std::nullopt, "lambda2(G0) >= 1/2"};
    }
    try {
        const ExpansionCertificate cert = certify_exact(x, max_bits);
        return {alpha_bound(cert.epsilon_cosystolic.to_double(), lambda2), ""};
    } catch (const CapacityError& e) {
        return {std::nullopt, e.what()};
    } catch (const DegenerateError& e) {
        return {std::nullopt, e.what()};
    }
}

int cmd_walk(const Options& o, const std::vector<std::string>& args, std::ostream& out) {
    const std::string digest = file_sha256(o.file);
    const Complex2 x = read_complex(o.file);
    if (o.start < 0 || o.start >= x.edge_count()) {
        throw DomainError("start edge " + std::to_string(o.start) + " out of range");
    }
    const AlphaInfo info = walk_alpha(x, o.max_bits);
    const EdgeGraphMap g1 = edge_graph(x);
    const int m = g1.graph.vertex_count();

    std::vector<double> distances;
    if (o.paths == 0) {
        const auto start = g1.from_edge[static_cast<std::size_t>(o.start)];
        distances = evolve_exact(g1.graph, Distribution::point_mass(m, start), o.steps).distances;
    } else {
        const auto counts = high_order_ensemble(x, o.start, o.steps, o.paths, o.seed);
        for (const auto& row : counts) {
            std::vector<double> p(row.size());
            for (std::size_t e = 0; e < row.size(); ++e) {
                p[static_cast<std::size_t>(g1.from_edge[e])] =
                    static_cast<double>(row[e]) / static_cast<double>(o.paths);
            }
            distances.push_back(Distribution(p).distance_to_uniform());
        }
    }

    std::ostringstream csv;
    bool all_ok = true;
    double power = 1.0;
    for (std::size_t i = 0; i < distances.size(); ++i) {
        csv << i << ',' << format_double(distances[i]) << ',';
        if (info.alpha) {
            const bool ok = distances[i] <= power + kBoundSlack;
            all_ok = all_ok && ok;
            csv << format_double(power) << ',' << (ok ? "true" : "false");
            power *= *info.alpha;
        } else {
            csv << ",";
        }
        csv << '\n';
    }

    // Monte Carlo traces are reported but never asserted: the empirical
    // distance carries sampling noise.
    Status status = Status::not_applicable;
    if (info.alpha) {
        status = o.paths == 0 ? (all_ok ? Status::pass : Status::fail) : Status::pass;
    }

    out << "# command: hdx";
    for (const std::string& a : args) out << ' ' << a;
    out << "\n# input: " << o.file << " sha256=" << digest << '\n';
    out << "# mode: " << (o.paths == 0 ? "exact" : "paths=" + std::to_string(o.paths))
        << " start=" << o.start << " steps=" << o.steps << " seed=" << o.seed << '\n';
    if (info.alpha) {
        out << "# alpha: " << format_double(*info.alpha) << '\n';
    } else {
        out << "# alpha: not-applicable (" << info.reason << ")\n";
    }
    out << "step,distance,alpha_power,ok\n" << csv.str();
    out << "# status: " << status_name(status) << '\n';
    if (status == Status::fail) return kExitFail;
    if (status == Status::not_applicable && o.strict) return kExitFail;
    return kExitPass;
}

void cmd_verify_theorem(const Options& o, Report& report) {
    const Complex2 x = load(o.file, report);
    Json& r = report.results;
    const DegreeProfile d = degree_profile(x);
    if (!d.regular || d.regular->second == 0) {
        r["reason"] = "complex is not (k0, k1)-regular with k1 > 0";
        report.status = Status::not_applicable;
        return;
    }
    r["k0"] = d.regular->first;
    r["k1"] = d.regular->second;
    const SpectralReport g0 = normalized_spectrum(underlying_graph(x), o.tol);
    r["lambda2_g0"] = g0.lambda2;
    if (!(g0.lambda2 < 0.5)) {
        r["reason"] = "lambda2(G0) >= 1/2";
        report.status = Status::not_applicable;
        return;
    }
    const ExpansionCertificate cert = certify_exact(x, o.max_bits);
    r["certificate"] = certificate_json(cert);
    const RapidMixingReport mix = rapid_mixing_audit(x, cert, o.steps, o.slack);
    if (!mix.applicable) {
        r["reason"] = mix.reason;
        report.status = Status::not_applicable;
        return;
    }
    std::vector<double> powers;
    double power = 1.0;
    for (int i = 0; i <= o.steps; ++i) {
        powers.push_back(power);
        power *= mix.alpha;
    }
    r["epsilon"] = cert.epsilon_cosystolic.to_string();
    r["alpha"] = mix.alpha;
    r["alpha_in_unit_interval"] = mix.alpha > 0.0 && mix.alpha < 1.0;
    r["lambda_g1"] = mix.lambda_g1;
    r["steps"] = o.steps;
    r["worst_distances"] = mix.worst_distances;
    r["worst_start"] = mix.worst_start;
    r["alpha_powers"] = powers;
    r["alpha_bound_holds"] = mix.passes;
    r["spectral_decay_holds"] = mix.spectral_decay_holds;
    report.status = mix.passes && mix.spectral_decay_holds ? Status::pass : Status::fail;
}

int exit_code(Status s, bool strict) {
    switch (s) {
        case Status::pass: return kExitPass;
        case Status::fail: return kExitFail;
        case Status::not_applicable: return strict ? kExitFail : kExitPass;
        case Status::error: return kExitUsage;
    }
    return kExitUsage;
}

std::string error_kind(const Error& e) {
    if (dynamic_cast<const CapacityError*>(&e)) return "capacity";
    if (dynamic_cast<const ParseError*>(&e)) return "parse";
    if (dynamic_cast<const InvalidFaceError*>(&e)) return "invalid-face";
    if (dynamic_cast<const DuplicateFaceError*>(&e)) return "duplicate-face";
    if (dynamic_cast<const RegularityError*>(&e)) return "regularity";
    if (dynamic_cast<const DegenerateError*>(&e)) return "degenerate";
    if (dynamic_cast<const UndefinedTransitionError*>(&e)) return "undefined-transition";
    if (dynamic_cast<const DimensionMismatchError*>(&e)) return "dimension-mismatch";
    if (dynamic_cast<const DomainError*>(&e)) return "domain";
    return "error";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Two-dimensional simplicial complexes: coboundary expansion, edge-graph "
                 "spectra and high-order random walks.",
                 "hdx"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--strict", o.strict, "Exit 1 when the result is not-applicable");

    auto* gen = app.add_subcommand("gen", "Generate a complex file");
    gen->require_subcommand(1);
    auto* gen_complete = gen->add_subcommand("complete", "All triangles on n vertices");
    gen_complete->add_option("--n", o.n, "Vertex count")->required()->check(CLI::Range(1, 64));
    gen_complete->add_option("-o,--output", o.output, "Write to this file instead of stdout");
    auto* gen_random = gen->add_subcommand("random", "Complete 1-skeleton, each triangle kept with probability p");
    gen_random->add_option("--n", o.n, "Vertex count")->required()->check(CLI::Range(1, 64));
    gen_random->add_option("--p", o.p, "Triangle probability")->required()->check(CLI::Range(0.0, 1.0));
    gen_random->add_option("--seed", o.seed, "PRNG seed")->required();
    gen_random->add_option("-o,--output", o.output, "Write to this file instead of stdout");

    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", o.file, "Complex file")->required();
    };

    auto* validate_cmd = app.add_subcommand("validate", "Check closure, duplicates and incidence");
    add_file(validate_cmd);

    auto* spectrum = app.add_subcommand("spectrum", "Normalized adjacency spectrum of G0 or G1");
    add_file(spectrum);
    spectrum->add_option("--graph", o.graph, "g0 (1-skeleton) or g1 (edge graph)")
        ->check(CLI::IsMember({"g0", "g1"}))->capture_default_str();
    spectrum->add_option("--tol", o.tol, "Off-diagonal norm tolerance")->capture_default_str();

    auto* cheeger = app.add_subcommand("cheeger", "Exact normalized Cheeger constant");
    add_file(cheeger);
    cheeger->add_option("--graph", o.graph, "g0 or g1")->required()->check(CLI::IsMember({"g0", "g1"}));
    cheeger->add_option("--max-vertices", o.max_vertices, "Enumeration limit")->capture_default_str();

    auto* cocycles = app.add_subcommand("cocycles", "Bases of Z^i and B^i");
    add_file(cocycles);
    cocycles->add_option("--dim", o.dim, "Face dimension")->required()->check(CLI::Range(0, 1));

    auto* certify = app.add_subcommand("certify", "Exhaustive expansion certificate");
    add_file(certify);
    certify->add_option("--max-bits", o.max_bits, "Largest |X(i)| enumerated")->capture_default_str();

    auto* audit = app.add_subcommand("audit", "Check the lemmas on this complex");
    add_file(audit);
    std::vector<std::string> lemma_choices = kLemmas;
    lemma_choices.emplace_back("all");
    audit->add_option("--lemma", o.lemma, "Which lemma")->check(CLI::IsMember(lemma_choices))->capture_default_str();
    audit->add_option("--samples", o.samples, "Random edge sets when |E| exceeds --exhaustive-bits")->capture_default_str();
    audit->add_option("--seed", o.seed, "Seed for sampled edge sets")->capture_default_str();
    audit->add_option("--exhaustive-bits", o.exhaustive_bits, "Enumerate all edge sets up to this |E| (at most 20)")->capture_default_str();
    audit->add_option("--max-bits", o.max_bits, "Certificate enumeration limit")->capture_default_str();
    audit->add_option("--slack", o.slack, "Absolute slack on real-valued sides")->capture_default_str();

    auto* walk = app.add_subcommand("walk", "High-order random walk from an edge, as CSV");
    add_file(walk);
    walk->add_option("--start", o.start, "Start edge index")->required();
    walk->add_option("--steps", o.steps, "Step count")->required()->check(CLI::NonNegativeNumber);
    walk->add_option("--seed", o.seed, "Seed for --paths")->capture_default_str();
    auto* exact_flag = walk->add_flag("--exact", o.exact, "Exact distribution evolution (default)");
    auto* paths_opt = walk->add_option("--paths", o.paths, "Monte Carlo with this many paths")
                          ->check(CLI::PositiveNumber);
    exact_flag->excludes(paths_opt);
    walk->add_option("--max-bits", o.max_bits, "Certificate enumeration limit for alpha")->capture_default_str();

    auto* verify = app.add_subcommand("verify-theorem", "Certificate, alpha and worst-case mixing in one report");
    add_file(verify);
    verify->add_option("--steps", o.steps, "Step count")->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--max-bits", o.max_bits, "Certificate enumeration limit")->capture_default_str();
    verify->add_option("--tol", o.tol, "Eigenvalue tolerance")->capture_default_str();
    verify->add_option("--slack", o.slack, "Bound slack")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
        out << target->help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n";
        const CLI::App* target = &app;
        while (!target->get_subcommands().empty()) target = target->get_subcommands().front();
        err << target->help();
        return kExitUsage;
    }

    Report report;
    Json options;
    const CLI::App* sub = app.get_subcommands().front();
    std::string name = sub->get_name();
    if (sub == gen) {
        const CLI::App* kind = gen->get_subcommands().front();
        name += " " + kind->get_name();
        options["n"] = o.n;
        if (kind == gen_random) {
            options["p"] = o.p;
            options["seed"] = o.seed;
        }
        options["output"] = o.output;
    } else {
        options["file"] = o.file;
        if (sub == spectrum) {
            options["graph"] = o.graph;
            options["tol"] = o.tol;
        } else if (sub == cheeger) {
            options["graph"] = o.graph;
            options["max_vertices"] = o.max_vertices;
        } else if (sub == cocycles) {
            options["dim"] = o.dim;
        } else if (sub == certify) {
            options["max_bits"] = o.max_bits;
        } else if (sub == audit) {
            options["lemma"] = o.lemma;
            options["samples"] = o.samples;
            options["seed"] = o.seed;
            options["exhaustive_bits"] = o.exhaustive_bits;
            options["max_bits"] = o.max_bits;
            options["slack"] = o.slack;
        } else if (sub == verify) {
            options["steps"] = o.steps;
            options["max_bits"] = o.max_bits;
            options["tol"] = o.tol;
            options["slack"] = o.slack;
        }
    }
    options["strict"] = o.strict;
    report.command = {{"name", name}, {"argv", args}, {"options", options}};

    try {
        bool raw = false;
        if (sub == gen) {
            const Complex2 x = gen->get_subcommands().front() == gen_complete
                                   ? complete_complex(o.n)
                                   : random_complex(o.n, o.p, o.seed);
            emit_generated(x, o, report, out, raw);
        } else if (sub == validate_cmd) {
            cmd_validate(o, report);
        } else if (sub == spectrum) {
            cmd_spectrum(o, report);
        } else if (sub == cheeger) {
            cmd_cheeger(o, report);
        } else if (sub == cocycles) {
            cmd_cocycles(o, report);
        } else if (sub == certify) {
            cmd_certify(o, report);
        } else if (sub == audit) {
            cmd_audit(o, report);
        } else if (sub == walk) {
            return cmd_walk(o, args, out);
        } else {
            cmd_verify_theorem(o, report);
        }
        if (!raw) out << report.document().dump(2) << '\n';
        if (report.status == Status::error) {
            err << "error: " << name << " found problems in " << o.file << '\n';
        }
        return exit_code(report.status, o.strict);
    } catch (const Error& e) {
        const bool capacity = dynamic_cast<const CapacityError*>(&e) != nullptr;
        report.status = Status::error;
        report.results = {{"error", {{"kind", error_kind(e)}, {"message", e.what()}}}};
        if (auto* c = dynamic_cast<const CapacityError*>(&e)) {
            report.results["error"]["requested"] = c->requested();
            report.results["error"]["threshold"] = c->threshold();
        }
        if (sub != walk) out << report.document().dump(2) << '\n';
        err << "error: " << e.what() << '\n';
        return capacity ? kExitCapacity : kExitUsage;
    }
}

}  // namespace hdx::cli
