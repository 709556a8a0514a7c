#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numeric>

#include "hdx/complex.hpp"
#include "hdx/error.hpp"
#include "hdx/spectral.hpp"
#include "hdx/symmetric_eigen.hpp"
#include "oracles.hpp"

using namespace hdx;

namespace {

void check_spectrum(const Graph& g, std::vector<double> expected) {
    const SpectralReport s = normalized_spectrum(g);
    std::sort(expected.begin(), expected.end(), std::greater<>());
    REQUIRE(s.normalized_eigenvalues.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(std::abs(s.normalized_eigenvalues[i] - expected[i]) <= 1e-9);
    }
}

// Regular graphs with at most 8 vertices for the characteristic-polynomial check.
std::vector<Graph> small_regular_graphs() {
    std::vector<Graph> out;
    for (int n = 2; n <= 8; ++n) out.push_back(complete_graph(n));
    for (int n = 3; n <= 8; ++n) out.push_back(cycle_graph(n));
    out.push_back(oracle::octahedron_graph());
    for (int n = 4; n <= 5; ++n) out.push_back(edge_graph(complete_complex(n)).graph);
    out.push_back(edge_graph(oracle::octahedron_sphere()).graph);
    // Complements of cycles.
    for (int n = 5; n <= 8; ++n) {
        std::vector<Edge> e;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 2; v < n; ++v) {
                if (!(u == 0 && v == n - 1)) e.push_back({u, v});
            }
        }
        out.emplace_back(n, e);
    }
    // Cube graph.
    std::vector<Edge> cube;
    for (int u = 0; u < 8; ++u) {
        for (int b = 0; b < 3; ++b) {
            const int v = u ^ (1 << b);
            if (u < v) cube.push_back({u, v});
        }
    }
    out.emplace_back(8, cube);
    return out;
}

struct EnvGuard {
    explicit EnvGuard(const char* value) { setenv("HDX_THREADS", value, 1); }
    ~EnvGuard() { unsetenv("HDX_THREADS"); }
};

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("graph construction rejects loops, parallel edges and bad ids") {
    CHECK_THROWS_AS(Graph(3, std::vector<Edge>{{1, 1}}), DomainError);
    CHECK_THROWS_AS(Graph(3, std::vector<Edge>{{0, 1}, {1, 0}}), DomainError);
    CHECK_THROWS_AS(Graph(3, std::vector<Edge>{{0, 3}}), DomainError);
    const Graph g(3, std::vector<Edge>{{2, 0}, {1, 0}});
    CHECK(g.neighbors(0).size() == 2);
    CHECK(g.neighbors(0)[0] == 1);
    CHECK_FALSE(g.regular_degree());
}

TEST_CASE("normalized spectra of named graphs") {
    check_spectrum(complete_graph(4), {1, -1.0 / 3, -1.0 / 3, -1.0 / 3});
    check_spectrum(complete_graph(5), {1, -0.25, -0.25, -0.25, -0.25});
    check_spectrum(cycle_graph(4), {1, 0, 0, -1});
    check_spectrum(cycle_graph(6), {1, 0.5, 0.5, -0.5, -0.5, -1});
    check_spectrum(oracle::octahedron_graph(), {1, 0, 0, 0, -0.5, -0.5});
    check_spectrum(edge_graph(complete_complex(5)).graph,
                   {1, 1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6, -1.0 / 3, -1.0 / 3, -1.0 / 3, -1.0 / 3, -1.0 / 3});
}

TEST_CASE("spectral report fields") {
    const SpectralReport s = normalized_spectrum(cycle_graph(6));
    CHECK(s.degree == 2);
    CHECK(std::abs(s.lambda2 - 0.5) < 1e-9);
    CHECK(std::abs(s.lambda_n + 1) < 1e-9);
    CHECK(std::abs(s.lambda_max_nontrivial - 1) < 1e-9);
    CHECK(std::abs(s.spectral_gap() - 0.5) < 1e-9);
    CHECK(s.tolerance <= 1e-9);
}

TEST_CASE("eigenvalues agree with characteristic polynomial sign changes") {
    for (const Graph& g : small_regular_graphs()) {
        const SpectralReport s = normalized_spectrum(g);
        std::vector<double> raw;
        for (double x : s.normalized_eigenvalues) raw.push_back(x * s.degree);
        CHECK(oracle::sign_changes_match(g, raw));
    }
}

TEST_CASE("trace identities: sum 0, sum of squares n/k") {
    for (const Graph& g : small_regular_graphs()) {
        const SpectralReport s = normalized_spectrum(g);
        double sum = 0;
        double squares = 0;
        for (double x : s.normalized_eigenvalues) {
            sum += x;
            squares += x * x;
        }
        CHECK(std::abs(sum) < 1e-9);
        CHECK(std::abs(squares - static_cast<double>(g.vertex_count()) / s.degree) < 1e-9);
        CHECK(std::abs(s.normalized_eigenvalues.front() - 1) < 1e-9);
        CHECK(std::is_sorted(s.normalized_eigenvalues.rbegin(), s.normalized_eigenvalues.rend()));
    }
}

TEST_CASE("non-regular and degree-zero graphs are refused") {
    const Graph path(3, std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS(normalized_spectrum(path), RegularityError);
    CHECK_THROWS_AS(normalized_spectrum(Graph(3, std::vector<Edge>{})), RegularityError);
    CHECK_THROWS_AS(cheeger_exhaustive(path), RegularityError);
    CHECK_THROWS_AS(mixing_lemma_audit(path), RegularityError);
}

TEST_CASE("Jacobi solver on a dense symmetric matrix") {
    // Eigenvalues of [[2,1,0],[1,2,1],[0,1,2]] are 2 + sqrt(2), 2, 2 - sqrt(2).
    const std::vector<double> a = {2, 1, 0, 1, 2, 1, 0, 1, 2};
    const EigenResult r = symmetric_eigenvalues(a, 3);
    REQUIRE(r.values.size() == 3);
    CHECK(std::abs(r.values[0] - (2 + std::sqrt(2.0))) < 1e-12);
    CHECK(std::abs(r.values[1] - 2) < 1e-12);
    CHECK(std::abs(r.values[2] - (2 - std::sqrt(2.0))) < 1e-12);
    const std::vector<double> asym = {1, 2, 0, 1};
    CHECK_THROWS(symmetric_eigenvalues(asym, 2));
}

TEST_CASE("edge graph of K4 is the octahedron") {
    const EdgeGraphMap m = edge_graph(complete_complex(4));
    CHECK(m.graph.vertex_count() == 6);
    CHECK(m.graph.regular_degree() == 4);
    // Edges {0,1} and {2,3} share no triangle.
    const Complex2 x = complete_complex(4);
    CHECK_FALSE(m.graph.adjacent(*x.find_edge(0, 1), *x.find_edge(2, 3)));
    CHECK(m.graph.adjacent(*x.find_edge(0, 1), *x.find_edge(1, 2)));
    for (int i = 0; i < 6; ++i) {
        CHECK(m.to_edge[static_cast<std::size_t>(i)] == i);
        CHECK(m.from_edge[static_cast<std::size_t>(i)] == i);
    }
}

TEST_CASE("edge graph only joins edges spanning a triangle") {
    // Two triangles sharing vertex 0 but no edge: edges {1,0} and {0,3} meet
    // at a vertex yet are not adjacent in G1.
    const std::vector<Triangle> t = {{0, 1, 2}, {0, 3, 4}};
    const Complex2 x = build_from_triangles(t);
    const EdgeGraphMap m = edge_graph(x);
    CHECK_FALSE(m.graph.adjacent(*x.find_edge(0, 1), *x.find_edge(0, 3)));
    CHECK(m.graph.edge_count() == 6);
}

TEST_CASE("Cheeger constants are exact and match the oracle") {
    CHECK(cheeger_exhaustive(complete_graph(4)).h_normalized == Rational(2, 3));
    CHECK(cheeger_exhaustive(oracle::octahedron_graph()).h_normalized == Rational(1, 2));
    CHECK(cheeger_exhaustive(cycle_graph(4)).h_normalized == Rational(1, 2));
    for (const Graph& g : small_regular_graphs()) {
        const CheegerResult c = cheeger_exhaustive(g);
        const oracle::Ratio o = oracle::cheeger(g);
        CHECK(c.h_normalized == o.value);
        CHECK(c.witness == oracle::members(o.witness));
    }
}

TEST_CASE("Cheeger enumeration does not depend on the thread count") {
    const Graph g = cycle_graph(18);
    CheegerResult one;
    CheegerResult many;
    {
        EnvGuard env("1");
        one = cheeger_exhaustive(g);
    }
    {
        EnvGuard env("4");
        many = cheeger_exhaustive(g);
    }
    CHECK(one.h_normalized == many.h_normalized);
    CHECK(one.witness == many.witness);
    CHECK(one.h_normalized == Rational(2, 18));
    CHECK(one.witness == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8});
}

TEST_CASE("Cheeger enumeration limits") {
    CHECK_THROWS_AS(cheeger_exhaustive(cycle_graph(30)), CapacityError);
    CHECK_THROWS_AS(cheeger_exhaustive(complete_graph(1)), RegularityError);
}

TEST_CASE("mixing lemma audit as stated") {
    for (const Graph& g : {cycle_graph(4), cycle_graph(6), oracle::octahedron_graph(),
                           edge_graph(complete_complex(5)).graph}) {
        CHECK(mixing_lemma_audit(g).passes);
    }
    // With lambda2 < 0 the one-sided bound is violated, e.g. by S = V on K4:
    // 2|E| = 12 against 3 * 4 * (1 - 1/3) = 8.
    const MixingAudit k4 = mixing_lemma_audit(complete_graph(4));
    CHECK_FALSE(k4.passes);
    CHECK(std::abs(k4.max_residual - 4) < 1e-9);
    CHECK(k4.witness == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("Cheeger inequality audit holds on the corpus") {
    for (const Graph& g : {complete_graph(4), complete_graph(5), cycle_graph(4), cycle_graph(6),
                           oracle::octahedron_graph(), edge_graph(complete_complex(5)).graph}) {
        const CheegerInequalityAudit a = cheeger_inequality_audit(g);
        CHECK(a.passes);
        CHECK(a.slack >= -1e-9);
    }
}

TEST_CASE("edge graph floor holds for complete complexes") {
    for (int n = 4; n <= 7; ++n) {
        const EdgeGraphFloorAudit a = edge_graph_floor_audit(complete_complex(n));
        CHECK(a.passes);
        CHECK(a.lambda_n >= -17.0 / 18 - 1e-9);
    }
    const std::vector<Triangle> t = {{0, 1, 2}};
    const std::vector<Edge> pendant = {{2, 3}};
    CHECK_THROWS_AS(edge_graph_floor_audit(build_from_triangles(t, pendant)), RegularityError);
}

}
