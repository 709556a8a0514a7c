#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "hdx/complex.hpp"
#include "hdx/complex_io.hpp"
#include "hdx/error.hpp"
#include "hdx/rng.hpp"
#include "oracles.hpp"

using namespace hdx;

TEST_SUITE("complex") {

TEST_CASE("complete complexes have binomial face counts and (n-1, n-2) degrees") {
    for (int n = 3; n <= 7; ++n) {
        const Complex2 x = complete_complex(n);
        CHECK(x.vertex_count() == n);
        CHECK(x.edge_count() == n * (n - 1) / 2);
        CHECK(x.triangle_count() == n * (n - 1) * (n - 2) / 6);
        const DegreeProfile d = degree_profile(x);
        REQUIRE(d.regular);
        CHECK(d.regular->first == n - 1);
        CHECK(d.regular->second == n - 2);
        CHECK(validate(x).valid());
    }
}

TEST_CASE("triangles pull in their edges") {
    const std::vector<Triangle> t = {{2, 0, 1}};
    const Complex2 x = build_from_triangles(t);
    CHECK(x.vertex_count() == 3);
    REQUIRE(x.edge_count() == 3);
    CHECK(x.edge(0) == Edge{0, 1});
    CHECK(x.edge(1) == Edge{0, 2});
    CHECK(x.edge(2) == Edge{1, 2});
    CHECK(x.triangle(0) == Triangle{0, 1, 2});
    CHECK(x.triangle_edges(0) == std::array<int, 3>{0, 1, 2});
}

TEST_CASE("face order does not depend on input order") {
    const std::vector<Triangle> a = {{0, 1, 2}, {1, 2, 3}, {0, 2, 3}};
    const std::vector<Triangle> b = {{3, 2, 0}, {2, 1, 0}, {3, 1, 2}};
    CHECK(build_from_triangles(a) == build_from_triangles(b));
}

TEST_CASE("malformed faces are rejected") {
    const std::vector<Triangle> repeated = {{0, 0, 1}};
    CHECK_THROWS_AS(build_from_triangles(repeated), InvalidFaceError);
    const std::vector<Triangle> negative = {{-1, 0, 1}};
    CHECK_THROWS_AS(build_from_triangles(negative), InvalidFaceError);
    const std::vector<Edge> loop = {{2, 2}};
    CHECK_THROWS_AS(build_from_triangles({}, loop), InvalidFaceError);
}

TEST_CASE("duplicate faces are rejected, induced edges listed again are not") {
    const std::vector<Triangle> twice = {{0, 1, 2}, {2, 1, 0}};
    CHECK_THROWS_AS(build_from_triangles(twice), DuplicateFaceError);
    const std::vector<Edge> edge_twice = {{3, 4}, {4, 3}};
    CHECK_THROWS_AS(build_from_triangles({}, edge_twice), DuplicateFaceError);

    const std::vector<Triangle> t = {{0, 1, 2}};
    const std::vector<Edge> induced = {{1, 0}, {2, 3}};
    const Complex2 x = build_from_triangles(t, induced);
    CHECK(x.edge_count() == 4);
    CHECK(x.vertex_count() == 4);
}

TEST_CASE("isolated vertices come from gaps and min_vertices") {
    const std::vector<Triangle> t = {{0, 1, 4}};
    const Complex2 x = build_from_triangles(t, {}, 7);
    CHECK(x.vertex_count() == 7);
    CHECK(x.edges_at(2).empty());
    CHECK(x.edges_at(6).empty());
    CHECK_FALSE(degree_profile(x).regular);
}

TEST_CASE("degree profile of a non-regular complex") {
    const std::vector<Triangle> t = {{0, 1, 2}};
    const std::vector<Edge> pendant = {{2, 3}};
    const Complex2 x = build_from_triangles(t, pendant);
    const DegreeProfile d = degree_profile(x);
    CHECK(d.vertex_edge_degrees == std::vector<int>{2, 2, 3, 1});
    CHECK(d.edge_triangle_degrees == std::vector<int>{1, 1, 1, 0});
    CHECK_FALSE(d.regular);
    CHECK_FALSE(d.edge_regular());
    CHECK_FALSE(d.vertex_regular());
}

TEST_CASE("empty complex") {
    const Complex2 x = build_from_triangles({});
    CHECK(x.vertex_count() == 0);
    CHECK_FALSE(degree_profile(x).regular);
    CHECK(validate(x).valid());
}

TEST_CASE("validate reports closure and incidence problems on unchecked input") {
    const Complex2 open = Complex2::from_faces_unchecked(3, {{0, 1}, {0, 2}}, {{0, 1, 2}});
    const ValidationReport r = validate(open);
    REQUIRE_FALSE(r.valid());
    CHECK(std::any_of(r.findings.begin(), r.findings.end(),
                      [](const std::string& f) { return f.find("closure") != std::string::npos; }));

    const Complex2 out_of_range = Complex2::from_faces_unchecked(2, {{0, 1}, {1, 5}}, {});
    CHECK_FALSE(validate(out_of_range).valid());

    const Complex2 unsorted = Complex2::from_faces_unchecked(3, {{1, 2}, {0, 1}}, {});
    CHECK_FALSE(validate(unsorted).valid());
}

TEST_CASE("stored incidence matches a rebuild on random complexes") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Complex2 x = random_complex(4 + static_cast<int>(seed % 5), 0.5, seed);
        CHECK(x.stored_incidence() == x.rebuild_incidence());
        CHECK(validate(x).valid());
        for (int t = 0; t < x.triangle_count(); ++t) {
            const auto& [a, b, c] = x.triangle(t);
            CHECK(x.find_triangle(c, a, b) == t);
            CHECK(x.find_edge(b, a).has_value());
        }
    }
}

TEST_CASE("random complexes are seeded and respect p in {0, 1}") {
    CHECK(random_complex(7, 0.4, 11) == random_complex(7, 0.4, 11));
    CHECK(random_complex(6, 0.0, 3).triangle_count() == 0);
    CHECK(random_complex(6, 0.0, 3).edge_count() == 15);
    CHECK(random_complex(6, 1.0, 3) == complete_complex(6));
    CHECK_THROWS_AS(random_complex(5, 1.5, 0), DomainError);
    CHECK_THROWS_AS(random_complex(5, -0.1, 0), DomainError);

    // Triangles are drawn in lex order with one uniform01 per triangle.
    SplitMix64 rng(5);
    std::vector<Triangle> expected;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c)
                if (rng.uniform01() < 0.3) expected.push_back({a, b, c});
    const Complex2 x = random_complex(6, 0.3, 5);
    CHECK(std::vector<Triangle>(x.triangles().begin(), x.triangles().end()) == expected);
}

TEST_CASE("serialization round-trips faces and labels") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Complex2 x = random_complex(3 + static_cast<int>(seed % 6), 0.5, seed);
        CHECK(parse_complex(serialize(x)) == x);
    }
    const std::vector<Triangle> t = {{0, 1, 2}};
    const Complex2 named = build_from_triangles(t, {}, 4, {"a", "b", "c", "d"});
    const Complex2 back = parse_complex(serialize(named));
    CHECK(back == named);
    CHECK(back.labels()[3] == "d");
}

TEST_CASE("string labels get dense ids in order of first appearance") {
    const Complex2 x = parse_complex(R"({"edges": [["q", "p"]], "triangles": [["p", "r", "s"]]})");
    CHECK(x.vertex_count() == 4);
    CHECK(x.labels() == std::vector<std::string>{"q", "p", "r", "s"});
    CHECK(x.find_triangle(1, 2, 3).has_value());
    CHECK(x.find_edge(0, 1).has_value());
}

TEST_CASE("labels map keeps integer ids") {
    const Complex2 x = parse_complex(R"({"triangles": [[0, 1, 2]], "labels": {"0": "x", "2": "z"}})");
    CHECK(x.labels() == std::vector<std::string>{"x", "1", "z"});
}

TEST_CASE("malformed documents raise ParseError") {
    CHECK_THROWS_AS(parse_complex("{"), ParseError);
    CHECK_THROWS_AS(parse_complex("[1, 2]"), ParseError);
    CHECK_THROWS_AS(parse_complex(R"({"triangles": [[0, 1]]})"), ParseError);
    CHECK_THROWS_AS(parse_complex(R"({"triangles": 3})"), ParseError);
    CHECK_THROWS_AS(parse_complex(R"({"triangles": [[0, 1, 2.5]]})"), ParseError);
    CHECK_THROWS_AS(read_complex("/nonexistent/k4.complex"), ParseError);
    CHECK_THROWS_AS(parse_complex(R"({"triangles": [[0, 1, 2], [1, 2, 0]]})"), DuplicateFaceError);
}

TEST_CASE("files round-trip") {
    const auto path = std::filesystem::temp_directory_path() / "hdx_test_roundtrip.complex";
    const Complex2 x = complete_complex(5);
    write_complex(x, path);
    CHECK(read_complex(path) == x);
    std::filesystem::remove(path);
}

TEST_CASE("oracle complexes have the advertised shape") {
    const Complex2 rp2 = oracle::projective_plane();
    const DegreeProfile d = degree_profile(rp2);
    REQUIRE(d.regular);
    CHECK(d.regular->first == 5);
    CHECK(d.regular->second == 2);
    const DegreeProfile s = degree_profile(oracle::octahedron_sphere());
    REQUIRE(s.regular);
    CHECK(s.regular->first == 4);
    CHECK(s.regular->second == 2);
}

}
