#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hdx/cli.hpp"
#include "hdx/complex.hpp"
#include "hdx/complex_io.hpp"

using namespace hdx;

namespace {

struct Result {
    int code = -1;
    std::string out;
    std::string err;
    nlohmann::json report() const { return nlohmann::json::parse(out); }
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    Result r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string fixture(const std::string& name, const Complex2& x) {
    const auto path = std::filesystem::temp_directory_path() / ("hdx_cli_" + name + ".complex");
    write_complex(x, path);
    return path.string();
}

Complex2 pendant_complex() {
    const std::vector<Triangle> t = {{0, 1, 2}};
    const std::vector<Edge> pendant = {{2, 3}};
    return build_from_triangles(t, pendant);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("gen writes a parseable complex") {
    const Result r = call({"gen", "complete", "--n", "5"});
    CHECK(r.code == 0);
    CHECK(parse_complex(r.out) == complete_complex(5));
    const Result rnd = call({"gen", "random", "--n", "6", "--p", "0.5", "--seed", "3"});
    CHECK(rnd.code == 0);
    CHECK(parse_complex(rnd.out) == random_complex(6, 0.5, 3));
}

TEST_CASE("gen --output reports the written file") {
    const auto path = (std::filesystem::temp_directory_path() / "hdx_cli_gen.complex").string();
    const Result r = call({"gen", "complete", "--n", "4", "--output", path});
    CHECK(r.code == 0);
    CHECK(r.report()["results"]["sha256"] == cli::file_sha256(path));
    CHECK(read_complex(path) == complete_complex(4));
}

TEST_CASE("verify-theorem passes on K4 and K5") {
    for (int n : {4, 5}) {
        const std::string file = fixture("k" + std::to_string(n), complete_complex(n));
        const Result r = call({"verify-theorem", file, "--steps", "100"});
        CHECK(r.code == 0);
        const auto doc = r.report();
        CHECK(doc["status"] == "pass");
        CHECK(doc["results"]["alpha_in_unit_interval"] == true);
        CHECK(doc["results"]["worst_distances"].size() == 101);
        CHECK(doc["inputs"][0]["sha256"] == cli::file_sha256(file));
    }
}

TEST_CASE("reports are byte-identical across runs") {
    const std::string file = fixture("k6", complete_complex(6));
    const std::vector<std::string> args = {"audit", file, "--lemma", "sum", "--samples", "300", "--seed", "9"};
    const Result a = call(args);
    const Result b = call(args);
    CHECK(a.out == b.out);
    CHECK(a.report()["command"]["options"]["seed"] == 9);
    CHECK(a.report()["results"]["lemmas"][0]["exhaustive"] == false);
    CHECK(a.report()["results"]["lemmas"][0]["checked"] == 300);
}

TEST_CASE("missing input exits 2") {
    const Result r = call({"spectrum", "/nonexistent/missing.complex"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("capacity errors exit 3") {
    const Result ok = call({"certify", fixture("k7", complete_complex(7))});
    CHECK(ok.code == 0);
    const Result big = call({"certify", fixture("k8", complete_complex(8))});
    CHECK(big.code == 3);
    CHECK(big.report()["results"]["error"]["requested"] == 28);
    CHECK(big.report()["results"]["error"]["threshold"] == 24);
}

TEST_CASE("usage errors exit 2 with usage text on stderr") {
    CHECK(call({}).code == 2);
    const Result unknown = call({"frobnicate"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.find("Usage") != std::string::npos);
    CHECK(unknown.out.empty());
    const std::string file = fixture("k4", complete_complex(4));
    CHECK(call({"spectrum", file, "--bogus"}).code == 2);
    CHECK(call({"spectrum", file, "--graph", "g2"}).code == 2);
    CHECK(call({"walk", file, "--start", "0", "--steps", "3", "--exact", "--paths", "10"}).code == 2);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("--strict turns not-applicable into exit 1") {
    const std::string file = fixture("pendant", pendant_complex());
    const Result loose = call({"verify-theorem", file, "--steps", "5"});
    CHECK(loose.code == 0);
    CHECK(loose.report()["status"] == "not-applicable");
    CHECK(call({"verify-theorem", file, "--steps", "5", "--strict"}).code == 1);
    CHECK(call({"--strict", "verify-theorem", file, "--steps", "5"}).code == 1);
    const std::string k4 = fixture("k4", complete_complex(4));
    CHECK(call({"verify-theorem", k4, "--steps", "5", "--strict"}).code == 0);
}

TEST_CASE("spectrum, cheeger and cocycles reports") {
    const std::string file = fixture("k4", complete_complex(4));
    const auto s = call({"spectrum", file, "--graph", "g1"}).report();
    CHECK(s["results"]["vertices"] == 6);
    CHECK(s["results"]["degree"] == 4);
    const auto c = call({"cheeger", file, "--graph", "g0"}).report();
    CHECK(c["results"]["h"] == "2/3");
    const auto z = call({"cocycles", file, "--dim", "1"}).report();
    CHECK(z["results"]["cocycles"]["rank"] == 3);
    CHECK(z["results"]["coboundaries"]["rank"] == 3);
    const auto cert = call({"certify", file}).report();
    CHECK(cert["results"]["epsilon_cosystolic"] == "2/3");
    CHECK(cert["results"]["mu_vacuous"] == true);
}

TEST_CASE("audit reports each lemma with its status") {
    const std::string file = fixture("k5", complete_complex(5));
    const Result r = call({"audit", file});
    const auto doc = r.report();
    const auto& lemmas = doc["results"]["lemmas"];
    REQUIRE(lemmas.size() == 8);
    for (const auto& l : lemmas) {
        if (l["lemma"] == "mixing") {
            // The one-sided bound as stated fails for negative lambda2.
            CHECK(l["status"] == "fail");
        } else {
            CHECK(l["status"] == "pass");
        }
    }
    CHECK(r.code == 1);
    const Result outgoing = call({"audit", file, "--lemma", "outgoing"});
    CHECK(outgoing.code == 0);
    CHECK(outgoing.report()["results"]["lemmas"][0]["checked"] == 1024);
}

TEST_CASE("audit of a non-regular complex is not applicable where hypotheses fail") {
    const std::string file = fixture("pendant", pendant_complex());
    const auto doc = call({"audit", file, "--lemma", "sum"}).report();
    CHECK(doc["status"] == "not-applicable");
    CHECK(call({"audit", file, "--lemma", "outgoing"}).code == 0);
}

TEST_CASE("walk emits CSV with the documented columns") {
    const std::string file = fixture("k4", complete_complex(4));
    const Result r = call({"walk", file, "--start", "0", "--steps", "4", "--seed", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("step,distance,alpha_power,ok\n") != std::string::npos);
    CHECK(r.out.find("\n4,") != std::string::npos);
    CHECK(r.out.find("false") == std::string::npos);
    const Result mc = call({"walk", file, "--start", "0", "--steps", "4", "--seed", "1", "--paths", "2000"});
    CHECK(mc.code == 0);
    CHECK(mc.out == call({"walk", file, "--start", "0", "--steps", "4", "--seed", "1", "--paths", "2000"}).out);
    CHECK(call({"walk", file, "--start", "6", "--steps", "4"}).code == 2);
}

TEST_CASE("validate") {
    const std::string file = fixture("k4", complete_complex(4));
    const auto doc = call({"validate", file}).report();
    CHECK(doc["results"]["valid"] == true);
    CHECK(doc["results"]["regular"]["k0"] == 3);
    const auto bad = std::filesystem::temp_directory_path() / "hdx_cli_bad.complex";
    std::ofstream(bad) << R"({"triangles": [[0, 1, 1]]})";
    CHECK(call({"validate", bad.string()}).code == 2);
}

}
