#pragma once

// Brute-force reference computations for the tests. Everything here works on
// raw bit masks and face lists and shares no code with the library beyond the
// Complex2/Graph containers and Rational.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "hdx/complex.hpp"
#include "hdx/rational.hpp"
#include "hdx/spectral.hpp"

namespace oracle {

using hdx::Complex2;
using hdx::Graph;
using hdx::Rational;
using Mask = std::uint64_t;

inline Mask all_bits(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline std::vector<int> members(Mask m) {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i) {
        if ((m >> i) & 1U) out.push_back(i);
    }
    return out;
}

inline int edge_index(const Complex2& x, int u, int v) {
    if (u > v) std::swap(u, v);
    for (int e = 0; e < x.edge_count(); ++e) {
        if (x.edge(e)[0] == u && x.edge(e)[1] == v) return e;
    }
    return -1;
}

// Edges with exactly one endpoint in S.
inline Mask delta0(const Complex2& x, Mask s) {
    Mask out = 0;
    for (int e = 0; e < x.edge_count(); ++e) {
        const bool a = (s >> x.edge(e)[0]) & 1U;
        const bool b = (s >> x.edge(e)[1]) & 1U;
        if (a != b) out |= Mask{1} << e;
    }
    return out;
}

// Triangles containing an odd number of edges of F.
inline Mask delta1(const Complex2& x, Mask f) {
    Mask out = 0;
    for (int t = 0; t < x.triangle_count(); ++t) {
        const auto& [a, b, c] = x.triangle(t);
        int count = 0;
        for (int e : {edge_index(x, a, b), edge_index(x, a, c), edge_index(x, b, c)}) {
            if (e >= 0 && ((f >> e) & 1U)) ++count;
        }
        if (count % 2 == 1) out |= Mask{1} << t;
    }
    return out;
}

inline Mask delta(const Complex2& x, int dim, Mask s) { return dim == 0 ? delta0(x, s) : delta1(x, s); }

inline int faces(const Complex2& x, int dim) { return dim == 0 ? x.vertex_count() : x.edge_count(); }

// Z^i: every subset with zero coboundary.
inline std::vector<Mask> cocycles(const Complex2& x, int dim) {
    std::vector<Mask> out;
    const int m = faces(x, dim);
    for (Mask s = 0; s <= all_bits(m); ++s) {
        if (delta(x, dim, s) == 0) out.push_back(s);
        if (s == all_bits(m)) break;
    }
    return out;
}

// B^0 = {0, V}; B^1 = {delta0(S)}.
inline std::vector<Mask> coboundaries(const Complex2& x, int dim) {
    std::set<Mask> out;
    if (dim == 0) {
        out.insert(0);
        out.insert(all_bits(x.vertex_count()));
    } else {
        for (Mask s = 0; s <= all_bits(x.vertex_count()); ++s) {
            out.insert(delta0(x, s));
            if (s == all_bits(x.vertex_count())) break;
        }
    }
    return {out.begin(), out.end()};
}

inline int distance(Mask s, const std::vector<Mask>& code) {
    int best = 64;
    for (Mask c : code) best = std::min(best, std::popcount(s ^ c));
    return best;
}

struct Ratio {
    Rational value;
    Mask witness = 0;
    bool found = false;
};

// min |delta S| / (k dist(S, code)) over S with delta S != 0; ties go to the
// lexicographically smallest member list.
inline Ratio expansion(const Complex2& x, int dim, int degree, const std::vector<Mask>& code) {
    Ratio best;
    const int m = faces(x, dim);
    for (Mask s = 0;; ++s) {
        const Mask d = delta(x, dim, s);
        if (d != 0) {
            const Rational r(std::popcount(d), static_cast<std::int64_t>(degree) * distance(s, code));
            const bool better = !best.found || r < best.value ||
                                (r == best.value && members(s) < members(best.witness));
            if (better) best = {r, s, true};
        }
        if (s == all_bits(m)) break;
    }
    return best;
}

// min |z| / |X(i)| over cocycles outside B^i.
inline Ratio mu(const Complex2& x, int dim) {
    const auto z = cocycles(x, dim);
    const auto b = coboundaries(x, dim);
    Ratio best;
    for (Mask c : z) {
        if (std::binary_search(b.begin(), b.end(), c)) continue;
        const Rational r(std::popcount(c), faces(x, dim));
        if (!best.found || r < best.value) best = {r, c, true};
    }
    return best;
}

inline int gf2_rank_of_span(const std::vector<Mask>& code) {
    return std::bit_width(code.size()) - 1;  // |code| = 2^rank
}

// min |E(S, S^c)| / (k |S|) over 0 < |S| <= n/2, with the lexicographically
// smallest minimizer.
inline Ratio cheeger(const Graph& g) {
    const int n = g.vertex_count();
    const int k = *g.regular_degree();
    Ratio best;
    for (Mask s = 1; s < (Mask{1} << n); ++s) {
        const int size = std::popcount(s);
        if (2 * size > n) continue;
        int cut = 0;
        for (const auto& e : g.edges()) {
            if (((s >> e[0]) & 1U) != ((s >> e[1]) & 1U)) ++cut;
        }
        const Rational r(cut, static_cast<std::int64_t>(k) * size);
        if (!best.found || r < best.value || (r == best.value && members(s) < members(best.witness))) {
            best = {r, s, true};
        }
    }
    return best;
}

// Integer characteristic polynomial det(xI - A) by Faddeev-LeVerrier;
// coefficient i multiplies x^i.
inline std::vector<long long> characteristic_polynomial(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<long long> a(static_cast<std::size_t>(n * n), 0);
    for (const auto& e : g.edges()) {
        a[static_cast<std::size_t>(e[0] * n + e[1])] = 1;
        a[static_cast<std::size_t>(e[1] * n + e[0])] = 1;
    }
    std::vector<long long> coeff(static_cast<std::size_t>(n + 1), 0);
    coeff[static_cast<std::size_t>(n)] = 1;
    std::vector<long long> m(static_cast<std::size_t>(n * n), 0);
    for (int k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I
        std::vector<long long> next(static_cast<std::size_t>(n * n), 0);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                long long sum = 0;
                for (int l = 0; l < n; ++l) sum += a[static_cast<std::size_t>(i * n + l)] * m[static_cast<std::size_t>(l * n + j)];
                next[static_cast<std::size_t>(i * n + j)] = sum;
            }
            next[static_cast<std::size_t>(i * n + i)] += coeff[static_cast<std::size_t>(n - k + 1)];
        }
        m = std::move(next);
        long long trace = 0;
        for (int i = 0; i < n; ++i) {
            for (int l = 0; l < n; ++l) trace += a[static_cast<std::size_t>(i * n + l)] * m[static_cast<std::size_t>(l * n + i)];
        }
        coeff[static_cast<std::size_t>(n - k)] = -trace / k;
    }
    return coeff;
}

inline long double evaluate(const std::vector<long long>& coeff, long double x) {
    long double acc = 0;
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * x + static_cast<long double>(*it);
    return acc;
}

// Checks unnormalized eigenvalues against det(xI - A): clusters them, then
// requires the sign of the characteristic polynomial to flip across each
// cluster exactly as its multiplicity predicts, and the polynomial to be
// positive beyond the largest eigenvalue.
inline bool sign_changes_match(const Graph& g, std::vector<double> eigenvalues, double cluster = 1e-6) {
    const auto coeff = characteristic_polynomial(g);
    std::sort(eigenvalues.begin(), eigenvalues.end());
    if (static_cast<int>(eigenvalues.size()) != g.vertex_count()) return false;
    std::vector<std::pair<double, int>> clusters;
    for (double v : eigenvalues) {
        if (!clusters.empty() && v - clusters.back().first < cluster) {
            ++clusters.back().second;
        } else {
            clusters.emplace_back(v, 1);
        }
    }
    std::vector<long double> probes;
    probes.push_back(clusters.front().first - 1.0L);
    for (std::size_t i = 0; i + 1 < clusters.size(); ++i) {
        probes.push_back((static_cast<long double>(clusters[i].first) + clusters[i + 1].first) / 2);
    }
    probes.push_back(clusters.back().first + 1.0L);
    auto sign = [&](long double x) { return evaluate(coeff, x) > 0 ? 1 : -1; };
    if (sign(probes.back()) != 1) return false;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        const int expected = sign(probes[i]) * (clusters[i].second % 2 == 1 ? -1 : 1);
        if (sign(probes[i + 1]) != expected) return false;
        // A root of the right multiplicity sits inside the cluster.
        if (std::abs(evaluate(coeff, clusters[i].first)) > 1e-6L) return false;
    }
    return true;
}

// Lexicographic complex samples: the complete 1-skeleton on n vertices with
// the triangles selected by `pick` (bit i = i-th triangle in lex order).
inline Complex2 skeleton_with_triangles(int n, Mask pick) {
    std::vector<hdx::Triangle> all;
    std::vector<hdx::Edge> edges;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            edges.push_back({a, b});
            for (int c = b + 1; c < n; ++c) all.push_back({a, b, c});
        }
    }
    std::vector<hdx::Triangle> chosen;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if ((pick >> i) & 1U) chosen.push_back(all[i]);
    }
    return hdx::build_from_triangles(chosen, edges, n);
}

// Six-vertex real projective plane: every edge of K6 in exactly two triangles,
// with one nontrivial GF(2) 1-cocycle class.
inline Complex2 projective_plane() {
    const std::vector<hdx::Triangle> t = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                          {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};
    return hdx::build_from_triangles(t);
}

// Boundary of the octahedron: 6 vertices, 12 edges, 8 triangles.
inline Complex2 octahedron_sphere() {
    std::vector<hdx::Triangle> t;
    for (int top : {4, 5}) {
        for (int i = 0; i < 4; ++i) t.push_back({i, (i + 1) % 4, top});
    }
    return hdx::build_from_triangles(t);
}

inline Graph octahedron_graph() {
    std::vector<hdx::Edge> e;
    for (int u = 0; u < 6; ++u) {
        for (int v = u + 1; v < 6; ++v) {
            if (v != u + 3) e.push_back({u, v});
        }
    }
    return Graph(6, e);
}

}  // namespace oracle
