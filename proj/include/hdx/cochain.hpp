#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hdx/complex.hpp"
#include "hdx/gf2.hpp"

namespace hdx {

/// A set of faces of one dimension, read as a GF(2) vector (membership is a
/// coefficient of 1). Members are kept sorted and unique.
class Chain {
public:
    Chain() = default;
    Chain(int dimension, std::vector<int> members);

    static Chain empty(int dimension) { return Chain(dimension, {}); }
    // Every face of the given dimension.
    static Chain full(const Complex2& complex, int dimension);
    static Chain from_mask(int dimension, std::uint64_t mask);
    static Chain from_bits(int dimension, const gf2::BitVector& bits);

    int dimension() const noexcept { return dimension_; }
    const std::vector<int>& members() const noexcept { return members_; }
    int size() const noexcept { return static_cast<int>(members_.size()); }
    bool is_empty() const noexcept { return members_.empty(); }
    bool contains(int index) const;

    // Requires every member below 64.
    std::uint64_t mask() const;
    gf2::BitVector bits(std::size_t length) const;

    std::string to_string() const;

    friend bool operator==(const Chain&, const Chain&) = default;

private:
    int dimension_ = 0;
    std::vector<int> members_;
};

// GF(2) sum; throws DimensionMismatchError across dimensions.
Chain operator^(const Chain& a, const Chain& b);

// Throws DomainError when a member is not a face index of the complex.
void check_chain(const Complex2& complex, const Chain& chain);

enum class SpaceKind { cocycles, coboundaries };

/// Span of a GF(2) basis of i-chains: Z^i (cocycles) or B^i (coboundaries).
struct CodeSpace {
    int dimension = 0;
    SpaceKind kind = SpaceKind::cocycles;
    int ambient = 0;  // |X(dimension)|
    std::vector<Chain> basis;
    // For B^1: preimages[j] is a vertex set whose coboundary is basis[j].
    std::vector<Chain> preimages;

    int rank() const noexcept { return static_cast<int>(basis.size()); }
};

// delta(S): the edges with exactly one endpoint in S.
Chain coboundary_vertices(const Complex2& complex, const Chain& vertices);
// delta(F): the triangles with an odd number of edges in F.
Chain coboundary_edges(const Complex2& complex, const Chain& edges);
// Dispatches on the chain dimension (0 or 1).
Chain coboundary(const Complex2& complex, const Chain& chain);

// F_v: the members of F incident to v.
Chain local_view(const Complex2& complex, const Chain& edges, int vertex);

// Z^i = ker(delta^i), i in {0, 1}.
CodeSpace cocycle_space(const Complex2& complex, int dimension);
// B^1 = im(delta^0); B^0 = {0, V}.
CodeSpace coboundary_space(const Complex2& complex, int dimension);

// Size of the symmetric difference.
int set_distance(const Chain& a, const Chain& b);

struct NearestCodeword {
    int distance = 0;
    Chain nearest;
};

inline constexpr int kDefaultEnumerationBits = 24;

/// Minimum Hamming distance from `chain` to span(space), by enumerating all
/// 2^rank codewords in Gray-code order; the first minimizer met is returned.
/// Throws CapacityError when rank exceeds max_rank.
NearestCodeword distance_to_space(const Chain& chain, const CodeSpace& space,
                                  int max_rank = kDefaultEnumerationBits);

bool in_span(const Chain& chain, const CodeSpace& space);

/// dist(S, span(space)) for every subset S of X(dimension), indexed by the
/// subset's bit mask. Computed by breadth-first search over single-face flips
/// from the codewords. Throws CapacityError when ambient > max_bits.
std::vector<std::uint8_t> distance_table(const CodeSpace& space,
                                         int max_bits = kDefaultEnumerationBits);

}  // namespace hdx
