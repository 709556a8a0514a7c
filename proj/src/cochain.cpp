#include "hdx/cochain.hpp"

#include <algorithm>
#include <sstream>

#include "hdx/error.hpp"

namespace hdx {

Chain::Chain(int dimension, std::vector<int> members)
    : dimension_(dimension), members_(std::move(members)) {
    if (dimension_ < 0 || dimension_ > 2) {
        throw DomainError("chain dimension must be 0, 1 or 2");
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.front() < 0) {
        throw DomainError("negative face index in chain");
    }
}

Chain Chain::full(const Complex2& complex, int dimension) {
    std::vector<int> all(static_cast<std::size_t>(complex.face_count(dimension)));
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return Chain(dimension, std::move(all));
}

Chain Chain::from_mask(int dimension, std::uint64_t mask) {
    std::vector<int> members;
    while (mask) {
        members.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return Chain(dimension, std::move(members));
}

Chain Chain::from_bits(int dimension, const gf2::BitVector& bits) {
    return Chain(dimension, bits.indices());
}

bool Chain::contains(int index) const {
    return std::binary_search(members_.begin(), members_.end(), index);
}

std::uint64_t Chain::mask() const {
    std::uint64_t m = 0;
    for (int i : members_) {
        if (i >= 64) {
            throw CapacityError("chain does not fit a 64-bit mask", i + 1, 64);
        }
        m |= std::uint64_t{1} << i;
    }
    return m;
}

gf2::BitVector Chain::bits(std::size_t length) const {
    if (!members_.empty() && static_cast<std::size_t>(members_.back()) >= length) {
        throw DomainError("chain member " + std::to_string(members_.back()) +
                          " outside 0.." + std::to_string(length) + ")");
    }
    return gf2::BitVector::from_indices(length, members_);
}

std::string Chain::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < members_.size(); ++i) {
        os << (i ? "," : "") << members_[i];
    }
    os << ']';
    return os.str();
}

Chain operator^(const Chain& a, const Chain& b) {
    if (a.dimension() != b.dimension()) {
        throw DimensionMismatchError("cannot add chains of dimension " +
                                     std::to_string(a.dimension()) + " and " +
                                     std::to_string(b.dimension()));
    }
    std::vector<int> out;
    std::set_symmetric_difference(a.members().begin(), a.members().end(), b.members().begin(),
                                  b.members().end(), std::back_inserter(out));
    return Chain(a.dimension(), std::move(out));
}

void check_chain(const Complex2& complex, const Chain& chain) {
    const int limit = complex.face_count(chain.dimension());
    if (!chain.is_empty() && chain.members().back() >= limit) {
        throw DomainError("face index " + std::to_string(chain.members().back()) +
                          " out of range for dimension " + std::to_string(chain.dimension()) +
                          " (" + std::to_string(limit) + " faces)");
    }
}

Chain coboundary_vertices(const Complex2& complex, const Chain& vertices) {
    if (vertices.dimension() != 0) {
        throw DimensionMismatchError("coboundary_vertices expects a 0-chain");
    }
    check_chain(complex, vertices);
    std::vector<char> inside(static_cast<std::size_t>(complex.vertex_count()), 0);
    for (int v : vertices.members()) inside[static_cast<std::size_t>(v)] = 1;

    std::vector<int> cut;
    for (int e = 0; e < complex.edge_count(); ++e) {
        const Edge& edge = complex.edge(e);
        if (inside[static_cast<std::size_t>(edge[0])] != inside[static_cast<std::size_t>(edge[1])]) {
            cut.push_back(e);
        }
    }
    return Chain(1, std::move(cut));
}

Chain coboundary_edges(const Complex2& complex, const Chain& edges) {
    if (edges.dimension() != 1) {
        throw DimensionMismatchError("coboundary_edges expects a 1-chain");
    }
    check_chain(complex, edges);
    // Flip the parity of every triangle on each member edge.
    std::vector<char> parity(static_cast<std::size_t>(complex.triangle_count()), 0);
    for (int e : edges.members()) {
        for (int t : complex.triangles_at(e)) parity[static_cast<std::size_t>(t)] ^= 1;
    }
    std::vector<int> odd;
    for (int t = 0; t < complex.triangle_count(); ++t) {
        if (parity[static_cast<std::size_t>(t)]) odd.push_back(t);
    }
    return Chain(2, std::move(odd));
}

Chain coboundary(const Complex2& complex, const Chain& chain) {
    switch (chain.dimension()) {
        case 0: return coboundary_vertices(complex, chain);
        case 1: return coboundary_edges(complex, chain);
        default: throw DomainError("coboundary is defined for 0- and 1-chains only");
    }
}

Chain local_view(const Complex2& complex, const Chain& edges, int vertex) {
    if (edges.dimension() != 1) {
        throw DimensionMismatchError("local_view expects a 1-chain");
    }
    check_chain(complex, edges);
    if (vertex < 0 || vertex >= complex.vertex_count()) {
        throw DomainError("vertex " + std::to_string(vertex) + " out of range");
    }
    std::vector<int> view;
    for (int e : edges.members()) {
        const Edge& edge = complex.edge(e);
        if (edge[0] == vertex || edge[1] == vertex) view.push_back(e);
    }
    return Chain(1, std::move(view));
}

namespace {

// Images of the domain basis under delta^dimension, as packed columns.
std::vector<gf2::BitVector> coboundary_columns(const Complex2& complex, int dimension) {
    std::vector<gf2::BitVector> columns;
    if (dimension == 0) {
        const auto m = static_cast<std::size_t>(complex.edge_count());
        for (int v = 0; v < complex.vertex_count(); ++v) {
            const auto star = complex.edges_at(v);
            columns.push_back(gf2::BitVector::from_indices(m, star));
        }
    } else if (dimension == 1) {
        const auto m = static_cast<std::size_t>(complex.triangle_count());
        for (int e = 0; e < complex.edge_count(); ++e) {
            columns.push_back(gf2::BitVector::from_indices(m, complex.triangles_at(e)));
        }
    } else {
        throw DomainError("code spaces are defined for dimensions 0 and 1 only");
    }
    return columns;
}

}  // namespace

CodeSpace cocycle_space(const Complex2& complex, int dimension) {
    const auto columns = coboundary_columns(complex, dimension);
    const std::size_t codomain =
        static_cast<std::size_t>(complex.face_count(dimension + 1));
    const gf2::MapReduction reduction = gf2::reduce_map(columns, codomain);

    CodeSpace space;
    space.dimension = dimension;
    space.kind = SpaceKind::cocycles;
    space.ambient = complex.face_count(dimension);
    for (const auto& k : reduction.kernel_basis) {
        space.basis.push_back(Chain::from_bits(dimension, k));
    }
    return space;
}

CodeSpace coboundary_space(const Complex2& complex, int dimension) {
    CodeSpace space;
    space.dimension = dimension;
    space.kind = SpaceKind::coboundaries;
    space.ambient = complex.face_count(dimension);
    if (dimension == 0) {
        if (complex.vertex_count() > 0) {
            space.basis.push_back(Chain::full(complex, 0));
        }
        return space;
    }
    if (dimension != 1) {
        throw DomainError("code spaces are defined for dimensions 0 and 1 only");
    }
    const auto columns = coboundary_columns(complex, 0);
    const gf2::MapReduction reduction =
        gf2::reduce_map(columns, static_cast<std::size_t>(complex.edge_count()));
    for (std::size_t j = 0; j < reduction.image_basis.size(); ++j) {
        space.basis.push_back(Chain::from_bits(1, reduction.image_basis[j]));
        space.preimages.push_back(Chain::from_bits(0, reduction.image_preimages[j]));
    }
    return space;
}

int set_distance(const Chain& a, const Chain& b) {
    return (a ^ b).size();
}

NearestCodeword distance_to_space(const Chain& chain, const CodeSpace& space, int max_rank) {
    if (chain.dimension() != space.dimension) {
        throw DimensionMismatchError("chain of dimension " + std::to_string(chain.dimension()) +
                                     " against a code space of dimension " +
                                     std::to_string(space.dimension));
    }
    const int rank = space.rank();
    if (rank > max_rank) {
        throw CapacityError("code space too large to enumerate", rank, max_rank);
    }
    const auto length = static_cast<std::size_t>(space.ambient);
    const gf2::BitVector target = chain.bits(length);

    std::vector<gf2::BitVector> basis;
    basis.reserve(space.basis.size());
    for (const Chain& b : space.basis) basis.push_back(b.bits(length));

    gf2::BitVector codeword(length);
    gf2::BitVector best = codeword;
    int best_distance = target.distance(codeword);
    const std::uint64_t total = std::uint64_t{1} << rank;
    for (std::uint64_t i = 1; i < total && best_distance > 0; ++i) {
        codeword ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
        const int d = target.distance(codeword);
        if (d < best_distance) {
            best_distance = d;
            best = codeword;
        }
    }
    return {best_distance, Chain::from_bits(space.dimension, best)};
}

bool in_span(const Chain& chain, const CodeSpace& space) {
    // Reduce the chain against the basis; membership iff it reduces to zero.
    const auto length = static_cast<std::size_t>(space.ambient);
    std::vector<gf2::BitVector> columns;
    for (const Chain& b : space.basis) columns.push_back(b.bits(length));
    const int before = gf2::reduce_map(columns, length).rank;
    columns.push_back(chain.bits(length));
    return gf2::reduce_map(columns, length).rank == before;
}

std::vector<std::uint8_t> distance_table(const CodeSpace& space, int max_bits) {
    const int n = space.ambient;
    if (n > max_bits || n > 30) {
        throw CapacityError("too many faces for an exhaustive distance table", n,
                            std::min(max_bits, 30));
    }
    const std::uint32_t size = std::uint32_t{1} << n;
    constexpr std::uint8_t kUnseen = 0xFF;
    std::vector<std::uint8_t> dist(size, kUnseen);
    std::vector<std::uint32_t> queue;
    queue.reserve(size);

    std::vector<std::uint32_t> basis;
    for (const Chain& b : space.basis) basis.push_back(static_cast<std::uint32_t>(b.mask()));
    std::uint32_t codeword = 0;
    dist[0] = 0;
    queue.push_back(0);
    const std::uint64_t words = std::uint64_t{1} << basis.size();
    for (std::uint64_t i = 1; i < words; ++i) {
        codeword ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
        if (dist[codeword] == kUnseen) {
            dist[codeword] = 0;
            queue.push_back(codeword);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t s = queue[head];
        const std::uint8_t next = static_cast<std::uint8_t>(dist[s] + 1);
        for (int b = 0; b < n; ++b) {
            const std::uint32_t t = s ^ (std::uint32_t{1} << b);
            if (dist[t] == kUnseen) {
                dist[t] = next;
                queue.push_back(t);
            }
        }
    }
    return dist;
}

}  // namespace hdx
