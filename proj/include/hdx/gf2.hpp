#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hdx::gf2 {

/// Fixed-length vector over GF(2), packed 64 coordinates per word.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    static BitVector from_indices(std::size_t bits, std::span<const int> indices);

    std::size_t size() const noexcept { return bits_; }
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    bool test(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i) noexcept { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void flip(std::size_t i) noexcept { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    BitVector& operator^=(const BitVector& other) noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] ^= other.words_[w];
        }
        return *this;
    }

    int popcount() const noexcept {
        int c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    // popcount(*this ^ other) without materializing the sum.
    int distance(const BitVector& other) const noexcept {
        int c = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) c += std::popcount(words_[w] ^ other.words_[w]);
        return c;
    }

    bool none() const noexcept {
        for (std::uint64_t w : words_) {
            if (w) return false;
        }
        return true;
    }

    // Index of the lowest set coordinate, or size() when zero.
    std::size_t lowest() const noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        }
        return bits_;
    }

    std::vector<int> indices() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Row reduction of a linear map given by the images of the domain basis.
struct MapReduction {
    int rank = 0;
    // Independent vectors spanning the image, each paired with a preimage.
    std::vector<BitVector> image_basis;
    std::vector<BitVector> image_preimages;
    // Independent vectors spanning the kernel; dim = domain - rank.
    std::vector<BitVector> kernel_basis;
};

// columns[j] is the image of the j-th domain basis vector; all columns must
// have codomain_bits coordinates.
MapReduction reduce_map(std::span<const BitVector> columns, std::size_t codomain_bits);

}  // namespace hdx::gf2
