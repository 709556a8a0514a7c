#include "hdx/gf2.hpp"

#include <unordered_map>

namespace hdx::gf2 {

BitVector BitVector::from_indices(std::size_t bits, std::span<const int> indices) {
    BitVector v(bits);
    for (int i : indices) {
        v.flip(static_cast<std::size_t>(i));
    }
    return v;
}

std::vector<int> BitVector::indices() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t word = words_[w];
        while (word) {
            out.push_back(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(word))));
            word &= word - 1;
        }
    }
    return out;
}

MapReduction reduce_map(std::span<const BitVector> columns, std::size_t codomain_bits) {
    MapReduction out;
    const std::size_t domain = columns.size();

    // Rows are [image | preimage]; each pivot row owns the lowest set bit of
    // its image, so pivot images are independent by construction.
    std::vector<BitVector> pivot_image;
    std::vector<BitVector> pivot_pre;
    std::unordered_map<std::size_t, std::size_t> pivot_of_bit;

    for (std::size_t j = 0; j < domain; ++j) {
        BitVector image = columns[j];
        BitVector pre(domain);
        pre.set(j);
        for (;;) {
            const std::size_t low = image.lowest();
            if (low >= codomain_bits) {
                out.kernel_basis.push_back(std::move(pre));
                break;
            }
            auto it = pivot_of_bit.find(low);
            if (it == pivot_of_bit.end()) {
                pivot_of_bit.emplace(low, pivot_image.size());
                pivot_image.push_back(std::move(image));
                pivot_pre.push_back(std::move(pre));
                break;
            }
            image ^= pivot_image[it->second];
            pre ^= pivot_pre[it->second];
        }
    }

    out.rank = static_cast<int>(pivot_image.size());
    out.image_basis = std::move(pivot_image);
    out.image_preimages = std::move(pivot_pre);
    return out;
}

}  // namespace hdx::gf2
