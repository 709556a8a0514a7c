#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace hdx {

// Reflected Gray code: consecutive values differ in bit countr_zero(i).
constexpr std::uint64_t gray(std::uint64_t i) noexcept { return i ^ (i >> 1); }

// Lexicographic order of the sorted index lists of two subsets.
constexpr bool lex_less(std::uint64_t a, std::uint64_t b) noexcept {
    if (a == b) return false;
    const int low = std::countr_zero(a ^ b);
    // The set holding `low` continues with it; the other continues with a
    // larger index or ends, and ending first sorts first.
    const std::uint64_t above = low >= 63 ? 0 : ~((std::uint64_t{2} << low) - 1);
    if ((b >> low) & 1U) {
        return (a & above) == 0;
    }
    return (b & above) != 0;
}

inline std::vector<int> mask_members(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

}  // namespace hdx
