#pragma once

#include <bit>
#include <cstdint>

namespace cds {

using mask_t = std::uint64_t;

constexpr mask_t bit(int v) { return mask_t{1} << v; }

// All-ones mask over vertices 0..n-1 (n <= 64).
constexpr mask_t full_mask(int n) {
    return n >= 64 ? ~mask_t{0} : (mask_t{1} << n) - 1;
}

constexpr int popcount(mask_t m) { return std::popcount(m); }

// Lowest set bit index; m must be nonzero.
constexpr int lowest_bit(mask_t m) { return std::countr_zero(m); }

// Visits set bits in ascending order. f may return void, or bool where
// false stops the walk.
template <typename F>
constexpr void for_bits(mask_t m, F&& f) {
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if constexpr (std::is_same_v<decltype(f(0)), bool>) {
            if (!f(v)) return;
        } else {
            f(v);
        }
    }
}

} // namespace cds
