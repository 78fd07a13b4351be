#pragma once

#include <cstddef>
#include <cstdint>

namespace phaselab {

inline bool is_dyadic(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

inline int log2i(std::size_t n) {
    int k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
}

// Euclidean remainder, valid for negative a.
inline std::ptrdiff_t wrap(std::ptrdiff_t a, std::ptrdiff_t n) {
    std::ptrdiff_t r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace phaselab
