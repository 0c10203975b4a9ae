/// @file reduce.hpp
/// Deterministic summation. All accumulations that feed reported numbers go
/// through pairwise_sum, whose tree shape depends only on the element count,
/// never on thread count, so results are bit-identical for any OMP_NUM_THREADS.

#pragma once

#include <cstddef>

namespace neelsim {

inline double pairwise_sum(const double* a, std::size_t n) {
    if (n <= 32) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += a[i];
        return s;
    }
    // split at the largest power of two strictly below n: fixed tree shape
    std::size_t half = 1;
    while (half * 2 < n) half *= 2;
    return pairwise_sum(a, half) + pairwise_sum(a + half, n - half);
}

}  // namespace neelsim
