// Test-only oracles, kept independent of the library code paths they check.
#ifndef BRAUERLAB_TEST_ORACLES_HPP
#define BRAUERLAB_TEST_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "brauerlab/linalg.hpp"
#include "brauerlab/rational.hpp"

namespace oracles {

// Naive dense rank over Q: textbook elimination, first-nonzero pivoting,
// no sparsity tricks. Deliberately different from the library engine.
inline long dense_rank(const brauerlab::SparseMatrix& M) {
    using brauerlab::Rational;
    long nr = M.rows(), nc = M.cols();
    std::vector<std::vector<Rational>> a(nr, std::vector<Rational>(nc, Rational(0)));
    for (const auto& [rc, v] : M.entries()) a[rc.first][rc.second] = v;
    long rank = 0;
    for (long c = 0; c < nc && rank < nr; ++c) {
        long piv = -1;
        for (long r = rank; r < nr; ++r)
            if (a[r][c] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        for (long r = rank + 1; r < nr; ++r) {
            if (a[r][c] == 0) continue;
            brauerlab::Rational f = a[r][c] / a[rank][c];
            for (long j = c; j < nc; ++j) a[r][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

// All perfect matchings of {0,...,2d-1} via bitmask recursion; returns each
// matching as a sorted list of index pairs.
inline void matchings_by_mask(unsigned mask, int n, std::vector<std::pair<int, int>>& cur,
                              std::vector<std::vector<std::pair<int, int>>>& out) {
    if (mask == (1u << n) - 1) {
        out.push_back(cur);
        return;
    }
    int first = 0;
    while (mask & (1u << first)) ++first;
    for (int j = first + 1; j < n; ++j) {
        if (mask & (1u << j)) continue;
        cur.emplace_back(first, j);
        matchings_by_mask(mask | (1u << first) | (1u << j), n, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<std::pair<int, int>>> all_perfect_matchings(int n) {
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<std::pair<int, int>> cur;
    if (n % 2 == 0) matchings_by_mask(0, n, cur, out);
    return out;
}

inline std::uint64_t double_factorial_odd(int d) {
    std::uint64_t v = 1;
    for (int k = 1; k <= 2 * d - 1; k += 2) v *= static_cast<std::uint64_t>(k);
    return v;
}

// Inversion count of a permutation given as images p[0..d-1] (0-based).
inline int inversions(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv;
}

} // namespace oracles

#endif
