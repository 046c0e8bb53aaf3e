#pragma once

// Bundled reference data: the 2x2x2 golden tensor, Strassen's rank-7 triple,
// the 15-multiplication triple for the 3x3-by-3x2 product, and the table of
// empirically observed ranks / border ranks for small cases.

#include <array>
#include <string>
#include <vector>

#include "mmcp/cp_model.hpp"
#include "mmcp/dims.hpp"
#include "mmcp/matrix.hpp"

namespace mmcp::fixtures {

// Nonzero positions of the 2x2x2 multiplication tensor, 1-based (i,j,k),
// grouped by frontal slice.
inline const std::vector<std::array<int, 3>>& t222_ones() {
    static const std::vector<std::array<int, 3>> ones = {
        {1, 1, 1}, {2, 3, 1},
        {3, 1, 2}, {4, 3, 2},
        {1, 2, 3}, {2, 4, 3},
        {3, 2, 4}, {4, 4, 4},
    };
    return ones;
}

namespace detail {

template <typename T>
Mat<T> from_ints(int rows, int cols, const int* vals) {
    Mat<T> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = T(vals[i * cols + j]);
    return m;
}

inline constexpr int kStrassenA[4 * 7] = {
    1, 0, 1, 0, 1, -1, 0,
    0, 0, 0, 0, 1,  0, 1,
    0, 1, 0, 0, 0,  1, 0,
    1, 1, 0, 1, 0,  0, -1,
};
inline constexpr int kStrassenB[4 * 7] = {
    1, 1,  0, -1, 0, 1, 0,
    0, 0,  1,  0, 0, 1, 0,
    0, 0,  0,  1, 0, 0, 1,
    1, 0, -1,  0, 1, 0, 1,
};
inline constexpr int kStrassenC[4 * 7] = {
    1,  0, 0, 1, -1, 0, 1,
    0,  1, 0, 1,  0, 0, 0,
    0,  0, 1, 0,  1, 0, 0,
    1, -1, 1, 0,  0, 1, 0,
};

inline constexpr int kT332A[9 * 15] = {
    -1,  0,  0,  0,  0, -1,  0,  0,  0,  0,  0,  0,  0,  0,  0,
    -1,  0,  0, -1,  0,  0,  0,  1,  0,  0,  1,  0,  0,  0,  0,
     0, -1,  0,  0, -1,  1,  0,  0,  0,  0,  0,  0,  0,  0,  1,
     0,  0,  1,  1,  0, -1,  0,  0,  0,  0,  0,  1,  0,  0,  0,
     0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  1,  0,  0,  0,
     0,  0,  0,  0,  0,  0,  0,  0,  1, -1,  1,  0, -1,  0,  0,
     1,  1,  0,  0,  0,  0,  1,  0,  0, -1,  0,  0,  0,  0,  0,
     0,  0,  0,  0,  1,  0,  0,  0,  0,  0,  0, -1, -1, -1,  0,
     0,  0,  0,  0,  1,  0,  0,  0,  0,  1,  0,  0,  0,  0,  0,
};
inline constexpr int kT332B[6 * 15] = {
     1,  1,  0,  1,  0, -1,  0, -1,  0,  0,  0,  0,  0,  0,  1,
    -1,  0, -1, -1,  0,  0,  1,  1,  0,  0,  0,  0,  0,  0,  0,
     0,  0,  0,  0,  0,  0,  0,  1,  1,  0,  1,  0, -1, -1,  0,
     0,  0,  1,  1,  0,  0,  0, -1,  0,  0,  0,  1,  0,  1,  0,
     0,  0,  0,  0,  1,  0,  0,  0, -1,  0,  0,  0,  1,  1,  1,
     0,  1,  0,  0, -1,  0,  1,  0,  0,  1,  0,  0, -1, -1,  0,
};
inline constexpr int kT332C[6 * 15] = {
     0,  0,  1, -1,  0,  1,  0,  1,  0,  0,  0,  0,  0,  0,  1,
     0,  0, -1,  1,  0,  0,  0, -1, -1,  0,  1,  0,  0,  0,  0,
     0,  1,  0,  0,  1,  0,  0,  0, -1,  1,  0,  0,  1,  0,  1,
     1, -1,  1, -1,  0,  1,  1,  0,  0,  0,  0,  0,  0,  0,  0,
     0,  0, -1,  0,  0,  0,  0,  0, -1,  0,  0,  1,  1, -1,  0,
     0,  0,  0,  0,  0,  0,  1,  0, -1,  1,  0,  0,  1, -1,  0,
};

} // namespace detail

inline MatMulDims strassen_dims() { return MatMulDims(2, 2, 2); }
inline MatMulDims t332_dims() { return MatMulDims(3, 3, 2); }

// Strassen's 7-multiplication decomposition of the 2x2x2 tensor.
template <typename T>
FactorTriple<T> strassen_triple() {
    return FactorTriple<T>{detail::from_ints<T>(4, 7, detail::kStrassenA),
                           detail::from_ints<T>(4, 7, detail::kStrassenB),
                           detail::from_ints<T>(4, 7, detail::kStrassenC)};
}

// 15-multiplication decomposition of the 9x6x6 tensor for 3x3 times 3x2.
template <typename T>
FactorTriple<T> t332_triple() {
    return FactorTriple<T>{detail::from_ints<T>(9, 15, detail::kT332A),
                           detail::from_ints<T>(6, 15, detail::kT332B),
                           detail::from_ints<T>(6, 15, detail::kT332C)};
}

// Empirically observed upper bounds for small multiplication tensors,
// used to label reports. Never used to fake a result.
struct RankTableRow {
    const char* acronym;
    int p, q, s;
    int ones;
    int rank;        // best known exact-fit rank
    int border_rank; // smallest rank whose best fit tends to 0 as c grows
};

inline const std::vector<RankTableRow>& rank_table() {
    static const std::vector<RankTableRow> rows = {
        {"222", 2, 2, 2, 8, 7, 7},
        {"232", 2, 3, 2, 12, 11, 10},
        {"322", 3, 2, 2, 12, 11, 10},
        {"332", 3, 3, 2, 18, 15, 14},
        {"333", 3, 3, 3, 27, 23, 21},
        {"343", 3, 4, 3, 36, 29, 28},
        {"443", 4, 4, 3, 48, 40, 39},
        {"444", 4, 4, 4, 64, 49, 49},
    };
    return rows;
}

inline const RankTableRow* rank_table_lookup(const MatMulDims& d) {
    for (const auto& row : rank_table())
        if (row.p == d.p && row.q == d.q && row.s == d.s) return &row;
    return nullptr;
}

// Best observed objective for the 3x3x3 tensor at rank 22, c = 594.
inline constexpr double kBestPhi333Rank22 = 6.766e-5;

} // namespace mmcp::fixtures
