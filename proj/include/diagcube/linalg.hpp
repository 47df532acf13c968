#pragma once

#include <vector>

#include "diagcube/errors.hpp"
#include "diagcube/field.hpp"

namespace diagcube {

// row-reduces in place, returns the rank
template <FieldElem F>
int matrix_rank(std::vector<std::vector<F>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        F inv = m[row][col].inv();
        for (std::size_t j = col; j < cols; ++j) m[row][j] = m[row][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            F f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

// basis of the right nullspace of m (vectors of length cols)
template <FieldElem F>
std::vector<std::vector<F>> nullspace(std::vector<std::vector<F>> m, const F& one) {
    if (m.empty()) throw error("nullspace of empty matrix");
    const std::size_t rows = m.size(), cols = m[0].size();
    std::vector<int> pivot_of_col(cols, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        F inv = m[row][col].inv();
        for (std::size_t j = col; j < cols; ++j) m[row][j] = m[row][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            F f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] = m[i][j] - f * m[row][j];
        }
        pivot_of_col[col] = static_cast<int>(row);
        ++row;
    }
    std::vector<std::vector<F>> basis;
    const F zero = one.zero_like();
    for (std::size_t freec = 0; freec < cols; ++freec) {
        if (pivot_of_col[freec] >= 0) continue;
        std::vector<F> v(cols, zero);
        v[freec] = one;
        for (std::size_t col = 0; col < cols; ++col) {
            int pr = pivot_of_col[col];
            if (pr >= 0) v[col] = -m[static_cast<std::size_t>(pr)][freec];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace diagcube
