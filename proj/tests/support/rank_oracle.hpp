// Copyright 2026 the semicoarse contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "sc/matrix.hpp"

namespace sc::testing {

// Rank over the rationals by fraction-free elimination; independent of the
// Smith normal form path.
inline std::size_t rational_rank(IntegerMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m.at(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        m.swap_rows(rank, pivot);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                Int value = m.at(i, j) * m.at(rank, col) - m.at(i, col) * m.at(rank, j);
                m.at(i, j) = value / prev;
            }
            m.at(i, col) = 0;
        }
        prev = m.at(rank, col);
        ++rank;
    }
    return rank;
}

}  // namespace sc::testing
