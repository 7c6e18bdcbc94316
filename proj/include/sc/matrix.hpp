// Copyright 2026 the semicoarse contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sc {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix with exact arbitrary-precision entries.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    IntegerMatrix times(const IntegerMatrix& other) const;
    IntegerMatrix minus(const IntegerMatrix& other) const;
    std::vector<Int> apply(const std::vector<Int>& v) const;  // matrix * column

    bool is_zero() const;
    bool operator==(const IntegerMatrix& other) const = default;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& k);  // row dst += k * row src
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& k);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

struct SmithDecomposition {
    IntegerMatrix u, d, v;  // u * input * v = d, with u and v unimodular

    std::size_t rank() const;
    std::vector<Int> invariant_factors() const;  // nonzero diagonal entries
    std::vector<Int> nonunit_factors() const;    // factors > 1
};

// Diagonalization by unimodular row/column transforms; the diagonal is
// nonnegative and each entry divides the next.
SmithDecomposition smith_normal_form(IntegerMatrix m);

std::size_t integer_rank(const IntegerMatrix& m);

// Exact determinant (fraction-free elimination); square input required.
Int determinant(IntegerMatrix m);

}  // namespace sc
