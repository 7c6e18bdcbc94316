// Copyright 2026 the semicoarse contributors
// SPDX-License-Identifier: Apache-2.0

#include "sc/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "sc/errors.hpp"

namespace sc {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::times(const IntegerMatrix& other) const {
    if (cols_ != other.rows_) throw input_error("matrix product shape mismatch");
    IntegerMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Int& bkj = other.at(k, j);
                if (bkj != 0) out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

IntegerMatrix IntegerMatrix::minus(const IntegerMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw input_error("matrix difference shape mismatch");
    IntegerMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - other.a_[i];
    return out;
}

std::vector<Int> IntegerMatrix::apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw input_error("matrix-vector shape mismatch");
    std::vector<Int> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
    return out;
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += k * at(src, j);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) at(i, dst) += k * at(i, src);
}

void IntegerMatrix::negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) at(r, j) = -at(r, j);
}

void IntegerMatrix::negate_col(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, c) = -at(i, c);
}

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0;
    const std::size_t lim = std::min(d.rows(), d.cols());
    while (r < lim && d.at(r, r) != 0) ++r;
    return r;
}

std::vector<Int> SmithDecomposition::invariant_factors() const {
    std::vector<Int> out;
    for (std::size_t i = 0; i < rank(); ++i) out.push_back(d.at(i, i));
    return out;
}

std::vector<Int> SmithDecomposition::nonunit_factors() const {
    std::vector<Int> out;
    for (const Int& f : invariant_factors())
        if (f > 1) out.push_back(f);
    return out;
}

namespace {

using boost::multiprecision::abs;

// Mirrored elementary operations: every row operation on m is applied to u,
// every column operation to v, preserving u * input * v = m.
struct Workspace {
    IntegerMatrix m, u, v;

    void swap_rows(std::size_t a, std::size_t b) {
        m.swap_rows(a, b);
        u.swap_rows(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        m.swap_cols(a, b);
        v.swap_cols(a, b);
    }
    void add_row(std::size_t dst, std::size_t src, const Int& k) {
        m.add_row_multiple(dst, src, k);
        u.add_row_multiple(dst, src, k);
    }
    void add_col(std::size_t dst, std::size_t src, const Int& k) {
        m.add_col_multiple(dst, src, k);
        v.add_col_multiple(dst, src, k);
    }
    void negate_row(std::size_t r) {
        m.negate_row(r);
        u.negate_row(r);
    }
};

// Floor division quotient, so the remainder has the pivot's sign range [0, |p|).
Int floor_quotient(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

SmithDecomposition smith_normal_form(IntegerMatrix input) {
    Workspace w{std::move(input), IntegerMatrix::identity(0), IntegerMatrix::identity(0)};
    w.u = IntegerMatrix::identity(w.m.rows());
    w.v = IntegerMatrix::identity(w.m.cols());
    const std::size_t lim = std::min(w.m.rows(), w.m.cols());

    for (std::size_t r = 0; r < lim; ++r) {
        // Pivot: smallest nonzero magnitude in the remaining submatrix.
        std::size_t pi = r, pj = r;
        Int best = 0;
        for (std::size_t i = r; i < w.m.rows(); ++i)
            for (std::size_t j = r; j < w.m.cols(); ++j) {
                const Int& x = w.m.at(i, j);
                if (x == 0) continue;
                if (best == 0 || abs(x) < abs(best)) {
                    best = x;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        w.swap_rows(r, pi);
        w.swap_cols(r, pj);

        for (;;) {
            // Clear the pivot column.
            bool dirty = false;
            for (std::size_t i = r + 1; i < w.m.rows(); ++i) {
                if (w.m.at(i, r) == 0) continue;
                const Int q = floor_quotient(w.m.at(i, r), w.m.at(r, r));
                w.add_row(i, r, -q);
                if (w.m.at(i, r) != 0) {
                    // Remainder strictly smaller than the pivot: promote it.
                    w.swap_rows(r, i);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Clear the pivot row.
            for (std::size_t j = r + 1; j < w.m.cols(); ++j) {
                if (w.m.at(r, j) == 0) continue;
                const Int q = floor_quotient(w.m.at(r, j), w.m.at(r, r));
                w.add_col(j, r, -q);
                if (w.m.at(r, j) != 0) {
                    w.swap_cols(r, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Divisibility sweep: fold any non-multiple into the pivot's row.
            bool fixed_entry = false;
            for (std::size_t i = r + 1; i < w.m.rows() && !fixed_entry; ++i)
                for (std::size_t j = r + 1; j < w.m.cols() && !fixed_entry; ++j)
                    if (w.m.at(i, j) % w.m.at(r, r) != 0) {
                        w.add_row(r, i, 1);
                        fixed_entry = true;
                    }
            if (!fixed_entry) break;
        }
        if (w.m.at(r, r) < 0) w.negate_row(r);
    }
    return {std::move(w.u), std::move(w.m), std::move(w.v)};
}

std::size_t integer_rank(const IntegerMatrix& m) { return smith_normal_form(m).rank(); }

Int determinant(IntegerMatrix m) {
    if (m.rows() != m.cols()) throw input_error("determinant needs a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    // Bareiss fraction-free elimination.
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m.at(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            m.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int value = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = value / prev;  // exact by the Bareiss identity
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

}  // namespace sc
