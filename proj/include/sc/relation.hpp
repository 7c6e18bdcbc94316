// Copyright 2026 the semicoarse contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sc {

// Dense bit matrix over {0..n-1} x {0..n-1}. Rows are 64-bit word blocks so
// that relational composition reduces to word-wise ORs of rows.
class RelationMatrix {
public:
    RelationMatrix() = default;
    explicit RelationMatrix(std::size_t n)
        : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

    std::size_t size() const { return n_; }
    std::size_t words_per_row() const { return words_; }

    bool get(std::size_t i, std::size_t j) const {
        return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
    }
    void set(std::size_t i, std::size_t j) {
        bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    }
    void set_symmetric(std::size_t i, std::size_t j) {
        set(i, j);
        set(j, i);
    }
    void set_diagonal() {
        for (std::size_t i = 0; i < n_; ++i) set(i, i);
    }

    const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }
    std::uint64_t* row(std::size_t i) { return bits_.data() + i * words_; }

    // Number of set pairs (ordered, diagonal included once per vertex).
    std::size_t count() const;

    bool is_symmetric() const;
    bool has_diagonal() const;

    bool operator==(const RelationMatrix& other) const = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace sc
