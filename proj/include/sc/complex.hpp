// Copyright 2026 the semicoarse contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sc/matrix.hpp"
#include "sc/space.hpp"

namespace sc {

// Simplices of one dimension, stored flat as ascending (q+1)-tuples of vertex
// ids in lexicographic order.
struct SimplexList {
    std::size_t arity = 1;
    std::vector<VertexId> flat;

    std::size_t count() const { return arity == 0 ? 0 : flat.size() / arity; }
    std::span<const VertexId> operator[](std::size_t i) const {
        return {flat.data() + i * arity, arity};
    }
    std::optional<std::size_t> find(std::span<const VertexId> simplex) const;  // binary search
};

// Clique (flag) complex of the off-diagonal roof, closed under faces, built
// up to the dimension cap.
struct CliqueComplex {
    SpacePtr space;
    int max_dim = 0;
    std::vector<SimplexList> levels;  // levels[q] holds the q-simplices

    std::size_t count(int q) const {
        return (q >= 0 && q <= max_dim) ? levels[q].count() : 0;
    }
};

CliqueComplex build_complex(SpacePtr space, int max_dim);

// Matrix of the alternating-sign boundary in the canonical ascending-tuple
// bases; rows are (q-1)-simplices, columns q-simplices. Requires 1 <= q <=
// max_dim.
IntegerMatrix boundary(const CliqueComplex& complex, int q);

}  // namespace sc
