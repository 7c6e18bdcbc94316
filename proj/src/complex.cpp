// Copyright 2026 the semicoarse contributors
// SPDX-License-Identifier: Apache-2.0

#include "sc/complex.hpp"

#include <algorithm>

#include "sc/errors.hpp"
#include "sc/kernels.hpp"

namespace sc {

std::optional<std::size_t> SimplexList::find(std::span<const VertexId> simplex) const {
    if (simplex.size() != arity) return std::nullopt;
    const std::size_t n = count();
    std::size_t lo = 0, hi = n;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        const auto probe = (*this)[mid];
        const auto order = std::lexicographical_compare_three_way(probe.begin(), probe.end(),
                                                                  simplex.begin(), simplex.end());
        if (order == std::strong_ordering::equal) return mid;
        if (order == std::strong_ordering::less)
            lo = mid + 1;
        else
            hi = mid;
    }
    return std::nullopt;
}

CliqueComplex build_complex(SpacePtr space, int max_dim) {
    if (max_dim < 0) throw input_error("dimension cap must be nonnegative");
    CliqueComplex complex;
    complex.space = space;
    complex.max_dim = max_dim;
    complex.levels.resize(max_dim + 1);

    SimplexList& vertices = complex.levels[0];
    vertices.arity = 1;
    vertices.flat.resize(space->size());
    for (VertexId v = 0; v < space->size(); ++v) vertices.flat[v] = v;

    for (int q = 1; q <= max_dim; ++q) {
        SimplexList& level = complex.levels[q];
        level.arity = static_cast<std::size_t>(q) + 1;
        level.flat = kernels::expand_cliques(space->roof(), complex.levels[q - 1].flat,
                                             static_cast<std::size_t>(q));
        if (level.flat.empty()) break;
    }
    return complex;
}

IntegerMatrix boundary(const CliqueComplex& complex, int q) {
    if (q < 1 || q > complex.max_dim) throw input_error("boundary dimension out of range");
    const SimplexList& faces = complex.levels[q - 1];
    const SimplexList& cells = complex.levels[q];
    IntegerMatrix d(faces.count(), cells.count());

    std::vector<VertexId> face(static_cast<std::size_t>(q));
    for (std::size_t c = 0; c < cells.count(); ++c) {
        const auto cell = cells[c];
        int sign = 1;
        for (int drop = 0; drop <= q; ++drop) {
            std::size_t w = 0;
            for (int i = 0; i <= q; ++i)
                if (i != drop) face[w++] = cell[i];
            const auto row = faces.find(face);
            if (!row) throw input_error("complex is not closed under faces");
            d.at(*row, c) += sign;
            sign = -sign;
        }
    }
    return d;
}

}  // namespace sc
