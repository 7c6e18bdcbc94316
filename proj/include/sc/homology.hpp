// Copyright 2026 the semicoarse contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "sc/complex.hpp"
#include "sc/matrix.hpp"
#include "sc/space.hpp"

namespace sc {

struct HomologyGroup {
    int dim = 0;
    std::size_t betti = 0;
    std::vector<Int> torsion;  // divisibility chain, each > 1
    bool cap_limited = false;  // rank of the next boundary unavailable
};

// Integer homology of the clique complex: betti_q from the ranks of the two
// adjacent boundaries, torsion from the nonunit invariant factors of the
// next one. The group at the cap dimension is flagged.
std::vector<HomologyGroup> homology(const Space& x, int max_dim);
std::vector<HomologyGroup> homology(const CliqueComplex& complex);

struct ChainMap {
    std::vector<IntegerMatrix> dims;  // dims[q]: C_q(source) -> C_q(target)
};

// Chain map of a bornologous vertex map: degenerate images vanish, otherwise
// the sorted image tuple with its permutation sign. Commutes with the
// boundaries.
ChainMap induced_map(const VertexMap& f, const CliqueComplex& source, const CliqueComplex& target);

// One-step condition for the constant cylinder over the source: (f(x), g(y))
// roof-related for every source roof pair (x, y), diagonal included.
bool cylinder_related(const VertexMap& f, const VertexMap& g);
std::optional<std::pair<VertexId, VertexId>> cylinder_violation(const VertexMap& f,
                                                                const VertexMap& g);

// The prism operator for a one-step pair: matrices P_q : C_q(source) ->
// C_{q+1}(target) with boundary P + P boundary = g_# - f_# in every computed
// dimension (q < max_dim of the source complex).
std::vector<IntegerMatrix> prism_homotopy(const VertexMap& f, const VertexMap& g,
                                          const CliqueComplex& source,
                                          const CliqueComplex& target);

// Independent oracle: homology computed literally on ordered tuples (with the
// degenerate-tuple-is-zero convention). Tiny inputs only: at most 6 vertices
// and max_dim <= 2.
std::vector<HomologyGroup> ordered_chain_oracle(const Space& x, int max_dim);

// Basis of the integer kernel of `m` (columns), via its Smith decomposition.
std::vector<std::vector<Int>> kernel_basis(const IntegerMatrix& m);

}  // namespace sc
