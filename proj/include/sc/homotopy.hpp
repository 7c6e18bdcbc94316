// Copyright 2026 the semicoarse contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sc/cube.hpp"
#include "sc/space.hpp"

namespace sc {

inline constexpr std::size_t default_node_budget = 200000;

// ---------------------------------------------------------------------------
// Basic cube-map operations

// Extension along the clamping retraction: coordinates above f's side are
// clamped to it. m_new must be at least the current side.
CubeMap clamp(const CubeMap& f, int m_new);

// Concatenation along the first axis after clamping. Requires equal dimension
// and target and the gluing condition f(m, a..) = g(0, a..) where both are
// defined; the assembled map is verified bornologous.
CubeMap star(const CubeMap& f, const CubeMap& g);

// Reversed path (n = 1 only).
CubeMap inverse_path(const CubeMap& f);

// Offsets of cube points held fixed across homotopy slices.
using OffsetSet = std::vector<std::size_t>;

OffsetSet path_endpoints(const Cube& cube);      // ∂I_m for n = 1: {0, m}
OffsetSet cube_boundary(const Cube& cube);       // ∂I_m^n
OffsetSet cube_open_box(const Cube& cube);       // J_m^{n-1}

// True iff the two slices fit as consecutive layers of a homotopy cylinder:
// (f(a), g(b)) is roof-related for every pair with sup-distance <= 1
// (including a = b), and f = g on `fixed`.
bool one_step_related(const CubeMap& f, const CubeMap& g, const OffsetSet& fixed = {});

// ---------------------------------------------------------------------------
// Homotopy certificates

struct Homotopy {
    Cube cube;
    SpacePtr target;
    std::vector<std::vector<VertexId>> slices;  // nonempty, offset-indexed grids
    OffsetSet fixed;

    CubeMap slice(std::size_t i) const { return CubeMap(cube, target, slices[i]); }
    CubeMap first() const { return slice(0); }
    CubeMap last() const { return slice(slices.size() - 1); }
};

struct VerifyResult {
    bool ok = false;
    std::size_t slice = 0;            // failing slice (pair index or slice index)
    std::size_t alpha = 0, beta = 0;  // failing offsets
    std::string reason;

    explicit operator bool() const { return ok; }
};

// Checks every slice bornologous, consecutive slices one-step related, and
// the fixed set held throughout.
VerifyResult verify_homotopy(const Homotopy& h);

// ---------------------------------------------------------------------------
// Displacement moves

// A failed adjacency hypothesis: the images of cube points alpha and beta
// (values value_a, value_b on the sweep-th intermediate map) are unrelated.
struct MoveWitness {
    std::size_t alpha = 0, beta = 0;
    VertexId value_a = 0, value_b = 0;
    int sweep = 0;
    std::string describe(const CubeMap& f) const;
};

std::optional<MoveWitness> plate_move_violation(const CubeMap& f, const Block& plate);

// Copies the plate one step along its axis, keeping the original values.
// Precondition (checked, witness reported): for every plate point a, f(a) is
// roof-related to f(b) for every b in the closed neighborhood of a + step.
CubeMap plate_move(const CubeMap& f, const Block& plate);

struct BlockMove {
    CubeMap result;
    Homotopy chain;  // slice chain from the input to the result
};

std::optional<MoveWitness> block_move_violation(const CubeMap& f, const Block& block, int k);

// Shifts the block k steps along its axis leaving a wake of the trailing
// face; realized as a chain of plate moves, each with its hypothesis checked.
BlockMove block_move(const CubeMap& f, const Block& block, int k);

// ---------------------------------------------------------------------------
// Search

enum class SearchStatus { certificate, distinct, exhausted };

struct SearchResult {
    SearchStatus status = SearchStatus::distinct;
    std::optional<Homotopy> certificate;
    std::size_t explored = 0;
};

// Breadth-first reachability over bornologous cube maps under the one-step
// relation, deterministic by lexicographic ordering of grids. `distinct`
// means the whole reachable component was enumerated without meeting g and
// is only meaningful at this fixed side.
SearchResult homotopic_search(const CubeMap& f, const CubeMap& g, const OffsetSet& fixed,
                              std::size_t node_budget = default_node_budget);

// Reachable component of f (grids, lex sorted). Used by exhaustive checks.
std::vector<std::vector<VertexId>> reachable_component(const CubeMap& f, const OffsetSet& fixed,
                                                       std::size_t node_budget);

// ---------------------------------------------------------------------------
// Cyclic targets, lifting, winding

// C_n with jumps 1..m: vertices named 0..n-1, (i, j) related iff the circular
// distance is at most m.
Space cyclic_space(int n, int m = 1);

struct WindingCertificate {
    std::vector<long long> lift;
    bool loop = false;
    long long winding = 0;        // loops only
    long long displacement = 0;   // lift.back() - lift.front()
};

// Lifts a path in the standard cyclic space through the projection z -> z mod
// n; steps are the unique residues in [-m, m] (requires n > 2m). The default
// gate additionally requires ceil(n/m) >= 4, the regime where winding is a
// homotopy invariant; pass allow_untrusted_regime to lift outside it.
WindingCertificate lift_path(const CubeMap& f, int jump, bool allow_untrusted_regime = false);

enum class Pi1 { trivial, infinite_cyclic };

// Fundamental group of (C_n, jumps 1..m): infinite cyclic iff ceil(n/m) >= 4.
Pi1 pi1_cyclic(long long n, long long m);

// Relabeling of a space isomorphic to the standard cyclic model, anchored at
// `anchor` (placed at position 0). order[i] is the vertex at position i.
struct CyclicModel {
    int n = 0;
    int jump = 0;
    std::vector<VertexId> order;
};
std::optional<CyclicModel> recognize_cyclic(const Space& x, VertexId anchor);

// ---------------------------------------------------------------------------
// Normal forms and coarse triviality

bool is_unidirectional(const CubeMap& f);

struct UnidirectionalReduction {
    CubeMap result;
    Homotopy certificate;  // slice chain at the original side; ends at the
                           // clamp re-embedding of result
};

// Deletes interior points whose two-step neighbors are already roof-related
// (path maps only), then trims trailing duplicates.
UnidirectionalReduction unidirectional_reduce(const CubeMap& f);

struct TrivialityReport {
    std::size_t samples = 0;
    std::size_t certified = 0;
    std::vector<std::vector<VertexId>> failures;  // offending loops, by target id
};

// For a coarse space (fixpoint of set_product_extension, checked), random
// based loops must all contract to the constant map.
TrivialityReport coarse_triviality_check(const Space& x, std::size_t samples, std::uint64_t seed,
                                         std::size_t node_budget = default_node_budget);

}  // namespace sc
