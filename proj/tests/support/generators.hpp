// Copyright 2026 the semicoarse contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sc/homology.hpp"
#include "sc/space.hpp"

namespace sc::testing {

using Rng = std::mt19937_64;

inline std::vector<std::string> vertex_names(std::size_t n) {
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) names[i] = "v" + std::to_string(i);
    return names;
}

inline Space random_space(Rng& rng, std::size_t min_vertices = 1, std::size_t max_vertices = 10) {
    const std::size_t n =
        std::uniform_int_distribution<std::size_t>(min_vertices, max_vertices)(rng);
    const double density = std::uniform_real_distribution<double>(0.05, 0.9)(rng);
    auto names = vertex_names(n);
    std::vector<std::pair<std::string, std::string>> pairs;
    std::bernoulli_distribution edge(density);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (edge(rng)) pairs.emplace_back(names[i], names[j]);
    return new_space(std::move(names), pairs);
}

inline Space random_connected_space(Rng& rng, std::size_t n, double extra_density = 0.2) {
    auto names = vertex_names(n);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 1; i < n; ++i) {
        const std::size_t parent = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
        pairs.emplace_back(names[parent], names[i]);
    }
    std::bernoulli_distribution edge(extra_density);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (edge(rng)) pairs.emplace_back(names[i], names[j]);
    return new_space(std::move(names), pairs);
}

// Greedy assignment along a traversal; falls back to a constant map when the
// target is too sparse for the attempt.
inline VertexMap random_bornologous_map(Rng& rng, SpacePtr source, SpacePtr target,
                                        int attempts = 25) {
    const std::size_t n = source->size();
    for (int attempt = 0; attempt < attempts; ++attempt) {
        std::vector<VertexId> table(n, 0);
        std::vector<bool> assigned(n, false);
        bool ok = true;
        for (VertexId v = 0; v < n && ok; ++v) {
            std::vector<VertexId> candidates;
            for (VertexId w = 0; w < target->size(); ++w) {
                bool fits = true;
                for (VertexId u : source->neighborhood(v))
                    if (assigned[u] && !target->related(table[u], w)) {
                        fits = false;
                        break;
                    }
                if (fits) candidates.push_back(w);
            }
            if (candidates.empty()) {
                ok = false;
                break;
            }
            table[v] = candidates[std::uniform_int_distribution<std::size_t>(
                0, candidates.size() - 1)(rng)];
            assigned[v] = true;
        }
        if (ok) return VertexMap(source, target, std::move(table));
    }
    const VertexId value =
        std::uniform_int_distribution<VertexId>(0, static_cast<VertexId>(target->size() - 1))(rng);
    return VertexMap(source, target, std::vector<VertexId>(n, value));
}

// One random single-vertex move keeping the map bornologous and one-step
// related to the input; nullopt when every vertex is pinned.
inline std::optional<VertexMap> random_one_step_move(Rng& rng, const VertexMap& f) {
    const Space& src = f.source();
    const Space& dst = f.target();
    std::vector<VertexId> order(src.size());
    for (VertexId v = 0; v < src.size(); ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    for (VertexId v : order) {
        std::vector<VertexId> moves;
        for (VertexId w = 0; w < dst.size(); ++w) {
            if (w == f(v)) continue;
            bool fits = true;
            for (VertexId u : src.neighborhood(v))
                if (!dst.related(f(u), w)) {
                    fits = false;
                    break;
                }
            if (fits) moves.push_back(w);
        }
        if (moves.empty()) continue;
        auto table = f.table();
        table[v] = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
        return VertexMap(f.source_ptr(), f.target_ptr(), std::move(table));
    }
    return std::nullopt;
}

// Chain of one-step slices starting at f (a space-level homotopy
// certificate); consecutive slices satisfy cylinder_related.
inline std::vector<VertexMap> random_one_step_chain(Rng& rng, const VertexMap& f,
                                                    std::size_t steps) {
    std::vector<VertexMap> chain{f};
    for (std::size_t s = 0; s < steps; ++s) {
        auto next = random_one_step_move(rng, chain.back());
        if (!next) break;
        chain.push_back(std::move(*next));
    }
    return chain;
}

}  // namespace sc::testing
