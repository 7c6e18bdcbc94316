// Copyright 2026 the semicoarse contributors
// SPDX-License-Identifier: Apache-2.0

#include "sc/homotopy.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

#include "sc/kernels.hpp"

namespace sc {

namespace {

std::string coords_text(const Cube& cube, std::size_t offset) {
    return cube_vertex_name(cube.coords(offset));
}

// Closed sup-distance-1 neighborhoods of every cube point, ascending.
std::vector<std::vector<std::uint32_t>> closed_neighborhoods(const Cube& cube) {
    const std::size_t count = cube.vertex_count();
    std::vector<std::vector<std::uint32_t>> nbh(count);
    std::vector<int> a(cube.n), b(cube.n);
    for (std::size_t u = 0; u < count; ++u) {
        cube.decode(u, a);
        std::vector<int> delta(cube.n, -1);
        for (;;) {
            bool ok = true;
            for (int i = 0; i < cube.n; ++i) {
                b[i] = a[i] + delta[i];
                if (b[i] < 0 || b[i] > cube.m) {
                    ok = false;
                    break;
                }
            }
            if (ok) nbh[u].push_back(static_cast<std::uint32_t>(cube.encode(b)));
            int i = 0;
            while (i < cube.n && delta[i] == 1) delta[i++] = -1;
            if (i == cube.n) break;
            ++delta[i];
        }
        std::sort(nbh[u].begin(), nbh[u].end());
    }
    return nbh;
}

void require_same_shape(const CubeMap& f, const CubeMap& g) {
    if (!(f.cube() == g.cube())) throw input_error("cube maps have mismatched cubes");
    if (!(f.target() == g.target())) throw input_error("cube maps have mismatched targets");
}

// Enumerates the points of an axis-aligned box by offset.
std::vector<std::size_t> box_offsets(const Cube& cube, const std::vector<int>& lo,
                                     const std::vector<int>& hi) {
    std::vector<std::size_t> out;
    std::vector<int> c(lo);
    for (;;) {
        out.push_back(cube.encode(c));
        int i = cube.n - 1;
        while (i >= 0 && c[i] == hi[i]) {
            c[i] = lo[i];
            --i;
        }
        if (i < 0) break;
        ++c[i];
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Basic operations

CubeMap clamp(const CubeMap& f, int m_new) {
    const Cube& cube = f.cube();
    if (m_new < cube.m) throw input_error("clamp side must not shrink the cube");
    if (m_new == cube.m) return f;
    const Cube big{cube.n, m_new};
    std::vector<VertexId> grid(big.vertex_count());
    std::vector<int> c(cube.n);
    for (std::size_t off = 0; off < grid.size(); ++off) {
        big.decode(off, c);
        for (int i = 0; i < cube.n; ++i) c[i] = std::min(c[i], cube.m);
        grid[off] = f.at(c);
    }
    return CubeMap(big, f.target_ptr(), std::move(grid));
}

CubeMap star(const CubeMap& f, const CubeMap& g) {
    if (f.cube().n != g.cube().n) throw input_error("star requires equal dimensions");
    if (!(f.target() == g.target())) throw input_error("star requires a common target");
    const int n = f.cube().n;
    const int m = f.cube().m, mp = g.cube().m;

    // Gluing condition on the shared face, where both maps are defined.
    {
        const int side = std::min(m, mp);
        std::vector<int> a(n, 0), fa(n), ga(n);
        for (;;) {
            fa = a;
            fa[0] = m;
            ga = a;
            ga[0] = 0;
            if (f.at(fa) != g.at(ga))
                throw precondition_error(
                    "star gluing condition violated at (" + cube_vertex_name(fa) + "): '" +
                        f.target().name(f.at(fa)) + "' vs '" + g.target().name(g.at(ga)) + "'",
                    cube_vertex_name(fa));
            int i = n - 1;
            while (i >= 1 && a[i] == side) a[i--] = 0;
            if (i < 1) break;
            ++a[i];
        }
    }

    const Cube joined{n, m + mp};
    std::vector<VertexId> grid(joined.vertex_count());
    std::vector<int> c(n), d(n);
    for (std::size_t off = 0; off < grid.size(); ++off) {
        joined.decode(off, c);
        if (c[0] <= m) {
            for (int i = 0; i < n; ++i) d[i] = std::min(c[i], m);
            grid[off] = f.at(d);
        } else {
            d[0] = std::min(c[0] - m, mp);
            for (int i = 1; i < n; ++i) d[i] = std::min(c[i], mp);
            grid[off] = g.at(d);
        }
    }
    CubeMap out(joined, f.target_ptr(), std::move(grid));
    if (auto bad = bornologous_violation(out))
        throw precondition_error("star output is not bornologous at (" +
                                     coords_text(joined, bad->first) + ") ~ (" +
                                     coords_text(joined, bad->second) + ")",
                                 coords_text(joined, bad->first));
    return out;
}

CubeMap inverse_path(const CubeMap& f) {
    if (f.cube().n != 1) throw input_error("inverse_path is defined for paths only");
    std::vector<VertexId> grid(f.grid().rbegin(), f.grid().rend());
    return CubeMap(f.cube(), f.target_ptr(), std::move(grid));
}

OffsetSet path_endpoints(const Cube& cube) {
    if (cube.n != 1) throw input_error("path_endpoints is defined for paths only");
    if (cube.m == 0) return {0};
    return {0, static_cast<std::size_t>(cube.m)};
}

OffsetSet cube_boundary(const Cube& cube) {
    OffsetSet out;
    std::vector<int> c(cube.n);
    for (std::size_t off = 0; off < cube.vertex_count(); ++off) {
        cube.decode(off, c);
        for (int i = 0; i < cube.n; ++i) {
            if (c[i] == 0 || c[i] == cube.m) {
                out.push_back(off);
                break;
            }
        }
    }
    return out;
}

OffsetSet cube_open_box(const Cube& cube) {
    OffsetSet out;
    std::vector<int> c(cube.n);
    for (std::size_t off : cube_boundary(cube)) {
        cube.decode(off, c);
        if (c[cube.n - 1] == 0) {
            bool other = false;
            for (int i = 0; i < cube.n - 1; ++i) other |= (c[i] == 0 || c[i] == cube.m);
            if (!other) continue;  // interior of the distinguished open face
        }
        out.push_back(off);
    }
    return out;
}

bool one_step_related(const CubeMap& f, const CubeMap& g, const OffsetSet& fixed) {
    require_same_shape(f, g);
    for (std::size_t off : fixed)
        if (f.at_offset(off) != g.at_offset(off)) return false;
    const auto nbh = closed_neighborhoods(f.cube());
    const Space& target = f.target();
    for (std::size_t u = 0; u < nbh.size(); ++u)
        for (std::uint32_t v : nbh[u])
            if (!target.related(f.at_offset(u), g.at_offset(v))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Certificates

VerifyResult verify_homotopy(const Homotopy& h) {
    if (h.slices.empty()) throw input_error("homotopy has no slices");
    const std::size_t cells = h.cube.vertex_count();
    for (const auto& s : h.slices)
        if (s.size() != cells) throw input_error("homotopy slice does not cover the cube");

    const auto nbh = closed_neighborhoods(h.cube);
    const RelationMatrix& roof = h.target->roof();

    for (std::size_t i = 0; i < h.slices.size(); ++i) {
        CubeMap slice = h.slice(i);
        if (auto bad = bornologous_violation(slice))
            return {false, i, bad->first, bad->second, "slice " + std::to_string(i) +
                        " is not bornologous at (" + coords_text(h.cube, bad->first) + ") ~ (" +
                        coords_text(h.cube, bad->second) + ")"};
        if (i == 0) continue;
        const auto& prev = h.slices[i - 1];
        const auto& cur = h.slices[i];
        for (std::size_t off : h.fixed)
            if (prev[off] != cur[off])
                return {false, i, off, off,
                        "fixed point (" + coords_text(h.cube, off) + ") moves at slice " +
                            std::to_string(i)};
        // Cross-slice pairs, batched through the roof-check kernel.
        std::vector<std::uint32_t> pairs;
        pairs.reserve(nbh.size() * (1u << h.cube.n));
        for (std::size_t u = 0; u < nbh.size(); ++u)
            for (std::uint32_t v : nbh[u]) {
                pairs.push_back(prev[u]);
                pairs.push_back(cur[v]);
            }
        const std::size_t bad = kernels::first_unrelated(roof, pairs);
        if (bad != kernels::npos) {
            std::size_t u = 0, seen = 0;
            std::uint32_t v = 0;
            for (; u < nbh.size(); ++u) {
                if (bad < seen + nbh[u].size()) {
                    v = nbh[u][bad - seen];
                    break;
                }
                seen += nbh[u].size();
            }
            return {false, i, u, v,
                    "slices " + std::to_string(i - 1) + "," + std::to_string(i) +
                        " are not one-step related at (" + coords_text(h.cube, u) + ") ~ (" +
                        coords_text(h.cube, v) + ")"};
        }
    }
    return {true, 0, 0, 0, ""};
}

// ---------------------------------------------------------------------------
// Displacement moves

std::string MoveWitness::describe(const CubeMap& f) const {
    std::ostringstream out;
    out << "f(" << coords_text(f.cube(), alpha) << ") = '" << f.target().name(value_a)
        << "' is not roof-related to the image '" << f.target().name(value_b) << "' at ("
        << coords_text(f.cube(), beta) << ")";
    if (sweep > 0) out << " after sweep " << sweep;
    return out.str();
}

namespace {

// Hypothesis of the plate displacement: every plate value must be related to
// every value on the closed neighborhood of the shifted point.
std::optional<MoveWitness> plate_violation_on(const CubeMap& f, const Block& plate, int sweep) {
    const Cube& cube = f.cube();
    const Space& target = f.target();
    const int step = step_of(plate.dir);
    std::vector<int> shifted(cube.n), b(cube.n);
    for (std::size_t alpha : box_offsets(cube, plate.lo, plate.hi)) {
        cube.decode(alpha, shifted);
        shifted[plate.axis] += step;
        // Closed neighborhood of the shifted point, clipped to the cube (the
        // shifted point itself may fall outside).
        std::vector<int> delta(cube.n, -1);
        for (;;) {
            bool ok = true;
            for (int i = 0; i < cube.n; ++i) {
                b[i] = shifted[i] + delta[i];
                if (b[i] < 0 || b[i] > cube.m) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                const std::size_t beta = cube.encode(b);
                if (!target.related(f.at_offset(alpha), f.at_offset(beta)))
                    return MoveWitness{alpha, beta, f.at_offset(alpha), f.at_offset(beta), sweep};
            }
            int i = 0;
            while (i < cube.n && delta[i] == 1) delta[i++] = -1;
            if (i == cube.n) break;
            ++delta[i];
        }
    }
    return std::nullopt;
}

CubeMap apply_plate(const CubeMap& f, const Block& plate) {
    const Cube& cube = f.cube();
    const int step = step_of(plate.dir);
    std::vector<VertexId> grid = f.grid();
    std::vector<int> c(cube.n);
    for (std::size_t alpha : box_offsets(cube, plate.lo, plate.hi)) {
        cube.decode(alpha, c);
        c[plate.axis] += step;
        if (cube.contains(c)) grid[cube.encode(c)] = f.at_offset(alpha);
    }
    return CubeMap(cube, f.target_ptr(), std::move(grid));
}

Block plate_at_level(const Block& block, int level) {
    Block plate = block;
    plate.lo[block.axis] = plate.hi[block.axis] = level;
    return plate;
}

// Runs the k-sweep plate chain. When `witness_only` the first violation is
// returned and nothing is thrown; otherwise violations throw and the chain of
// slices is appended to `chain`.
std::optional<MoveWitness> run_block_move(const CubeMap& f, const Block& block, int k,
                                          bool witness_only, CubeMap* result,
                                          std::vector<std::vector<VertexId>>* chain) {
    block.validate(f.cube());
    if (k < 0) throw input_error("block displacement count must be nonnegative");
    const int step = step_of(block.dir);
    if (block.lo[block.axis] + k * step < 0 || block.hi[block.axis] + k * step > f.cube().m)
        throw input_error("displaced block leaves the cube");

    CubeMap current = f;
    if (chain) chain->push_back(current.grid());
    for (int sweep = 0; sweep < k; ++sweep) {
        const int lo = block.lo[block.axis] + sweep * step;
        const int hi = block.hi[block.axis] + sweep * step;
        const int leading = block.dir == Direction::forward ? hi : lo;
        const int trailing = block.dir == Direction::forward ? lo : hi;
        for (int level = leading; /* leading face first */;
             level -= step) {
            const Block plate = plate_at_level(block, level);
            if (auto witness = plate_violation_on(current, plate, sweep)) {
                if (witness_only) return witness;
                throw precondition_error("displacement hypothesis violated: " +
                                             witness->describe(current),
                                         witness->describe(current));
            }
            current = apply_plate(current, plate);
            if (chain) chain->push_back(current.grid());
            if (level == trailing) break;
        }
    }
    if (result) *result = current;
    return std::nullopt;
}

}  // namespace

std::optional<MoveWitness> plate_move_violation(const CubeMap& f, const Block& plate) {
    plate.validate(f.cube());
    if (!plate.is_plate()) throw input_error("plate must be flat on its axis");
    return plate_violation_on(f, plate, 0);
}

CubeMap plate_move(const CubeMap& f, const Block& plate) {
    if (auto witness = plate_move_violation(f, plate))
        throw precondition_error("plate hypothesis violated: " + witness->describe(f),
                                 witness->describe(f));
    return apply_plate(f, plate);
}

std::optional<MoveWitness> block_move_violation(const CubeMap& f, const Block& block, int k) {
    return run_block_move(f, block, k, true, nullptr, nullptr);
}

BlockMove block_move(const CubeMap& f, const Block& block, int k) {
    CubeMap result = f;
    std::vector<std::vector<VertexId>> chain;
    run_block_move(f, block, k, false, &result, &chain);
    return {result, Homotopy{f.cube(), f.target_ptr(), std::move(chain), {}}};
}

// ---------------------------------------------------------------------------
// Search

namespace {

struct SuccessorContext {
    const Cube* cube;
    const Space* target;
    const std::vector<std::vector<std::uint32_t>>* nbh;     // closed neighborhoods
    std::vector<std::vector<std::uint32_t>> earlier_nbrs;   // strictly smaller neighbors
    std::vector<bool> fixed_mask;

    SuccessorContext(const Cube& c, const Space& t,
                     const std::vector<std::vector<std::uint32_t>>& n, const OffsetSet& fixed)
        : cube(&c), target(&t), nbh(&n) {
        earlier_nbrs.resize(n.size());
        for (std::size_t u = 0; u < n.size(); ++u)
            for (std::uint32_t v : n[u])
                if (v < u) earlier_nbrs[u].push_back(v);
        fixed_mask.assign(n.size(), false);
        for (std::size_t off : fixed) fixed_mask[off] = true;
    }
};

// All bornologous grids one step away from `state` (lexicographic order,
// `state` itself included).
std::vector<std::vector<VertexId>> successors(const SuccessorContext& ctx,
                                              const std::vector<VertexId>& state) {
    const std::size_t cells = state.size();
    const std::size_t tsize = ctx.target->size();
    const std::size_t words = (tsize + 63) / 64;
    const RelationMatrix& roof = ctx.target->roof();

    // allowed[v]: targets related to every image on the closed neighborhood.
    std::vector<std::uint64_t> allowed(cells * words, ~std::uint64_t{0});
    for (std::size_t v = 0; v < cells; ++v) {
        std::uint64_t* row = allowed.data() + v * words;
        for (std::uint32_t u : (*ctx.nbh)[v]) {
            const std::uint64_t* r = roof.row(state[u]);
            for (std::size_t w = 0; w < words; ++w) row[w] &= r[w];
        }
        if (ctx.fixed_mask[v]) {
            for (std::size_t w = 0; w < words; ++w) row[w] = 0;
            row[state[v] / 64] = std::uint64_t{1} << (state[v] % 64);
        }
    }

    std::vector<std::vector<VertexId>> out;
    std::vector<VertexId> partial(cells, 0);
    // Iterative DFS over cells in offset order.
    std::vector<std::uint32_t> choice(cells, 0);
    std::vector<std::vector<VertexId>> options(cells);
    std::size_t depth = 0;
    for (;;) {
        if (choice[depth] == 0) {
            // Materialize candidates for this depth.
            options[depth].clear();
            const std::uint64_t* row = allowed.data() + depth * words;
            for (std::size_t w = 0; w < words; ++w) {
                std::uint64_t bits = row[w];
                while (bits) {
                    const std::size_t t = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    if (t >= tsize) break;
                    bool ok = true;
                    for (std::uint32_t u : ctx.earlier_nbrs[depth]) {
                        if (!roof.get(partial[u], t)) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) options[depth].push_back(static_cast<VertexId>(t));
                }
            }
        }
        if (choice[depth] >= options[depth].size()) {
            if (depth == 0) break;
            choice[depth] = 0;
            --depth;
            ++choice[depth];
            continue;
        }
        partial[depth] = options[depth][choice[depth]];
        if (depth + 1 == cells) {
            out.push_back(partial);
            ++choice[depth];
        } else {
            ++depth;
            choice[depth] = 0;
        }
    }
    return out;
}

struct Bfs {
    std::vector<std::vector<VertexId>> states;
    std::vector<std::size_t> parents;
    std::map<std::vector<VertexId>, std::size_t> seen;

    std::size_t add(std::vector<VertexId> grid, std::size_t parent) {
        const std::size_t id = states.size();
        seen.emplace(grid, id);
        states.push_back(std::move(grid));
        parents.push_back(parent);
        return id;
    }
};

constexpr std::size_t kNoGoal = static_cast<std::size_t>(-1);

// Breadth-first enumeration of the reachable component. Returns the goal id
// when found; fills `bfs` with everything discovered. Throws nothing on
// budget overrun: sets *budget_hit instead.
std::size_t bfs_run(const CubeMap& start, const std::vector<VertexId>* goal, const OffsetSet& fixed,
                    std::size_t node_budget, Bfs& bfs, bool* budget_hit) {
    const auto nbh = closed_neighborhoods(start.cube());
    SuccessorContext ctx(start.cube(), start.target(), nbh, fixed);

    bfs.add(start.grid(), kNoGoal);
    if (goal && start.grid() == *goal) return 0;
    std::vector<std::size_t> frontier{0};

    while (!frontier.empty()) {
        std::sort(frontier.begin(), frontier.end(), [&](std::size_t a, std::size_t b) {
            return bfs.states[a] < bfs.states[b];
        });
        std::vector<std::vector<std::vector<VertexId>>> expanded(frontier.size());
        const bool parallel = kernels::parallel_enabled() && frontier.size() >= 8;
        if (parallel) {
            const std::int64_t count = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel for schedule(dynamic, 1)
            for (std::int64_t i = 0; i < count; ++i)
                expanded[i] = successors(ctx, bfs.states[frontier[i]]);
        } else {
            for (std::size_t i = 0; i < frontier.size(); ++i)
                expanded[i] = successors(ctx, bfs.states[frontier[i]]);
        }
        std::vector<std::size_t> next;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            for (auto& grid : expanded[i]) {
                if (bfs.seen.count(grid)) continue;
                if (bfs.states.size() >= node_budget) {
                    *budget_hit = true;
                    return kNoGoal;
                }
                const std::size_t id = bfs.add(std::move(grid), frontier[i]);
                if (goal && bfs.states[id] == *goal) return id;
                next.push_back(id);
            }
        }
        frontier = std::move(next);
    }
    return kNoGoal;
}

}  // namespace

SearchResult homotopic_search(const CubeMap& f, const CubeMap& g, const OffsetSet& fixed,
                              std::size_t node_budget) {
    require_same_shape(f, g);
    if (node_budget == 0) throw input_error("node budget must be positive");
    if (auto bad = bornologous_violation(f))
        throw precondition_error("search start is not bornologous at (" +
                                 coords_text(f.cube(), bad->first) + ")");
    if (auto bad = bornologous_violation(g))
        throw precondition_error("search goal is not bornologous at (" +
                                 coords_text(g.cube(), bad->first) + ")");
    for (std::size_t off : fixed)
        if (f.at_offset(off) != g.at_offset(off))
            throw precondition_error("maps differ on the fixed set at (" +
                                     coords_text(f.cube(), off) + ")");

    Bfs bfs;
    bool budget_hit = false;
    const std::vector<VertexId> goal = g.grid();
    const std::size_t found = bfs_run(f, &goal, fixed, node_budget, bfs, &budget_hit);

    SearchResult result;
    result.explored = bfs.states.size();
    if (found != kNoGoal) {
        std::vector<std::vector<VertexId>> slices;
        for (std::size_t id = found; id != kNoGoal; id = bfs.parents[id])
            slices.push_back(bfs.states[id]);
        std::reverse(slices.begin(), slices.end());
        result.status = SearchStatus::certificate;
        result.certificate = Homotopy{f.cube(), f.target_ptr(), std::move(slices), fixed};
    } else if (budget_hit) {
        result.status = SearchStatus::exhausted;
    } else {
        result.status = SearchStatus::distinct;
    }
    return result;
}

std::vector<std::vector<VertexId>> reachable_component(const CubeMap& f, const OffsetSet& fixed,
                                                       std::size_t node_budget) {
    if (node_budget == 0) throw input_error("node budget must be positive");
    if (auto bad = bornologous_violation(f))
        throw precondition_error("component seed is not bornologous at (" +
                                 coords_text(f.cube(), bad->first) + ")");
    Bfs bfs;
    bool budget_hit = false;
    bfs_run(f, nullptr, fixed, node_budget, bfs, &budget_hit);
    if (budget_hit) throw budget_exhausted("component enumeration exceeded the node budget");
    std::vector<std::vector<VertexId>> grids = std::move(bfs.states);
    std::sort(grids.begin(), grids.end());
    return grids;
}

// ---------------------------------------------------------------------------
// Cyclic targets

Space cyclic_space(int n, int m) {
    if (n < 1) throw input_error("cyclic space needs at least one vertex");
    if (m < 1) throw input_error("cyclic jump must be at least 1");
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
    std::vector<std::pair<std::string, std::string>> edges;
    for (int k = 0; k < n; ++k)
        for (int i = 1; i <= m; ++i) edges.emplace_back(names[k], names[(k + i) % n]);
    return new_space(std::move(names), edges);
}

WindingCertificate lift_path(const CubeMap& f, int jump, bool allow_untrusted_regime) {
    if (f.cube().n != 1) throw input_error("lift_path is defined for paths only");
    if (jump < 1) throw input_error("cyclic jump must be at least 1");
    const Space& target = f.target();
    const long long n = static_cast<long long>(target.size());
    if (n <= 2 * jump)
        throw input_error("unsupported cyclic space: residues in [-m, m] are not unique (n <= 2m)");
    if (!allow_untrusted_regime && (n + jump - 1) / jump < 4)
        throw input_error("winding outside the trusted regime (ceil(n/m) < 4); "
                          "the fundamental group is trivial here");
    if (!(target == cyclic_space(static_cast<int>(n), jump)))
        throw input_error("target is not the standard cyclic space; relabel first");
    if (auto bad = bornologous_violation(f))
        throw precondition_error("path is not bornologous at offset " +
                                 std::to_string(bad->first));

    std::vector<long long> values(f.grid().size());
    for (std::size_t i = 0; i < values.size(); ++i)
        values[i] = std::stoll(target.name(f.at_offset(i)));
    if (values[0] != 0) throw input_error("path must start at vertex 0; translate first");

    WindingCertificate cert;
    cert.lift.resize(values.size());
    cert.lift[0] = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        long long r = ((values[i] - values[i - 1]) % n + n) % n;
        const long long step = r <= jump ? r : r - n;
        cert.lift[i] = cert.lift[i - 1] + step;
    }
    cert.displacement = cert.lift.back() - cert.lift.front();
    cert.loop = values.back() == 0;
    if (cert.loop) cert.winding = cert.displacement / n;
    return cert;
}

Pi1 pi1_cyclic(long long n, long long m) {
    if (n < 1) throw input_error("cycle size must be at least 1");
    if (m < 1) throw input_error("cyclic jump must be at least 1");
    return (n + m - 1) / m >= 4 ? Pi1::infinite_cyclic : Pi1::trivial;
}

namespace {

bool matches_cyclic_model(const Space& x, const std::vector<VertexId>& order, int jump) {
    const int n = static_cast<int>(order.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int dist = std::min((j - i + n) % n, (i - j + n) % n);
            if (x.related(order[i], order[j]) != (dist <= jump)) return false;
        }
    return true;
}

bool recognize_backtrack(const Space& x, int jump, std::vector<VertexId>& order,
                         std::vector<bool>& used, std::size_t pos, std::size_t& nodes) {
    const std::size_t n = x.size();
    if (++nodes > 1000000) return false;
    if (pos == n) return matches_cyclic_model(x, order, jump);
    for (VertexId u = 0; u < n; ++u) {
        if (used[u]) continue;
        bool ok = true;
        for (std::size_t back = 1; back <= static_cast<std::size_t>(jump) && back <= pos; ++back)
            if (!x.related(order[pos - back], u)) {
                ok = false;
                break;
            }
        if (ok && pos > static_cast<std::size_t>(jump) &&
            n >= 2 * static_cast<std::size_t>(jump) + 2 &&
            x.related(order[pos - jump - 1], u))
            ok = false;
        if (!ok) continue;
        order[pos] = u;
        used[u] = true;
        if (recognize_backtrack(x, jump, order, used, pos + 1, nodes)) return true;
        used[u] = false;
    }
    return false;
}

}  // namespace

std::optional<CyclicModel> recognize_cyclic(const Space& x, VertexId anchor) {
    const std::size_t n = x.size();
    if (n == 0 || anchor >= n) return std::nullopt;
    if (n == 1) return CyclicModel{1, 1, {anchor}};

    const std::size_t deg = x.degree(0);
    for (VertexId v = 1; v < n; ++v)
        if (x.degree(v) != deg) return std::nullopt;

    int jump;
    if (deg == n - 1) {
        jump = static_cast<int>((n - 1 + 1) / 2);  // ceil((n-1)/2)
    } else {
        if (deg % 2 != 0 || deg == 0) return std::nullopt;
        jump = static_cast<int>(deg / 2);
    }

    // Fast path: numeric names 0..n-1 already matching the standard model.
    {
        bool numeric = true;
        std::vector<VertexId> by_value(n, static_cast<VertexId>(n));
        for (VertexId v = 0; v < n && numeric; ++v) {
            const std::string& name = x.name(v);
            numeric = !name.empty() && name.find_first_not_of("0123456789") == std::string::npos &&
                      (name == "0" || name[0] != '0');
            if (numeric) {
                const unsigned long value = std::stoul(name);
                if (value >= n || by_value[value] != n)
                    numeric = false;
                else
                    by_value[value] = v;
            }
        }
        if (numeric) {
            std::size_t a = 0;
            while (by_value[a] != anchor) ++a;
            std::vector<VertexId> order(n);
            for (std::size_t i = 0; i < n; ++i) order[i] = by_value[(a + i) % n];
            if (matches_cyclic_model(x, order, jump)) return CyclicModel{(int)n, jump, order};
        }
    }

    std::vector<VertexId> order(n);
    std::vector<bool> used(n, false);
    order[0] = anchor;
    used[anchor] = true;
    std::size_t nodes = 0;
    if (recognize_backtrack(x, jump, order, used, 1, nodes))
        return CyclicModel{static_cast<int>(n), jump, order};
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Normal forms and coarse triviality

bool is_unidirectional(const CubeMap& f) {
    if (f.cube().n != 1) throw input_error("unidirectionality is defined for paths only");
    const auto& g = f.grid();
    for (std::size_t i = 0; i + 2 < g.size(); ++i)
        if (f.target().related(g[i], g[i + 2])) return false;
    return true;
}

UnidirectionalReduction unidirectional_reduce(const CubeMap& f) {
    if (f.cube().n != 1) throw input_error("unidirectional_reduce is defined for paths only");
    const int original_side = f.cube().m;
    std::vector<std::vector<VertexId>> slices{f.grid()};
    CubeMap current = f;

    for (;;) {
        const auto& g = current.grid();
        const int m = current.cube().m;
        std::size_t i = 0;
        for (; i + 2 < g.size(); ++i)
            if (f.target().related(g[i], g[i + 2])) break;
        if (i + 2 >= g.size()) break;

        Block tail{{static_cast<int>(i) + 2}, {m}, 0, Direction::backward};
        BlockMove moved = block_move(current, tail, 1);
        for (std::size_t s = 1; s < moved.chain.slices.size(); ++s) {
            CubeMap slice(current.cube(), f.target_ptr(), moved.chain.slices[s]);
            slices.push_back(clamp(slice, original_side).grid());
        }
        std::vector<VertexId> shortened(moved.result.grid().begin(),
                                        moved.result.grid().end() - 1);
        current = CubeMap(Cube{1, m - 1}, f.target_ptr(), std::move(shortened));
    }

    // Trailing duplicate left only when the deletion rule cannot reach it.
    if (current.cube().m == 1 && current.grid()[0] == current.grid()[1])
        current = CubeMap(Cube{1, 0}, f.target_ptr(), {current.grid()[0]});

    Homotopy certificate{Cube{1, original_side}, f.target_ptr(), std::move(slices), {}};
    return {current, std::move(certificate)};
}

TrivialityReport coarse_triviality_check(const Space& x, std::size_t samples, std::uint64_t seed,
                                         std::size_t node_budget) {
    if (!is_coarse(x))
        throw precondition_error("space is not coarse (not a set-product-extension fixpoint)");
    SpacePtr space = share(Space(x));
    std::mt19937_64 rng(seed);
    TrivialityReport report;
    report.samples = samples;
    for (std::size_t s = 0; s < samples; ++s) {
        const VertexId base =
            std::uniform_int_distribution<VertexId>(0, static_cast<VertexId>(x.size() - 1))(rng);
        const int side = std::uniform_int_distribution<int>(2, 6)(rng);
        std::vector<VertexId> walk(side + 1, base);
        for (int i = 1; i < side; ++i) {
            const auto& nbrs = x.neighborhood(walk[i - 1]);
            walk[i] = nbrs[std::uniform_int_distribution<std::size_t>(0, nbrs.size() - 1)(rng)];
        }
        // Per-component completeness closes the loop back to the basepoint.
        CubeMap loop(Cube{1, side}, space, walk);
        CubeMap constant = CubeMap::constant(Cube{1, side}, space, base);
        const OffsetSet fixed = {0, static_cast<std::size_t>(side)};
        SearchResult result = homotopic_search(loop, constant, fixed, node_budget);
        if (result.status == SearchStatus::certificate &&
            verify_homotopy(*result.certificate).ok)
            ++report.certified;
        else
            report.failures.push_back(walk);
    }
    return report;
}

}  // namespace sc
