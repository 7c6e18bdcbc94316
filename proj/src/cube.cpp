// Copyright 2026 the semicoarse contributors
// SPDX-License-Identifier: Apache-2.0

#include "sc/cube.hpp"

#include <algorithm>
#include <string>

namespace sc {

std::size_t Cube::vertex_count() const {
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(m) + 1;
    return total;
}

std::size_t Cube::encode(std::span<const int> coords) const {
    std::size_t off = 0;
    for (int i = 0; i < n; ++i) off = off * (m + 1) + static_cast<std::size_t>(coords[i]);
    return off;
}

void Cube::decode(std::size_t offset, std::span<int> out) const {
    for (int i = n - 1; i >= 0; --i) {
        out[i] = static_cast<int>(offset % (m + 1));
        offset /= (m + 1);
    }
}

std::vector<int> Cube::coords(std::size_t offset) const {
    std::vector<int> c(n);
    decode(offset, c);
    return c;
}

bool Cube::contains(std::span<const int> coords) const {
    for (int i = 0; i < n; ++i)
        if (coords[i] < 0 || coords[i] > m) return false;
    return true;
}

std::string cube_vertex_name(std::span<const int> coords) {
    std::string name;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) name += '|';
        name += std::to_string(coords[i]);
    }
    return name;
}

Space cube_space(int n, int m) {
    if (n < 1) throw input_error("cube dimension must be at least 1");
    if (m < 0) throw input_error("cube side must be nonnegative");
    const Cube cube{n, m};
    const std::size_t count = cube.vertex_count();

    std::vector<std::string> names(count);
    for (std::size_t off = 0; off < count; ++off) names[off] = cube_vertex_name(cube.coords(off));
    std::sort(names.begin(), names.end());

    Space shell = space_from_relation(names, RelationMatrix(count));
    std::vector<VertexId> id(count);
    for (std::size_t off = 0; off < count; ++off)
        id[off] = shell.require(cube_vertex_name(cube.coords(off)));

    RelationMatrix roof(count);
    std::vector<int> a(n), b(n);
    for (std::size_t u = 0; u < count; ++u) {
        cube.decode(u, a);
        // Enumerate the sup-distance-1 neighborhood directly.
        std::vector<int> delta(n, -1);
        for (;;) {
            bool ok = true;
            for (int i = 0; i < n; ++i) {
                b[i] = a[i] + delta[i];
                if (b[i] < 0 || b[i] > m) {
                    ok = false;
                    break;
                }
            }
            if (ok) roof.set(id[u], id[cube.encode(b)]);
            int i = 0;
            while (i < n && delta[i] == 1) delta[i++] = -1;
            if (i == n) break;
            ++delta[i];
        }
    }
    return space_from_relation(std::move(names), std::move(roof));
}

CubeMap::CubeMap(Cube cube, SpacePtr target, std::vector<VertexId> grid)
    : cube_(cube), target_(std::move(target)), grid_(std::move(grid)) {
    if (cube_.n < 1 || cube_.m < 0) throw input_error("malformed cube");
    if (grid_.size() != cube_.vertex_count()) throw input_error("grid does not cover the cube");
    for (VertexId v : grid_)
        if (v >= target_->size()) throw input_error("grid value out of range");
}

CubeMap CubeMap::constant(Cube cube, SpacePtr target, VertexId value) {
    std::vector<VertexId> grid(cube.vertex_count(), value);
    return CubeMap(cube, std::move(target), std::move(grid));
}

CubeMap CubeMap::from_names(Cube cube, SpacePtr target, const std::vector<std::string>& values) {
    std::vector<VertexId> grid(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) grid[i] = target->require(values[i]);
    return CubeMap(cube, std::move(target), std::move(grid));
}

std::optional<std::pair<std::size_t, std::size_t>> bornologous_violation(const CubeMap& f) {
    const Cube& cube = f.cube();
    const Space& target = f.target();
    const std::size_t count = cube.vertex_count();
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
            if (ok) {
                const std::size_t v = cube.encode(b);
                if (v > u && !target.related(f.at_offset(u), f.at_offset(v)))
                    return std::make_pair(u, v);
            }
            int i = 0;
            while (i < cube.n && delta[i] == 1) delta[i++] = -1;
            if (i == cube.n) break;
            ++delta[i];
        }
    }
    return std::nullopt;
}

bool is_bornologous(const CubeMap& f) { return !bornologous_violation(f); }

void Block::validate(const Cube& cube) const {
    if (static_cast<int>(lo.size()) != cube.n || static_cast<int>(hi.size()) != cube.n)
        throw input_error("block bounds do not match the cube dimension");
    if (axis < 0 || axis >= cube.n) throw input_error("block axis out of range");
    for (int i = 0; i < cube.n; ++i) {
        if (lo[i] > hi[i]) throw input_error("block bounds are inverted");
        if (lo[i] < 0 || hi[i] > cube.m) throw input_error("block leaves the cube");
    }
}

}  // namespace sc
