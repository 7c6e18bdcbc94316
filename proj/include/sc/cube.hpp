// Copyright 2026 the semicoarse contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sc/space.hpp"

namespace sc {

// Discrete n-cube {0..m}^n with the kings-move roof (coordinatewise
// differences at most 1). Side m = 0 is the one-point cube.
struct Cube {
    int n = 1;
    int m = 0;

    std::size_t vertex_count() const;
    std::size_t encode(std::span<const int> coords) const;  // row-major
    void decode(std::size_t offset, std::span<int> out) const;
    std::vector<int> coords(std::size_t offset) const;
    bool contains(std::span<const int> coords) const;

    bool operator==(const Cube&) const = default;
};

// The cube as a Space; vertex names are coordinates joined by '|' (bare
// integers when n = 1), matching the product naming scheme.
Space cube_space(int n, int m);
std::string cube_vertex_name(std::span<const int> coords);

// Total assignment of cube points to target vertices. The grid is indexed by
// coordinate offset (row-major). Maps are not validated on construction;
// operations that need bornologousness check it.
class CubeMap {
public:
    CubeMap(Cube cube, SpacePtr target, std::vector<VertexId> grid);

    static CubeMap constant(Cube cube, SpacePtr target, VertexId value);
    static CubeMap from_names(Cube cube, SpacePtr target, const std::vector<std::string>& values);

    const Cube& cube() const { return cube_; }
    const Space& target() const { return *target_; }
    const SpacePtr& target_ptr() const { return target_; }

    VertexId at_offset(std::size_t off) const { return grid_[off]; }
    VertexId at(std::span<const int> coords) const { return grid_[cube_.encode(coords)]; }
    const std::vector<VertexId>& grid() const { return grid_; }

    bool operator==(const CubeMap& other) const {
        return cube_ == other.cube_ && grid_ == other.grid_ && target() == other.target();
    }

private:
    Cube cube_;
    SpacePtr target_;
    std::vector<VertexId> grid_;
};

bool is_bornologous(const CubeMap& f);
// First adjacent offset pair whose images are unrelated, if any.
std::optional<std::pair<std::size_t, std::size_t>> bornologous_violation(const CubeMap& f);

enum class Direction { backward, forward };  // toward 0 / toward m
inline int step_of(Direction d) { return d == Direction::forward ? 1 : -1; }

// Axis-aligned box inside a cube with a distinguished axis and direction.
// When lo[axis] == hi[axis] the block is a plate.
struct Block {
    std::vector<int> lo, hi;
    int axis = 0;
    Direction dir = Direction::forward;

    bool is_plate() const { return lo[axis] == hi[axis]; }
    void validate(const Cube& cube) const;  // input_error when out of bounds
};

}  // namespace sc
