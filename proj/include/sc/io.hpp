// Copyright 2026 the semicoarse contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sc/homotopy.hpp"
#include "sc/space.hpp"

namespace sc::io {

using json = nlohmann::json;  // std::map-backed: keys serialize sorted

// Canonical space document: sorted vertices, lexicographically sorted roof
// pairs (ordered, diagonal included).
json space_to_json(const Space& x);
Space space_from_json(const json& doc);
std::string canonical_space_text(const Space& x);  // dump(2) + newline

// Edge-list text: one "u v" pair per line, '#' comments, bare "v" lines for
// isolated vertices.
Space parse_edge_list(std::istream& in);

// Point-cloud CSV: one point per row, decimal coordinates; exact rationals.
PointCloud parse_point_cloud_csv(std::istream& in);
Rational parse_decimal(std::string_view text);  // input_error on malformed text

// Map document: embedded source/target spaces plus a sorted table.
json map_to_json(const VertexMap& f);
VertexMap map_from_json(const json& doc);

// Homotopy document: cube, embedded target, slices as row-major name arrays,
// fixed set as coordinate tuples.
json homotopy_to_json(const Homotopy& h);
Homotopy homotopy_from_json(const json& doc);

// Path document: a 1-dimensional cube map as a value sequence.
json path_to_json(const CubeMap& f);
std::vector<std::string> path_values_from_json(const json& doc);

std::string fnv1a_digest(std::string_view bytes);

}  // namespace sc::io
