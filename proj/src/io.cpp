// Copyright 2026 the semicoarse contributors
// SPDX-License-Identifier: Apache-2.0

#include "sc/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace sc::io {

namespace {

std::string json_type_error(const char* what) { return std::string("malformed document: ") + what; }

const json& field(const json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key))
        throw input_error(json_type_error("missing field '") + key + "'");
    return doc.at(key);
}

std::vector<std::string> string_array(const json& node, const char* what) {
    if (!node.is_array()) throw input_error(json_type_error(what));
    std::vector<std::string> out;
    out.reserve(node.size());
    for (const auto& item : node) {
        if (!item.is_string()) throw input_error(json_type_error(what));
        out.push_back(item.get<std::string>());
    }
    return out;
}

}  // namespace

json space_to_json(const Space& x) {
    json doc;
    doc["format"] = "space";
    doc["vertices"] = x.vertex_names();
    json roof = json::array();
    for (const auto& [u, v] : x.roof_pairs()) roof.push_back({x.name(u), x.name(v)});
    doc["roof"] = roof;
    return doc;
}

Space space_from_json(const json& doc) {
    if (field(doc, "format") != "space") throw input_error("document is not a space");
    auto vertices = string_array(field(doc, "vertices"), "vertices must be strings");
    const json& roof = field(doc, "roof");
    if (!roof.is_array()) throw input_error("roof must be an array of pairs");
    std::vector<std::pair<std::string, std::string>> pairs;
    pairs.reserve(roof.size());
    for (const auto& item : roof) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string())
            throw input_error("roof entries must be [u, v] string pairs");
        pairs.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
    }
    return new_space(std::move(vertices), pairs);
}

std::string canonical_space_text(const Space& x) { return space_to_json(x).dump(2) + "\n"; }

Space parse_edge_list(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> isolated;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream row(line);
        std::string a, b, extra;
        if (!(row >> a)) continue;  // blank / comment line
        if (!(row >> b)) {
            isolated.push_back(a);
            continue;
        }
        if (row >> extra)
            throw input_error("edge list line " + std::to_string(lineno) +
                              ": expected 'u v' or a single vertex");
        edges.emplace_back(std::move(a), std::move(b));
    }
    return from_graph(edges, isolated);
}

Rational parse_decimal(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&]() -> Rational {
        throw input_error("malformed decimal '" + std::string(text) + "'");
    };
    if (text.empty()) return fail();
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    std::string digits;
    long long scale10 = 0;
    bool any = false;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        digits += text[pos++];
        any = true;
    }
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            digits += text[pos++];
            --scale10;
            any = true;
        }
    }
    if (!any) return fail();
    if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
        ++pos;
        bool exp_negative = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            exp_negative = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size()) return fail();
        long long exponent = 0;
        const auto result = std::from_chars(text.data() + pos, text.data() + text.size(), exponent);
        if (result.ec != std::errc() || result.ptr != text.data() + text.size()) return fail();
        scale10 += exp_negative ? -exponent : exponent;
    } else if (pos != text.size()) {
        return fail();
    }

    boost::multiprecision::cpp_int numerator(digits.empty() ? "0" : digits);
    if (negative) numerator = -numerator;
    Rational value(numerator);
    boost::multiprecision::cpp_int ten(10);
    if (scale10 > 0)
        value *= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(scale10)));
    else if (scale10 < 0)
        value /= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(-scale10)));
    return value;
}

PointCloud parse_point_cloud_csv(std::istream& in) {
    PointCloud cloud;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
        std::vector<Rational> point;
        std::istringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) {
            const auto begin = cell.find_first_not_of(" \t\r");
            if (begin == std::string::npos)
                throw input_error("point cloud line " + std::to_string(lineno) + ": empty cell");
            const auto end = cell.find_last_not_of(" \t\r");
            point.push_back(parse_decimal(std::string_view(cell).substr(begin, end - begin + 1)));
        }
        cloud.points.push_back(std::move(point));
    }
    return cloud;
}

json map_to_json(const VertexMap& f) {
    json doc;
    doc["format"] = "map";
    doc["source"] = space_to_json(f.source());
    doc["target"] = space_to_json(f.target());
    json table = json::array();
    for (VertexId v = 0; v < f.source().size(); ++v)
        table.push_back({f.source().name(v), f.target().name(f(v))});
    doc["table"] = table;
    return doc;
}

VertexMap map_from_json(const json& doc) {
    if (field(doc, "format") != "map") throw input_error("document is not a map");
    SpacePtr source = share(space_from_json(field(doc, "source")));
    SpacePtr target = share(space_from_json(field(doc, "target")));
    const json& table = field(doc, "table");
    if (!table.is_array()) throw input_error("map table must be an array of pairs");
    std::vector<std::pair<std::string, std::string>> entries;
    for (const auto& item : table) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string())
            throw input_error("map table entries must be [from, to] string pairs");
        entries.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
    }
    return VertexMap::from_names(std::move(source), std::move(target), entries);
}

json homotopy_to_json(const Homotopy& h) {
    json doc;
    doc["format"] = "homotopy";
    doc["cube"] = {{"n", h.cube.n}, {"m", h.cube.m}};
    doc["target"] = space_to_json(*h.target);
    json slices = json::array();
    for (const auto& grid : h.slices) {
        json slice = json::array();
        for (VertexId v : grid) slice.push_back(h.target->name(v));
        slices.push_back(std::move(slice));
    }
    doc["slices"] = slices;
    json fixed = json::array();
    for (std::size_t off : h.fixed) {
        json point = json::array();
        for (int c : h.cube.coords(off)) point.push_back(c);
        fixed.push_back(std::move(point));
    }
    doc["fixed"] = fixed;
    return doc;
}

Homotopy homotopy_from_json(const json& doc) {
    if (field(doc, "format") != "homotopy") throw input_error("document is not a homotopy");
    const json& cube_doc = field(doc, "cube");
    Cube cube{field(cube_doc, "n").get<int>(), field(cube_doc, "m").get<int>()};
    if (cube.n < 1 || cube.m < 0) throw input_error("malformed cube");
    SpacePtr target = share(space_from_json(field(doc, "target")));

    Homotopy h;
    h.cube = cube;
    h.target = target;
    const json& slices = field(doc, "slices");
    if (!slices.is_array() || slices.empty()) throw input_error("homotopy needs at least one slice");
    for (const auto& slice : slices) {
        auto values = string_array(slice, "slices must be arrays of vertex names");
        if (values.size() != cube.vertex_count())
            throw input_error("homotopy slice does not cover the cube");
        std::vector<VertexId> grid(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) grid[i] = target->require(values[i]);
        h.slices.push_back(std::move(grid));
    }
    const json& fixed = field(doc, "fixed");
    if (!fixed.is_array()) throw input_error("fixed set must be an array of points");
    std::vector<int> coords(cube.n);
    for (const auto& point : fixed) {
        if (!point.is_array() || static_cast<int>(point.size()) != cube.n)
            throw input_error("fixed points must be coordinate tuples");
        for (int i = 0; i < cube.n; ++i) coords[i] = point[i].get<int>();
        if (!cube.contains(coords)) throw input_error("fixed point outside the cube");
        h.fixed.push_back(cube.encode(coords));
    }
    std::sort(h.fixed.begin(), h.fixed.end());
    return h;
}

json path_to_json(const CubeMap& f) {
    if (f.cube().n != 1) throw input_error("path documents hold 1-dimensional maps");
    json doc;
    doc["format"] = "path";
    json values = json::array();
    for (VertexId v : f.grid()) values.push_back(f.target().name(v));
    doc["values"] = values;
    return doc;
}

std::vector<std::string> path_values_from_json(const json& doc) {
    if (field(doc, "format") != "path") throw input_error("document is not a path");
    auto values = string_array(field(doc, "values"), "path values must be vertex names");
    if (values.empty()) throw input_error("path must visit at least one vertex");
    return values;
}

std::string fnv1a_digest(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char out[17];
    static const char* hex = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[hash & 0xf];
        hash >>= 4;
    }
    out[16] = '\0';
    return out;
}

}  // namespace sc::io
