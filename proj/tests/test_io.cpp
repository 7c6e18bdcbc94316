// Copyright 2026 the semicoarse contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <sstream>

#include "sc/io.hpp"
#include "support/generators.hpp"

using namespace sc;

TEST_CASE("space json round trip") {
    testing::Rng rng(9001);
    for (int trial = 0; trial < 40; ++trial) {
        const Space x = testing::random_space(rng, 1, 8);
        const io::json doc = io::space_to_json(x);
        CHECK(io::space_from_json(doc) == x);
    }

    // Canonical text is a fixpoint of save(load(.)).
    const Space cycle = cyclic_space(4);
    const std::string text = io::canonical_space_text(cycle);
    const Space reloaded = io::space_from_json(io::json::parse(text));
    CHECK(io::canonical_space_text(reloaded) == text);

    CHECK_THROWS_AS(io::space_from_json(io::json::parse("{\"format\":\"nope\"}")), input_error);
    CHECK_THROWS_AS(io::space_from_json(io::json::parse(
                        "{\"format\":\"space\",\"vertices\":[\"a\"],\"roof\":[[\"a\",\"b\"]]}")),
                    input_error);
}

TEST_CASE("edge list parsing") {
    std::istringstream in(
        "# a 4-cycle\n"
        "0 1\n"
        "1 2\n"
        "2 3\n"
        "3 0   # closing edge\n"
        "lonely\n"
        "\n");
    const Space x = io::parse_edge_list(in);
    CHECK(x.size() == 5);
    CHECK(x.roof_size() == 13);
    CHECK(x.degree(x.require("lonely")) == 0);

    std::istringstream bad("a b c\n");
    CHECK_THROWS_AS(io::parse_edge_list(bad), input_error);
}

TEST_CASE("decimal parsing is exact") {
    CHECK(io::parse_decimal("1") == Rational(1));
    CHECK(io::parse_decimal("-2.5") == Rational(-5, 2));
    CHECK(io::parse_decimal("0.1") == Rational(1, 10));
    CHECK(io::parse_decimal("1e3") == Rational(1000));
    CHECK(io::parse_decimal("2.5e-1") == Rational(1, 4));
    CHECK(io::parse_decimal("+.5") == Rational(1, 2));
    CHECK_THROWS_AS(io::parse_decimal(""), input_error);
    CHECK_THROWS_AS(io::parse_decimal("one"), input_error);
    CHECK_THROWS_AS(io::parse_decimal("1.2.3"), input_error);
}

TEST_CASE("point cloud csv") {
    std::istringstream in(
        "# unit square corners\n"
        "0, 0\n"
        "1, 0\n"
        "1, 1\n"
        "0, 1\n");
    const PointCloud cloud = io::parse_point_cloud_csv(in);
    REQUIRE(cloud.points.size() == 4);
    const Space corners = from_point_cloud(cloud, io::parse_decimal("1.0"), false);
    CHECK(corners.roof_size() == 12);  // exactly the 4-cycle at the threshold
    const Space strict = from_point_cloud(cloud, io::parse_decimal("1.0"), true);
    CHECK(strict.roof_size() == 4);  // strict comparison drops the sides
}

TEST_CASE("map json round trip") {
    const SpacePtr cycle = share(cyclic_space(4));
    const VertexMap fold = VertexMap::from_names(
        cycle, cycle, {{"0", "0"}, {"1", "1"}, {"2", "0"}, {"3", "1"}});
    const io::json doc = io::map_to_json(fold);
    const VertexMap back = io::map_from_json(doc);
    CHECK(back.table() == fold.table());
    CHECK(back.source() == fold.source());
    CHECK(back.target() == fold.target());
}

TEST_CASE("homotopy json round trip") {
    const SpacePtr cycle = share(cyclic_space(4));
    const CubeMap a = CubeMap::constant(Cube{1, 3}, cycle, 0);
    const CubeMap b = CubeMap::constant(Cube{1, 3}, cycle, 1);
    Homotopy h{Cube{1, 3}, cycle, {a.grid(), b.grid()}, {0}};
    const io::json doc = io::homotopy_to_json(h);
    const Homotopy back = io::homotopy_from_json(doc);
    CHECK(back.cube == h.cube);
    CHECK(back.slices == h.slices);
    CHECK(back.fixed == h.fixed);
    CHECK(*back.target == *h.target);
    // This particular certificate moves its fixed point, so it must fail.
    CHECK_FALSE(verify_homotopy(back).ok);
}

TEST_CASE("digest is stable") {
    CHECK(io::fnv1a_digest("") == "cbf29ce484222325");
    CHECK(io::fnv1a_digest("semicoarse") == io::fnv1a_digest("semicoarse"));
    CHECK(io::fnv1a_digest("a") != io::fnv1a_digest("b"));
}
