// Copyright 2026 the semicoarse contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "sc/complex.hpp"
#include "sc/kernels.hpp"
#include "support/generators.hpp"

using namespace sc;

namespace {

RelationMatrix random_relation(std::mt19937_64& rng, std::size_t n, double density) {
    RelationMatrix r(n);
    r.set_diagonal();
    std::bernoulli_distribution edge(density);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (edge(rng)) r.set_symmetric(i, j);
    return r;
}

}  // namespace

TEST_CASE("relation square: serial and parallel agree") {
    std::mt19937_64 rng(8001);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 90)(rng);
        const RelationMatrix r =
            random_relation(rng, n, std::uniform_real_distribution<double>(0.02, 0.5)(rng));
        const RelationMatrix serial = kernels::square_serial(r);
        const RelationMatrix parallel = kernels::square_parallel(r);
        CHECK(serial == parallel);

        // Squaring against the direct definition on a sample of pairs.
        for (int probe = 0; probe < 20; ++probe) {
            const std::size_t i = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
            const std::size_t j = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
            bool composed = false;
            for (std::size_t z = 0; z < n && !composed; ++z)
                composed = r.get(i, z) && r.get(z, j);
            CHECK(serial.get(i, j) == composed);
        }
    }
}

TEST_CASE("first_unrelated: serial and parallel agree") {
    std::mt19937_64 rng(8002);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 40)(rng);
        const RelationMatrix r = random_relation(rng, n, 0.5);
        std::vector<std::uint32_t> pairs;
        const std::size_t count = std::uniform_int_distribution<std::size_t>(0, 4000)(rng);
        std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
        for (std::size_t k = 0; k < count; ++k) {
            pairs.push_back(pick(rng));
            pairs.push_back(pick(rng));
        }
        CHECK(kernels::first_unrelated_serial(r, pairs) ==
              kernels::first_unrelated_parallel(r, pairs));
    }
}

TEST_CASE("clique expansion: serial and parallel agree") {
    testing::Rng rng(8003);
    for (int trial = 0; trial < 20; ++trial) {
        const Space x = testing::random_space(rng, 4, 24);
        std::vector<std::uint32_t> vertices(x.size());
        for (std::uint32_t v = 0; v < x.size(); ++v) vertices[v] = v;

        std::vector<std::uint32_t> level = vertices;
        for (std::size_t arity = 1; arity <= 3; ++arity) {
            const auto serial = kernels::expand_cliques_serial(x.roof(), level, arity);
            const auto parallel = kernels::expand_cliques_parallel(x.roof(), level, arity);
            CHECK(serial == parallel);
            level = serial;
            if (level.empty()) break;
        }
    }
}

TEST_CASE("complex building is identical under both modes") {
    testing::Rng rng(8004);
    const bool was = kernels::parallel_enabled();
    for (int trial = 0; trial < 10; ++trial) {
        const SpacePtr x = share(testing::random_connected_space(rng, 12, 0.4));
        kernels::set_parallel(false);
        const CliqueComplex serial = build_complex(x, 3);
        kernels::set_parallel(true);
        const CliqueComplex parallel = build_complex(x, 3);
        for (int q = 0; q <= 3; ++q) CHECK(serial.levels[q].flat == parallel.levels[q].flat);
    }
    kernels::set_parallel(was);
}

TEST_CASE("coarse completion is identical under both modes") {
    testing::Rng rng(8005);
    const bool was = kernels::parallel_enabled();
    for (int trial = 0; trial < 10; ++trial) {
        const Space x = testing::random_space(rng, 1, 60);
        kernels::set_parallel(false);
        const auto serial = coarse_completion(x);
        kernels::set_parallel(true);
        const auto parallel = coarse_completion(x);
        CHECK(serial.space == parallel.space);
        CHECK(serial.iterations == parallel.iterations);
    }
    kernels::set_parallel(was);
}
