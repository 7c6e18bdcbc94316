// Copyright 2026 the semicoarse contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "sc/homotopy.hpp"

using namespace sc;

namespace {

SpacePtr c4() {
    return share(cyclic_space(4));
}

CubeMap loop_c4(SpacePtr target) {
    // The canonical once-around loop on I_4.
    return CubeMap::from_names(Cube{1, 4}, target, {"0", "1", "2", "3", "0"});
}

}  // namespace

TEST_CASE("cube_space shapes") {
    const Space edge = cube_space(1, 1);
    CHECK(edge.size() == 2);
    CHECK(edge.roof_size() == 4);

    const Space path = cube_space(1, 4);
    CHECK(path.size() == 5);
    CHECK(path.roof_size() == 13);  // 5 diagonal + 2*4 neighbor pairs

    const Space square = cube_space(2, 1);
    CHECK(square.size() == 4);
    CHECK(square.roof_size() == 16);  // kings moves make it complete

    const Space board = cube_space(2, 2);
    const VertexId center = board.require("1|1");
    CHECK(board.degree(center) == 8);

    CHECK_THROWS_AS(cube_space(0, 1), input_error);
    CHECK_THROWS_AS(cube_space(1, -1), input_error);
}

TEST_CASE("boundary and open-box offset sets") {
    const Cube cube{2, 2};
    CHECK(cube_boundary(cube).size() == 8);   // everything except the center
    CHECK(cube_open_box(cube).size() == 7);   // minus the interior of the last-axis face
    CHECK(path_endpoints(Cube{1, 4}) == OffsetSet{0, 4});
    CHECK(path_endpoints(Cube{1, 0}) == OffsetSet{0});
}

TEST_CASE("clamp") {
    const SpacePtr target = c4();
    const CubeMap loop = loop_c4(target);
    CHECK(clamp(loop, 4) == loop);

    const CubeMap constant = CubeMap::constant(Cube{1, 3}, target, 2);
    const CubeMap stretched = clamp(constant, 6);
    for (std::size_t off = 0; off < stretched.grid().size(); ++off)
        CHECK(stretched.at_offset(off) == 2);

    const CubeMap extended = clamp(loop, 6);
    CHECK(extended.cube().m == 6);
    CHECK(extended.at_offset(5) == loop.at_offset(4));
    CHECK(extended.at_offset(6) == loop.at_offset(4));
    CHECK(is_bornologous(extended));

    CHECK_THROWS_AS(clamp(loop, 3), input_error);
}

TEST_CASE("star") {
    const SpacePtr target = c4();
    const CubeMap loop = loop_c4(target);

    const CubeMap tail = CubeMap::constant(Cube{1, 3}, target, loop.at_offset(4));
    const CubeMap glued = star(loop, tail);
    CHECK(glued.cube().m == 7);  // sides add
    for (int i = 0; i <= 4; ++i) CHECK(glued.at_offset(i) == loop.at_offset(i));
    for (int i = 5; i <= 7; ++i) CHECK(glued.at_offset(i) == loop.at_offset(4));
    CHECK(is_bornologous(glued));

    const CubeMap doubled = star(loop, loop);
    CHECK(doubled.cube().m == 8);
    CHECK(is_bornologous(doubled));

    const CubeMap offbase = CubeMap::from_names(Cube{1, 1}, target, {"1", "2"});
    CHECK_THROWS_AS(star(loop, offbase), precondition_error);

    const CubeMap square = CubeMap::constant(Cube{2, 1}, target, 0);
    CHECK_THROWS_AS(star(loop, square), input_error);  // dimension mismatch
}

TEST_CASE("star glue gap is caught when clamping misaligns values") {
    // Path target a-b-c-d; f is constant b except one far corner, g runs b->c
    // on the second square. The stated glue holds on the shared face but the
    // assembled map has an unrelated adjacent pair, which must be reported.
    const SpacePtr path = share(from_graph({{"a", "b"}, {"b", "c"}, {"c", "d"}}));
    std::vector<VertexId> fgrid(Cube{2, 2}.vertex_count(), path->require("b"));
    fgrid[Cube{2, 2}.encode(std::vector<int>{2, 2})] = path->require("a");
    const CubeMap f(Cube{2, 2}, path, fgrid);
    REQUIRE(is_bornologous(f));

    std::vector<VertexId> ggrid(Cube{2, 1}.vertex_count());
    const Cube small{2, 1};
    ggrid[small.encode(std::vector<int>{0, 0})] = path->require("b");
    ggrid[small.encode(std::vector<int>{0, 1})] = path->require("b");
    ggrid[small.encode(std::vector<int>{1, 0})] = path->require("c");
    ggrid[small.encode(std::vector<int>{1, 1})] = path->require("c");
    const CubeMap g(small, path, ggrid);
    REQUIRE(is_bornologous(g));

    CHECK_THROWS_AS(star(f, g), precondition_error);
}

TEST_CASE("inverse_path") {
    const SpacePtr target = c4();
    const CubeMap constant = CubeMap::constant(Cube{1, 3}, target, 1);
    CHECK(inverse_path(constant) == constant);

    const CubeMap loop = loop_c4(target);
    CHECK(inverse_path(inverse_path(loop)) == loop);
    CHECK(inverse_path(loop).at_offset(0) == loop.at_offset(4));

    const CubeMap square = CubeMap::constant(Cube{2, 1}, target, 0);
    CHECK_THROWS_AS(inverse_path(square), input_error);
}

TEST_CASE("one_step_related") {
    const SpacePtr target = c4();
    const CubeMap loop = loop_c4(target);
    CHECK(one_step_related(loop, loop));

    const CubeMap const0 = CubeMap::constant(Cube{1, 4}, target, 0);
    const CubeMap const1 = CubeMap::constant(Cube{1, 4}, target, 1);
    const CubeMap const2 = CubeMap::constant(Cube{1, 4}, target, 2);
    CHECK(one_step_related(const0, const1));
    CHECK(one_step_related(const1, const0));
    CHECK_FALSE(one_step_related(const0, const2));

    CHECK_FALSE(one_step_related(loop, const0));  // the pair (c(2), 0) is not controlled

    CHECK_FALSE(one_step_related(const0, const1, {0}));  // fixed point moves
}

TEST_CASE("verify_homotopy") {
    const SpacePtr target = c4();
    const CubeMap loop = loop_c4(target);

    Homotopy trivial{Cube{1, 4}, target, {loop.grid()}, {}};
    CHECK(verify_homotopy(trivial).ok);

    Homotopy broken{Cube{1, 4}, target, {loop.grid(), CubeMap::constant(Cube{1, 4}, target, 0).grid()},
                    {}};
    const VerifyResult verdict = verify_homotopy(broken);
    CHECK_FALSE(verdict.ok);
    CHECK_FALSE(verdict.reason.empty());
}

TEST_CASE("plate_move") {
    const SpacePtr target = c4();

    // Copying a plate over its own values changes nothing.
    const CubeMap constant = CubeMap::constant(Cube{1, 2}, target, 3);
    const Block still{{1}, {1}, 0, Direction::forward};
    CHECK(plate_move(constant, still) == constant);

    // (0,1,0) with the middle plate moved forward stamps position 2.
    const CubeMap bump = CubeMap::from_names(Cube{1, 2}, target, {"0", "1", "0"});
    const CubeMap moved = plate_move(bump, still);
    CHECK(moved.at_offset(0) == bump.at_offset(0));
    CHECK(moved.at_offset(1) == bump.at_offset(1));
    CHECK(moved.at_offset(2) == bump.at_offset(1));
    CHECK(is_bornologous(moved));
    CHECK(one_step_related(bump, moved));

    // Hypothesis failure: the left plate of (0,1,2) cannot move forward, the
    // witness names the pair whose images are the unrelated 0 and 2.
    const CubeMap ramp = CubeMap::from_names(Cube{1, 2}, target, {"0", "1", "2"});
    const Block left{{0}, {0}, 0, Direction::forward};
    const auto witness = plate_move_violation(ramp, left);
    REQUIRE(witness.has_value());
    CHECK(witness->alpha == 0);
    CHECK(witness->beta == 2);
    CHECK_FALSE(target->related(witness->value_a, witness->value_b));
    CHECK_THROWS_AS(plate_move(ramp, left), precondition_error);

    // Moving out of the cube is a harmless no-op stamping nothing.
    const Block outward{{2}, {2}, 0, Direction::forward};
    CHECK(plate_move(bump, outward) == bump);
}

TEST_CASE("block_move") {
    const SpacePtr target = c4();
    const CubeMap bump = CubeMap::from_names(Cube{1, 4}, target, {"0", "1", "1", "1", "0"});

    const Block blk{{1}, {3}, 0, Direction::forward};
    const BlockMove unmoved = block_move(bump, blk, 0);
    CHECK(unmoved.result == bump);
    CHECK(unmoved.chain.slices.size() == 1);

    // One forward step of the block [1,2] equals the wake formula.
    const CubeMap wave = CubeMap::from_names(Cube{1, 3}, target, {"0", "1", "0", "0"});
    const Block head{{1}, {2}, 0, Direction::forward};
    const BlockMove stepped = block_move(wave, head, 1);
    CHECK(stepped.result.at_offset(0) == wave.at_offset(0));
    CHECK(stepped.result.at_offset(1) == wave.at_offset(1));  // wake of the trailing face
    CHECK(stepped.result.at_offset(2) == wave.at_offset(1));
    CHECK(stepped.result.at_offset(3) == wave.at_offset(2));
    CHECK(is_bornologous(stepped.result));
    CHECK(verify_homotopy(stepped.chain).ok);
    CHECK(stepped.chain.slices.front() == wave.grid());
    CHECK(stepped.chain.slices.back() == stepped.result.grid());

    CHECK_THROWS_AS(block_move(wave, head, 2), input_error);  // would leave the cube
    CHECK_THROWS_AS(block_move(wave, head, -1), input_error);
}

TEST_CASE("block_move reproduces the inverse-cancellation step") {
    const SpacePtr target = c4();
    const CubeMap arc = CubeMap::from_names(Cube{1, 2}, target, {"0", "1", "2"});
    const CubeMap there_and_back = star(arc, inverse_path(arc));
    REQUIRE(there_and_back.cube().m == 4);

    // Move the top block [3,4] two steps backward over the apex.
    const Block top{{3}, {4}, 0, Direction::backward};
    const BlockMove folded = block_move(there_and_back, top, 2);
    CHECK(verify_homotopy(folded.chain).ok);
    CHECK(is_bornologous(folded.result));
    // The fold shortens the excursion by one level on each side of the apex.
    CHECK(folded.result.at_offset(0) == there_and_back.at_offset(0));
    CHECK(folded.result.at_offset(4) == there_and_back.at_offset(4));
}

TEST_CASE("lift_path and winding") {
    const SpacePtr target = c4();
    const CubeMap constant = CubeMap::constant(Cube{1, 4}, target, 0);
    const WindingCertificate still = lift_path(constant, 1);
    CHECK(still.loop);
    CHECK(still.winding == 0);

    const CubeMap loop = loop_c4(target);
    const WindingCertificate once = lift_path(loop, 1);
    CHECK(once.loop);
    CHECK(once.winding == 1);
    CHECK(once.lift.front() == 0);
    CHECK(once.lift.back() == 4);

    const WindingCertificate back = lift_path(inverse_path(loop), 1);
    CHECK(back.winding == -1);

    const CubeMap cancel = star(loop, inverse_path(loop));
    CHECK(lift_path(cancel, 1).winding == 0);

    const WindingCertificate twice = lift_path(star(loop, loop), 1);
    CHECK(twice.winding == 2);

    // Projection property: the lift reduces mod n to the path.
    for (std::size_t i = 0; i < once.lift.size(); ++i) {
        const long long residue = ((once.lift[i] % 4) + 4) % 4;
        CHECK(target->name(loop.at_offset(i)) == std::to_string(residue));
    }

    const SpacePtr c5double = share(cyclic_space(5, 2));
    const CubeMap tiny = CubeMap::constant(Cube{1, 2}, c5double, 0);
    CHECK_THROWS_AS(lift_path(tiny, 2), input_error);               // ceil(5/2) = 3: gated
    CHECK_NOTHROW(lift_path(tiny, 2, true));                        // explicit override
    const SpacePtr c4double = share(cyclic_space(4, 2));
    const CubeMap flat = CubeMap::constant(Cube{1, 2}, c4double, 0);
    CHECK_THROWS_AS(lift_path(flat, 2, true), input_error);         // n <= 2m, no unique lift

    const SpacePtr c3 = share(cyclic_space(3));
    const CubeMap three = CubeMap::constant(Cube{1, 2}, c3, 0);
    CHECK_THROWS_AS(lift_path(three, 1), input_error);              // trivial group regime
    CHECK(lift_path(three, 1, true).winding == 0);

    const CubeMap offbase = CubeMap::from_names(Cube{1, 2}, target, {"1", "2", "1"});
    CHECK_THROWS_AS(lift_path(offbase, 1), input_error);
}

TEST_CASE("pi1_cyclic") {
    CHECK(pi1_cyclic(4, 1) == Pi1::infinite_cyclic);
    CHECK(pi1_cyclic(3, 1) == Pi1::trivial);
    CHECK(pi1_cyclic(1, 1) == Pi1::trivial);
    CHECK(pi1_cyclic(2, 1) == Pi1::trivial);
    CHECK(pi1_cyclic(12, 3) == Pi1::infinite_cyclic);
    CHECK(pi1_cyclic(9, 3) == Pi1::trivial);
    CHECK(pi1_cyclic(8, 2) == Pi1::infinite_cyclic);
    CHECK(pi1_cyclic(6, 2) == Pi1::trivial);
    for (long long n = 4; n <= 12; ++n) CHECK(pi1_cyclic(n, 1) == Pi1::infinite_cyclic);
    CHECK_THROWS_AS(pi1_cyclic(0, 1), input_error);
    CHECK_THROWS_AS(pi1_cyclic(4, 0), input_error);
}

TEST_CASE("recognize_cyclic") {
    const Space plain = cyclic_space(6);
    const auto model = recognize_cyclic(plain, plain.require("2"));
    REQUIRE(model.has_value());
    CHECK(model->n == 6);
    CHECK(model->jump == 1);
    CHECK(model->order[0] == plain.require("2"));
    CHECK(model->order[1] == plain.require("3"));  // numeric fast path keeps orientation

    // Relabeled copy: still recognized.
    const Space letters = from_graph(
        {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"}});
    const auto found = recognize_cyclic(letters, letters.require("c"));
    REQUIRE(found.has_value());
    CHECK(found->n == 5);
    CHECK(found->jump == 1);
    CHECK(found->order[0] == letters.require("c"));

    const Space wide = cyclic_space(12, 3);
    const auto jumpy = recognize_cyclic(wide, wide.require("0"));
    REQUIRE(jumpy.has_value());
    CHECK(jumpy->jump == 3);

    // Not cyclic: a path, and a cycle with a chord.
    const Space path = from_graph({{"0", "1"}, {"1", "2"}, {"2", "3"}});
    CHECK_FALSE(recognize_cyclic(path, 0).has_value());
    const Space chord = from_graph(
        {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "0"}, {"0", "3"}});
    CHECK_FALSE(recognize_cyclic(chord, 0).has_value());
}

TEST_CASE("unidirectional_reduce") {
    const SpacePtr target = c4();

    const CubeMap straight = CubeMap::from_names(Cube{1, 2}, target, {"0", "1", "2"});
    CHECK(is_unidirectional(straight));
    const auto untouched = unidirectional_reduce(straight);
    CHECK(untouched.result == straight);

    const CubeMap wiggle = CubeMap::from_names(Cube{1, 2}, target, {"0", "1", "0"});
    CHECK_FALSE(is_unidirectional(wiggle));
    const auto collapsed = unidirectional_reduce(wiggle);
    CHECK(collapsed.result.cube().m == 0);
    CHECK(collapsed.result.at_offset(0) == target->require("0"));
    CHECK(verify_homotopy(collapsed.certificate).ok);
    CHECK(collapsed.certificate.slices.back() ==
          clamp(collapsed.result, wiggle.cube().m).grid());

    const CubeMap loop = loop_c4(target);
    const auto fixedpoint = unidirectional_reduce(loop);
    CHECK(fixedpoint.result == loop);  // no index has related two-step images

    // Reduction preserves the winding number across a stalled double loop.
    const CubeMap stall = CubeMap::constant(Cube{1, 1}, target, 0);
    const CubeMap noisy = star(star(loop, stall), loop);
    CHECK_FALSE(is_unidirectional(noisy));
    const auto reduced = unidirectional_reduce(noisy);
    CHECK(is_unidirectional(reduced.result));
    CHECK(verify_homotopy(reduced.certificate).ok);
    CHECK(lift_path(reduced.result, 1).winding == 2);
}
