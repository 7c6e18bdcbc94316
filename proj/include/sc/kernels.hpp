// Copyright 2026 the semicoarse contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "sc/relation.hpp"

// Hot inner loops, each in a serial reference version and an OpenMP version.
// The two variants must produce bit-identical results; tests assert this and
// tools/scs_bench compares their wall time. Dispatching functions pick the
// variant from a process-wide switch (parallel by default when compiled with
// OpenMP).
namespace sc::kernels {

bool parallel_enabled();
void set_parallel(bool on);
int thread_count();

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

// One relational-composition step r ∘ r.
RelationMatrix square_serial(const RelationMatrix& r);
RelationMatrix square_parallel(const RelationMatrix& r);
RelationMatrix square(const RelationMatrix& r);

// Index of the first pair (a, b) with !roof.get(a, b), npos when all related.
// `pairs` is flat: pairs[2k], pairs[2k+1].
std::size_t first_unrelated_serial(const RelationMatrix& roof,
                                   const std::vector<std::uint32_t>& pairs);
std::size_t first_unrelated_parallel(const RelationMatrix& roof,
                                     const std::vector<std::uint32_t>& pairs);
std::size_t first_unrelated(const RelationMatrix& roof,
                            const std::vector<std::uint32_t>& pairs);

// Expands the (q+1)-tuples in `prev` (flat, ascending tuples, lex sorted) to
// (q+2)-tuples by appending every vertex above the tuple maximum adjacent to
// all members. Output is again flat, ascending and lex sorted.
std::vector<std::uint32_t> expand_cliques_serial(const RelationMatrix& adj,
                                                 const std::vector<std::uint32_t>& prev,
                                                 std::size_t arity);
std::vector<std::uint32_t> expand_cliques_parallel(const RelationMatrix& adj,
                                                   const std::vector<std::uint32_t>& prev,
                                                   std::size_t arity);
std::vector<std::uint32_t> expand_cliques(const RelationMatrix& adj,
                                          const std::vector<std::uint32_t>& prev,
                                          std::size_t arity);

}  // namespace sc::kernels
