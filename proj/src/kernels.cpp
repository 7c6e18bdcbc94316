// Copyright 2026 the semicoarse contributors
// SPDX-License-Identifier: Apache-2.0

#include "sc/kernels.hpp"

#include <atomic>
#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sc {

std::size_t RelationMatrix::count() const {
    std::size_t total = 0;
    for (std::uint64_t w : bits_) total += std::popcount(w);
    return total;
}

bool RelationMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (get(i, j) != get(j, i)) return false;
    return true;
}

bool RelationMatrix::has_diagonal() const {
    for (std::size_t i = 0; i < n_; ++i)
        if (!get(i, i)) return false;
    return true;
}

}  // namespace sc

namespace sc::kernels {

namespace {
std::atomic<bool> g_parallel{
#ifdef _OPENMP
    true
#else
    false
#endif
};
}  // namespace

bool parallel_enabled() { return g_parallel.load(std::memory_order_relaxed); }

void set_parallel(bool on) {
#ifndef _OPENMP
    on = false;
#endif
    g_parallel.store(on, std::memory_order_relaxed);
}

int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace {

inline void square_row(const RelationMatrix& r, std::size_t i, std::uint64_t* out) {
    const std::size_t n = r.size();
    const std::size_t words = r.words_per_row();
    const std::uint64_t* src = r.row(i);
    for (std::size_t wi = 0; wi < words; ++wi) {
        std::uint64_t w = src[wi];
        while (w) {
            const std::size_t j = wi * 64 + std::countr_zero(w);
            w &= w - 1;
            if (j >= n) break;
            const std::uint64_t* rj = r.row(j);
            for (std::size_t k = 0; k < words; ++k) out[k] |= rj[k];
        }
    }
}

}  // namespace

RelationMatrix square_serial(const RelationMatrix& r) {
    RelationMatrix out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) square_row(r, i, out.row(i));
    return out;
}

RelationMatrix square_parallel(const RelationMatrix& r) {
    RelationMatrix out(r.size());
    const std::int64_t n = static_cast<std::int64_t>(r.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) square_row(r, static_cast<std::size_t>(i), out.row(i));
    return out;
}

RelationMatrix square(const RelationMatrix& r) {
    return parallel_enabled() ? square_parallel(r) : square_serial(r);
}

std::size_t first_unrelated_serial(const RelationMatrix& roof,
                                   const std::vector<std::uint32_t>& pairs) {
    const std::size_t count = pairs.size() / 2;
    for (std::size_t k = 0; k < count; ++k)
        if (!roof.get(pairs[2 * k], pairs[2 * k + 1])) return k;
    return npos;
}

std::size_t first_unrelated_parallel(const RelationMatrix& roof,
                                     const std::vector<std::uint32_t>& pairs) {
    const std::int64_t count = static_cast<std::int64_t>(pairs.size() / 2);
    std::size_t best = npos;
#pragma omp parallel for schedule(static) reduction(min : best)
    for (std::int64_t k = 0; k < count; ++k) {
        if (!roof.get(pairs[2 * k], pairs[2 * k + 1]))
            best = std::min(best, static_cast<std::size_t>(k));
    }
    return best;
}

std::size_t first_unrelated(const RelationMatrix& roof, const std::vector<std::uint32_t>& pairs) {
    // Parallel scan only pays off on large batches.
    if (parallel_enabled() && pairs.size() >= 1 << 14) return first_unrelated_parallel(roof, pairs);
    return first_unrelated_serial(roof, pairs);
}

namespace {

inline void expand_one(const RelationMatrix& adj, const std::uint32_t* tuple, std::size_t arity,
                       std::vector<std::uint32_t>& out) {
    const std::size_t n = adj.size();
    const std::size_t words = adj.words_per_row();
    const std::uint32_t last = tuple[arity - 1];
    for (std::size_t wi = (last + 1) / 64; wi < words; ++wi) {
        std::uint64_t w = ~std::uint64_t{0};
        for (std::size_t a = 0; a < arity; ++a) w &= adj.row(tuple[a])[wi];
        if (wi == (last + 1) / 64 && (last + 1) % 64 != 0)
            w &= ~std::uint64_t{0} << ((last + 1) % 64);
        while (w) {
            const std::size_t u = wi * 64 + std::countr_zero(w);
            w &= w - 1;
            if (u >= n) break;
            out.insert(out.end(), tuple, tuple + arity);
            out.push_back(static_cast<std::uint32_t>(u));
        }
    }
}

}  // namespace

std::vector<std::uint32_t> expand_cliques_serial(const RelationMatrix& adj,
                                                 const std::vector<std::uint32_t>& prev,
                                                 std::size_t arity) {
    std::vector<std::uint32_t> out;
    const std::size_t count = prev.size() / arity;
    for (std::size_t s = 0; s < count; ++s) expand_one(adj, prev.data() + s * arity, arity, out);
    return out;
}

std::vector<std::uint32_t> expand_cliques_parallel(const RelationMatrix& adj,
                                                   const std::vector<std::uint32_t>& prev,
                                                   std::size_t arity) {
    const std::int64_t count = static_cast<std::int64_t>(prev.size() / arity);
    std::vector<std::vector<std::uint32_t>> buckets(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t s = 0; s < count; ++s)
        expand_one(adj, prev.data() + s * arity, arity, buckets[static_cast<std::size_t>(s)]);
    std::size_t total = 0;
    for (const auto& b : buckets) total += b.size();
    std::vector<std::uint32_t> out;
    out.reserve(total);
    // Stitching in source order keeps the result lex sorted and identical to
    // the serial variant.
    for (const auto& b : buckets) out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::vector<std::uint32_t> expand_cliques(const RelationMatrix& adj,
                                          const std::vector<std::uint32_t>& prev,
                                          std::size_t arity) {
    if (parallel_enabled() && prev.size() / arity >= 256)
        return expand_cliques_parallel(adj, prev, arity);
    return expand_cliques_serial(adj, prev, arity);
}

}  // namespace sc::kernels
