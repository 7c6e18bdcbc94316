// Copyright 2026 the semicoarse contributors
// SPDX-License-Identifier: Apache-2.0

#include "sc/homology.hpp"

#include <algorithm>
#include <numeric>

#include "sc/errors.hpp"

namespace sc {

std::vector<HomologyGroup> homology(const CliqueComplex& complex) {
    const int cap = complex.max_dim;
    std::vector<std::size_t> ranks(cap + 2, 0);  // ranks[q] = rank of boundary_q
    std::vector<std::vector<Int>> torsion(cap + 2);
    for (int q = 1; q <= cap; ++q) {
        if (complex.count(q) == 0) break;
        SmithDecomposition snf = smith_normal_form(boundary(complex, q));
        ranks[q] = snf.rank();
        torsion[q] = snf.nonunit_factors();
    }

    std::vector<HomologyGroup> groups;
    for (int q = 0; q <= cap; ++q) {
        HomologyGroup g;
        g.dim = q;
        g.betti = complex.count(q) - ranks[q] - ranks[q + 1];
        g.torsion = torsion[q + 1];
        g.cap_limited = (q == cap);
        groups.push_back(std::move(g));
    }
    return groups;
}

std::vector<HomologyGroup> homology(const Space& x, int max_dim) {
    return homology(build_complex(share(Space(x)), max_dim));
}

namespace {

// Sorts the tuple ascending; returns the permutation sign, or 0 on repeats.
int normalize_tuple(std::vector<VertexId>& tuple) {
    int sign = 1;
    for (std::size_t i = 1; i < tuple.size(); ++i)
        for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
            if (tuple[j - 1] == tuple[j]) return 0;
            std::swap(tuple[j - 1], tuple[j]);
            sign = -sign;
        }
    return sign;
}

}  // namespace

ChainMap induced_map(const VertexMap& f, const CliqueComplex& source,
                     const CliqueComplex& target) {
    if (auto bad = bornologous_violation(f))
        throw precondition_error("map is not bornologous at ('" + f.source().name(bad->first) +
                                     "','" + f.source().name(bad->second) + "')",
                                 f.source().name(bad->first));
    const int cap = std::min(source.max_dim, target.max_dim);
    ChainMap chain;
    chain.dims.resize(cap + 1);
    std::vector<VertexId> image;
    for (int q = 0; q <= cap; ++q) {
        const SimplexList& cells = source.levels[q];
        IntegerMatrix m(target.count(q), cells.count());
        for (std::size_t c = 0; c < cells.count(); ++c) {
            const auto cell = cells[c];
            image.assign(cell.begin(), cell.end());
            for (auto& v : image) v = f(v);
            const int sign = normalize_tuple(image);
            if (sign == 0) continue;  // repeated vertices vanish
            const auto row = target.levels[q].find(image);
            if (!row) throw input_error("image simplex missing from the target complex");
            m.at(*row, c) = sign;
        }
        chain.dims[q] = std::move(m);
    }
    return chain;
}

std::optional<std::pair<VertexId, VertexId>> cylinder_violation(const VertexMap& f,
                                                                const VertexMap& g) {
    if (!(f.source() == g.source()) || !(f.target() == g.target()))
        throw input_error("cylinder slices have mismatched spaces");
    const Space& src = f.source();
    const Space& dst = f.target();
    for (VertexId u = 0; u < src.size(); ++u)
        for (VertexId v : src.neighborhood(u))
            if (!dst.related(f(u), g(v))) return std::make_pair(u, v);
    return std::nullopt;
}

bool cylinder_related(const VertexMap& f, const VertexMap& g) { return !cylinder_violation(f, g); }

std::vector<IntegerMatrix> prism_homotopy(const VertexMap& f, const VertexMap& g,
                                          const CliqueComplex& source,
                                          const CliqueComplex& target) {
    if (auto bad = cylinder_violation(f, g))
        throw precondition_error("slices are not one-step related at ('" +
                                     f.source().name(bad->first) + "','" +
                                     f.source().name(bad->second) + "')",
                                 f.source().name(bad->first));
    const int cap = std::min(source.max_dim, target.max_dim - 1);
    std::vector<IntegerMatrix> prism(std::max(cap + 1, 0));
    std::vector<VertexId> tuple;
    for (int q = 0; q <= cap; ++q) {
        const SimplexList& cells = source.levels[q];
        IntegerMatrix m(target.count(q + 1), cells.count());
        for (std::size_t c = 0; c < cells.count(); ++c) {
            const auto cell = cells[c];
            int outer = 1;
            for (int i = 0; i <= q; ++i) {
                // [f(x0)..f(xi), g(xi)..g(xq)]
                tuple.clear();
                for (int a = 0; a <= i; ++a) tuple.push_back(f(cell[a]));
                for (int a = i; a <= q; ++a) tuple.push_back(g(cell[a]));
                const int sign = normalize_tuple(tuple);
                if (sign != 0) {
                    const auto row = target.levels[q + 1].find(tuple);
                    if (!row) throw input_error("prism simplex missing from the target complex");
                    m.at(*row, c) += outer * sign;
                }
                outer = -outer;
            }
        }
        prism[q] = std::move(m);
    }
    return prism;
}

// ---------------------------------------------------------------------------
// Ordered-tuple oracle. Deliberately its own code path: ordered bases, its
// own boundary assembly, and a plain diagonalization without transform
// tracking.

namespace {

std::size_t oracle_diag_rank(std::vector<std::vector<Int>> m, std::vector<Int>* factors) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    const std::size_t lim = std::min(rows, cols);
    while (r < lim) {
        std::size_t pi = r, pj = r;
        Int best = 0;
        for (std::size_t i = r; i < rows; ++i)
            for (std::size_t j = r; j < cols; ++j)
                if (m[i][j] != 0 && (best == 0 || abs(m[i][j]) < abs(best))) {
                    best = m[i][j];
                    pi = i;
                    pj = j;
                }
        if (best == 0) break;
        std::swap(m[r], m[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][r], m[i][pj]);
        bool reduced = true;
        for (std::size_t i = r + 1; i < rows; ++i)
            if (m[i][r] != 0) {
                Int q = m[i][r] / m[r][r];
                for (std::size_t j = r; j < cols; ++j) m[i][j] -= q * m[r][j];
                if (m[i][r] != 0) reduced = false;
            }
        for (std::size_t j = r + 1; j < cols; ++j)
            if (m[r][j] != 0) {
                Int q = m[r][j] / m[r][r];
                for (std::size_t i = r; i < rows; ++i) m[i][j] -= q * m[i][r];
                if (m[r][j] != 0) reduced = false;
            }
        if (!reduced) continue;
        bool divides = true;
        for (std::size_t i = r + 1; i < rows && divides; ++i)
            for (std::size_t j = r + 1; j < cols && divides; ++j)
                if (m[i][j] % m[r][r] != 0) {
                    for (std::size_t jj = r; jj < cols; ++jj) m[r][jj] += m[i][jj];
                    divides = false;
                }
        if (!divides) continue;
        if (factors) factors->push_back(abs(m[r][r]));
        ++r;
    }
    return r;
}

}  // namespace

std::vector<HomologyGroup> ordered_chain_oracle(const Space& x, int max_dim) {
    if (x.size() > 6) throw input_error("oracle accepts at most 6 vertices");
    if (max_dim > 2) throw input_error("oracle accepts max_dim at most 2");
    if (max_dim < 0) throw input_error("dimension cap must be nonnegative");

    // Ordered bases: tuples of pairwise-related vertices in every order,
    // repeats allowed (the roof is reflexive). Faces of basis tuples are
    // again basis tuples.
    std::vector<std::vector<std::vector<VertexId>>> bases(max_dim + 1);
    for (VertexId v = 0; v < x.size(); ++v) bases[0].push_back({v});
    for (int q = 1; q <= max_dim; ++q) {
        for (const auto& t : bases[q - 1]) {
            for (VertexId u = 0; u < x.size(); ++u) {
                bool ok = true;
                for (VertexId w : t)
                    if (!x.related(w, u)) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                auto longer = t;
                longer.push_back(u);
                bases[q].push_back(std::move(longer));
            }
        }
        std::sort(bases[q].begin(), bases[q].end());
    }

    auto index_of = [&](int q, const std::vector<VertexId>& t) -> std::size_t {
        const auto it = std::lower_bound(bases[q].begin(), bases[q].end(), t);
        return static_cast<std::size_t>(it - bases[q].begin());
    };

    auto boundary_of = [&](int q) {
        std::vector<std::vector<Int>> d(bases[q - 1].size(),
                                        std::vector<Int>(bases[q].size(), Int(0)));
        for (std::size_t c = 0; c < bases[q].size(); ++c) {
            int sign = 1;
            for (int drop = 0; drop <= q; ++drop) {
                std::vector<VertexId> face;
                for (int i = 0; i <= q; ++i)
                    if (i != drop) face.push_back(bases[q][c][i]);
                d[index_of(q - 1, face)][c] += sign;
                sign = -sign;
            }
        }
        return d;
    };

    std::vector<std::size_t> ranks(max_dim + 2, 0);
    std::vector<std::vector<Int>> factors(max_dim + 2);
    for (int q = 1; q <= max_dim; ++q) {
        if (bases[q].empty()) break;
        std::vector<Int> diag;
        ranks[q] = oracle_diag_rank(boundary_of(q), &diag);
        for (const Int& f : diag)
            if (f > 1) factors[q].push_back(f);
    }

    std::vector<HomologyGroup> groups;
    for (int q = 0; q <= max_dim; ++q) {
        HomologyGroup g;
        g.dim = q;
        g.betti = bases[q].size() - ranks[q] - ranks[q + 1];
        g.torsion = factors[q + 1];
        g.cap_limited = (q == max_dim);
        groups.push_back(std::move(g));
    }
    return groups;
}

std::vector<std::vector<Int>> kernel_basis(const IntegerMatrix& m) {
    SmithDecomposition snf = smith_normal_form(m);
    const std::size_t r = snf.rank();
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = r; j < m.cols(); ++j) {
        std::vector<Int> v(m.cols());
        for (std::size_t i = 0; i < m.cols(); ++i) v[i] = snf.v.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace sc
