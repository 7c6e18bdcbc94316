// Copyright 2026 the semicoarse contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sc/errors.hpp"
#include "sc/relation.hpp"

namespace sc {

using VertexId = std::uint32_t;
using Rational = boost::multiprecision::cpp_rational;

class Space;
using SpacePtr = std::shared_ptr<const Space>;

// A finite semi-coarse space in its canonical roofed representation: a vertex
// set together with a symmetric, reflexive roof relation. Vertices are stored
// sorted by name; all values are immutable after construction.
class Space {
public:
    Space() = default;

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& name(VertexId v) const { return names_[v]; }

    std::optional<VertexId> find(std::string_view name) const;
    VertexId require(std::string_view name) const;  // input_error when missing

    bool related(VertexId u, VertexId v) const { return roof_.get(u, v); }
    const RelationMatrix& roof() const { return roof_; }

    // Closed neighborhood (self included), ascending.
    const std::vector<VertexId>& neighborhood(VertexId v) const { return nbrs_[v]; }
    std::size_t degree(VertexId v) const { return nbrs_[v].size() - 1; }

    // Ordered pairs, diagonal included.
    std::size_t roof_size() const { return roof_.count(); }
    std::vector<std::pair<VertexId, VertexId>> roof_pairs() const;

    bool operator==(const Space& other) const {
        return names_ == other.names_ && roof_ == other.roof_;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> index_;
    RelationMatrix roof_;
    std::vector<std::vector<VertexId>> nbrs_;

    void finalize();

    friend Space space_from_relation(std::vector<std::string> names, RelationMatrix roof);
};

// Internal constructor: names must be sorted and unique, roof symmetric; the
// diagonal is added here.
Space space_from_relation(std::vector<std::string> names, RelationMatrix roof);

inline SpacePtr share(Space s) { return std::make_shared<const Space>(std::move(s)); }

// ---------------------------------------------------------------------------
// Constructors

Space new_space(std::vector<std::string> vertices,
                const std::vector<std::pair<std::string, std::string>>& pairs);

Space from_graph(const std::vector<std::pair<std::string, std::string>>& edges,
                 const std::vector<std::string>& isolated = {});

struct PointCloud {
    std::vector<std::vector<Rational>> points;
    std::vector<std::string> labels;  // optional; defaults to decimal indices
};

// Euclidean scale graph: (x, x') related iff d(x, x') <= r (or < r when
// strict). Comparisons are exact over the rationals.
Space from_point_cloud(const PointCloud& cloud, const Rational& scale, bool strict = false);

// ---------------------------------------------------------------------------
// Maps

class VertexMap {
public:
    VertexMap(SpacePtr source, SpacePtr target, std::vector<VertexId> table);

    static VertexMap from_names(SpacePtr source, SpacePtr target,
                                const std::vector<std::pair<std::string, std::string>>& entries);

    const Space& source() const { return *source_; }
    const Space& target() const { return *target_; }
    const SpacePtr& source_ptr() const { return source_; }
    const SpacePtr& target_ptr() const { return target_; }

    VertexId operator()(VertexId v) const { return table_[v]; }
    const std::vector<VertexId>& table() const { return table_; }

private:
    SpacePtr source_;
    SpacePtr target_;
    std::vector<VertexId> table_;
};

bool is_bornologous(const VertexMap& f);
// First source roof pair mapped outside the target roof, if any.
std::optional<std::pair<VertexId, VertexId>> bornologous_violation(const VertexMap& f);

VertexMap compose(const VertexMap& g, const VertexMap& f);  // g ∘ f

// ---------------------------------------------------------------------------
// Constructions

Space subspace(const Space& x, const std::vector<std::string>& keep);

// Vertices are pairs named "u|v"; the roof is the box product of the factors.
Space product(const Space& x, const Space& y);

// Roof image under g×g. `table` must cover every vertex of x; when a codomain
// is declared, g must be onto it.
Space quotient(const Space& x, const std::unordered_map<std::string, std::string>& table,
               const std::vector<std::string>* declared_codomain = nullptr);

// Vertices tagged "i:u" by part index; no cross pairs.
Space disjoint_union(const std::vector<Space>& parts);

// Roof replaced by roof ∘ roof (which contains the roof, as the diagonal is
// present).
Space set_product_extension(const Space& x);

struct CompletionResult {
    Space space;
    int iterations = 0;
};

// Least fixpoint of set_product_extension: per-component complete relation.
CompletionResult coarse_completion(const Space& x);

bool is_coarse(const Space& x);  // fixpoint test

std::vector<std::vector<VertexId>> components(const Space& x);

// Interprets the roof as the foundation of the unique cemented semi-uniform
// structure and converts back; the identity, rebuilt from scratch.
Space roof_foundation_roundtrip(const Space& x);

}  // namespace sc
