// Copyright 2026 the semicoarse contributors
// SPDX-License-Identifier: Apache-2.0

#include "sc/space.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "sc/kernels.hpp"

namespace sc {

std::optional<VertexId> Space::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VertexId Space::require(std::string_view name) const {
    auto v = find(name);
    if (!v) throw input_error("unknown vertex '" + std::string(name) + "'");
    return *v;
}

std::vector<std::pair<VertexId, VertexId>> Space::roof_pairs() const {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(roof_size());
    for (VertexId u = 0; u < size(); ++u)
        for (VertexId v : nbrs_[u]) pairs.emplace_back(u, v);
    return pairs;
}

void Space::finalize() {
    index_.clear();
    index_.reserve(names_.size());
    for (VertexId v = 0; v < names_.size(); ++v) index_.emplace(names_[v], v);
    roof_.set_diagonal();
    nbrs_.assign(names_.size(), {});
    for (VertexId u = 0; u < names_.size(); ++u)
        for (VertexId v = 0; v < names_.size(); ++v)
            if (roof_.get(u, v)) nbrs_[u].push_back(v);
}

Space space_from_relation(std::vector<std::string> names, RelationMatrix roof) {
    Space s;
    s.names_ = std::move(names);
    s.roof_ = std::move(roof);
    s.finalize();
    return s;
}

// ---------------------------------------------------------------------------
// Constructors

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return names;
}

VertexId index_of(const std::vector<std::string>& sorted_names, const std::string& name) {
    auto it = std::lower_bound(sorted_names.begin(), sorted_names.end(), name);
    if (it == sorted_names.end() || *it != name)
        throw input_error("unknown vertex '" + name + "' in a pair");
    return static_cast<VertexId>(it - sorted_names.begin());
}

}  // namespace

Space new_space(std::vector<std::string> vertices,
                const std::vector<std::pair<std::string, std::string>>& pairs) {
    auto names = sorted_unique(std::move(vertices));
    RelationMatrix roof(names.size());
    for (const auto& [a, b] : pairs) roof.set_symmetric(index_of(names, a), index_of(names, b));
    return space_from_relation(std::move(names), std::move(roof));
}

Space from_graph(const std::vector<std::pair<std::string, std::string>>& edges,
                 const std::vector<std::string>& isolated) {
    std::vector<std::string> vertices(isolated);
    for (const auto& [a, b] : edges) {
        vertices.push_back(a);
        vertices.push_back(b);
    }
    return new_space(std::move(vertices), edges);
}

Space from_point_cloud(const PointCloud& cloud, const Rational& scale, bool strict) {
    if (scale < 0) throw input_error("scale must be nonnegative");
    const std::size_t count = cloud.points.size();
    if (!cloud.labels.empty() && cloud.labels.size() != count)
        throw input_error("label count does not match point count");
    const std::size_t dim = count ? cloud.points.front().size() : 0;
    for (const auto& p : cloud.points)
        if (p.size() != dim) throw input_error("points have mismatched dimensions");

    std::vector<std::string> names(count);
    for (std::size_t i = 0; i < count; ++i)
        names[i] = cloud.labels.empty() ? std::to_string(i) : cloud.labels[i];
    {
        auto check = names;
        std::sort(check.begin(), check.end());
        if (std::adjacent_find(check.begin(), check.end()) != check.end())
            throw input_error("duplicate point labels");
    }

    const Rational threshold = scale * scale;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            Rational d2 = 0;
            for (std::size_t k = 0; k < dim; ++k) {
                Rational diff = cloud.points[i][k] - cloud.points[j][k];
                d2 += diff * diff;
            }
            const bool related = strict ? (d2 < threshold) : (d2 <= threshold);
            if (related) pairs.emplace_back(names[i], names[j]);
        }
    }
    return new_space(std::move(names), pairs);
}

// ---------------------------------------------------------------------------
// Maps

VertexMap::VertexMap(SpacePtr source, SpacePtr target, std::vector<VertexId> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
    if (table_.size() != source_->size()) throw input_error("map table is not total");
    for (VertexId v : table_)
        if (v >= target_->size()) throw input_error("map image vertex out of range");
}

VertexMap VertexMap::from_names(SpacePtr source, SpacePtr target,
                                const std::vector<std::pair<std::string, std::string>>& entries) {
    std::vector<VertexId> table(source->size(), static_cast<VertexId>(source->size()));
    std::vector<bool> seen(source->size(), false);
    for (const auto& [from, to] : entries) {
        const VertexId s = source->require(from);
        if (seen[s]) throw input_error("duplicate map entry for vertex '" + from + "'");
        seen[s] = true;
        table[s] = target->require(to);
    }
    for (VertexId v = 0; v < source->size(); ++v)
        if (!seen[v]) throw input_error("map is not total: vertex '" + source->name(v) + "' unmapped");
    return VertexMap(std::move(source), std::move(target), std::move(table));
}

std::optional<std::pair<VertexId, VertexId>> bornologous_violation(const VertexMap& f) {
    const Space& src = f.source();
    const Space& dst = f.target();
    for (VertexId u = 0; u < src.size(); ++u)
        for (VertexId v : src.neighborhood(u))
            if (!dst.related(f(u), f(v))) return std::make_pair(u, v);
    return std::nullopt;
}

bool is_bornologous(const VertexMap& f) { return !bornologous_violation(f); }

VertexMap compose(const VertexMap& g, const VertexMap& f) {
    if (!(f.target() == g.source())) throw input_error("maps are not composable");
    std::vector<VertexId> table(f.source().size());
    for (VertexId v = 0; v < table.size(); ++v) table[v] = g(f(v));
    return VertexMap(f.source_ptr(), g.target_ptr(), std::move(table));
}

// ---------------------------------------------------------------------------
// Constructions

Space subspace(const Space& x, const std::vector<std::string>& keep) {
    std::vector<VertexId> ids;
    ids.reserve(keep.size());
    for (const auto& name : keep) {
        auto v = x.find(name);
        if (!v) throw input_error("subspace vertex '" + name + "' is not in the space");
        ids.push_back(*v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    std::vector<std::string> names(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) names[i] = x.name(ids[i]);
    RelationMatrix roof(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = 0; j < ids.size(); ++j)
            if (x.related(ids[i], ids[j])) roof.set(i, j);
    return space_from_relation(std::move(names), std::move(roof));
}

Space product(const Space& x, const Space& y) {
    std::vector<std::string> names;
    names.reserve(x.size() * y.size());
    for (VertexId a = 0; a < x.size(); ++a)
        for (VertexId b = 0; b < y.size(); ++b) names.push_back(x.name(a) + "|" + y.name(b));
    std::sort(names.begin(), names.end());

    Space out = space_from_relation(std::move(names), RelationMatrix(x.size() * y.size()));
    // Rebuild the relation against the sorted name order.
    RelationMatrix roof(out.size());
    std::vector<VertexId> id(x.size() * y.size());
    for (VertexId a = 0; a < x.size(); ++a)
        for (VertexId b = 0; b < y.size(); ++b)
            id[a * y.size() + b] = out.require(x.name(a) + "|" + y.name(b));
    for (VertexId a = 0; a < x.size(); ++a)
        for (VertexId c = 0; c < x.size(); ++c) {
            if (!x.related(a, c)) continue;
            for (VertexId b = 0; b < y.size(); ++b)
                for (VertexId d = 0; d < y.size(); ++d)
                    if (y.related(b, d)) roof.set(id[a * y.size() + b], id[c * y.size() + d]);
        }
    return space_from_relation(out.vertex_names(), std::move(roof));
}

Space quotient(const Space& x, const std::unordered_map<std::string, std::string>& table,
               const std::vector<std::string>* declared_codomain) {
    std::vector<VertexId> g(x.size());
    std::vector<std::string> images;
    images.reserve(x.size());
    for (VertexId v = 0; v < x.size(); ++v) {
        auto it = table.find(x.name(v));
        if (it == table.end())
            throw input_error("quotient map is not total: vertex '" + x.name(v) + "' unmapped");
        images.push_back(it->second);
    }
    std::vector<std::string> names;
    if (declared_codomain) {
        names = sorted_unique(*declared_codomain);
        std::set<std::string> hit(images.begin(), images.end());
        for (const auto& name : names)
            if (!hit.count(name))
                throw input_error("quotient map is not surjective: '" + name + "' has no preimage");
    } else {
        names = sorted_unique(images);
    }
    for (VertexId v = 0; v < x.size(); ++v) g[v] = index_of(names, images[v]);

    RelationMatrix roof(names.size());
    for (VertexId u = 0; u < x.size(); ++u)
        for (VertexId v : x.neighborhood(u)) roof.set(g[u], g[v]);
    return space_from_relation(std::move(names), std::move(roof));
}

Space disjoint_union(const std::vector<Space>& parts) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (const auto& name : parts[i].vertex_names())
            names.push_back(std::to_string(i) + ":" + name);
    names = sorted_unique(names);

    RelationMatrix roof(names.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const Space& part = parts[i];
        const std::string tag = std::to_string(i) + ":";
        for (VertexId u = 0; u < part.size(); ++u)
            for (VertexId v : part.neighborhood(u))
                roof.set(index_of(names, tag + part.name(u)), index_of(names, tag + part.name(v)));
    }
    return space_from_relation(std::move(names), std::move(roof));
}

Space set_product_extension(const Space& x) {
    return space_from_relation(x.vertex_names(), kernels::square(x.roof()));
}

CompletionResult coarse_completion(const Space& x) {
    RelationMatrix current = x.roof();
    int iterations = 0;
    for (;;) {
        RelationMatrix next = kernels::square(current);
        if (next == current) break;
        current = std::move(next);
        ++iterations;
    }
    return {space_from_relation(x.vertex_names(), std::move(current)), iterations};
}

bool is_coarse(const Space& x) { return kernels::square(x.roof()) == x.roof(); }

std::vector<std::vector<VertexId>> components(const Space& x) {
    std::vector<int> label(x.size(), -1);
    std::vector<std::vector<VertexId>> parts;
    for (VertexId start = 0; start < x.size(); ++start) {
        if (label[start] >= 0) continue;
        const int id = static_cast<int>(parts.size());
        parts.emplace_back();
        std::queue<VertexId> queue;
        queue.push(start);
        label[start] = id;
        while (!queue.empty()) {
            const VertexId u = queue.front();
            queue.pop();
            parts[id].push_back(u);
            for (VertexId v : x.neighborhood(u)) {
                if (label[v] < 0) {
                    label[v] = id;
                    queue.push(v);
                }
            }
        }
        std::sort(parts[id].begin(), parts[id].end());
    }
    return parts;
}

Space roof_foundation_roundtrip(const Space& x) {
    // The roof is the foundation of the unique cemented semi-uniform structure
    // above the space; descending again keeps exactly the sets under it.
    RelationMatrix foundation = x.roof();
    return space_from_relation(x.vertex_names(), std::move(foundation));
}

}  // namespace sc
