#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "circumlab/graph.hpp"

namespace circumlab {

/// A directed traversal v1..vp of distinct vertices of some host graph.
/// Precedence, successor/predecessor and segment extraction all refer to
/// positions along this orientation.
struct OrientedPath {
    std::vector<int> verts;

    int order() const { return static_cast<int>(verts.size()); }
    int front() const { return verts.front(); }
    int back() const { return verts.back(); }

    int position_of(int v) const;           // -1 when absent
    bool contains(int v) const { return position_of(v) >= 0; }
    bool precedes(int a, int b) const;      // strict, both must be on the path
    bool precedes_eq(int a, int b) const;
    std::optional<int> successor(int v) const;
    std::optional<int> predecessor(int v) const;

    /// Vertices from position `from` to position `to` inclusive; walks
    /// backwards when from > to.
    std::vector<int> segment(int from, int to) const;
    OrientedPath reversed() const;
    std::uint64_t vertex_mask() const;

    bool operator==(const OrientedPath&) const = default;
};

struct CycleWitness {
    std::vector<int> verts; // cyclic order, first vertex not repeated
    int order() const { return static_cast<int>(verts.size()); }
    bool operator==(const CycleWitness&) const = default;
};

bool is_path_in(const Graph& g, std::span<const int> verts);
bool is_cycle_in(const Graph& g, std::span<const int> verts);

} // namespace circumlab
