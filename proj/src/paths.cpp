#include "circumlab/paths.hpp"

#include <algorithm>

namespace circumlab {

int OrientedPath::position_of(int v) const {
    for (std::size_t i = 0; i < verts.size(); ++i)
        if (verts[i] == v) return static_cast<int>(i);
    return -1;
}

bool OrientedPath::precedes(int a, int b) const {
    const int pa = position_of(a), pb = position_of(b);
    return pa >= 0 && pb >= 0 && pa < pb;
}

bool OrientedPath::precedes_eq(int a, int b) const { return a == b || precedes(a, b); }

std::optional<int> OrientedPath::successor(int v) const {
    const int p = position_of(v);
    if (p < 0 || p + 1 >= order()) return std::nullopt;
    return verts[static_cast<std::size_t>(p + 1)];
}

std::optional<int> OrientedPath::predecessor(int v) const {
    const int p = position_of(v);
    if (p <= 0) return std::nullopt;
    return verts[static_cast<std::size_t>(p - 1)];
}

std::vector<int> OrientedPath::segment(int from, int to) const {
    std::vector<int> out;
    if (from <= to) {
        for (int i = from; i <= to; ++i) out.push_back(verts[static_cast<std::size_t>(i)]);
    } else {
        for (int i = from; i >= to; --i) out.push_back(verts[static_cast<std::size_t>(i)]);
    }
    return out;
}

OrientedPath OrientedPath::reversed() const {
    OrientedPath r = *this;
    std::reverse(r.verts.begin(), r.verts.end());
    return r;
}

std::uint64_t OrientedPath::vertex_mask() const {
    std::uint64_t m = 0;
    for (int v : verts) m |= bit(v);
    return m;
}

bool is_path_in(const Graph& g, std::span<const int> verts) {
    if (verts.empty()) return false;
    std::uint64_t seen = 0;
    for (int v : verts) {
        if (v < 0 || v >= g.order()) return false;
        if (seen & bit(v)) return false;
        seen |= bit(v);
    }
    for (std::size_t i = 0; i + 1 < verts.size(); ++i)
        if (!g.adjacent(verts[i], verts[i + 1])) return false;
    return true;
}

bool is_cycle_in(const Graph& g, std::span<const int> verts) {
    if (verts.size() < 3) return false;
    if (!is_path_in(g, verts)) return false;
    return g.adjacent(verts.back(), verts.front());
}

} // namespace circumlab
