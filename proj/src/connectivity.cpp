#include "circumlab/connectivity.hpp"

#include <bit>

namespace circumlab {

namespace {

// Component mask of `start` inside `allowed` (start must be in allowed).
std::uint64_t component_of(const Graph& g, int start, std::uint64_t allowed) {
    std::uint64_t comp = bit(start) & allowed;
    std::uint64_t frontier = comp;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            next |= g.neighbors(v);
        }
        frontier = next & allowed & ~comp;
        comp |= frontier;
    }
    return comp;
}

bool connected_within(const Graph& g, std::uint64_t allowed) {
    if (!allowed) return false;
    const int start = std::countr_zero(allowed);
    return component_of(g, start, allowed) == allowed;
}

// Any subset of size `size` from `pool` whose removal disconnects the rest?
bool cut_of_size_exists(const Graph& g, int size, std::uint64_t pool, std::uint64_t removed) {
    if (size == 0) {
        const std::uint64_t rest = g.vertex_mask() & ~removed;
        return std::popcount(rest) >= 2 && !connected_within(g, rest);
    }
    for (std::uint64_t m = pool; m;) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        if (cut_of_size_exists(g, size - 1, m, removed | bit(v))) return true;
    }
    return false;
}

} // namespace

bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    return connected_within(g, g.vertex_mask());
}

ConnectivityReport vertex_connectivity(const Graph& g) {
    ConnectivityReport r;
    const int n = g.order();
    r.connected = is_connected(g);
    for (int v = 0; v < n; ++v) {
        const std::uint64_t rest = g.vertex_mask() & ~bit(v);
        if (std::popcount(rest) >= 2 && !connected_within(g, rest)) r.cut_vertices.push_back(v);
    }
    if (n == 0) return r;
    const bool complete = g.edge_count() == n * (n - 1) / 2;
    if (complete) {
        r.kappa = n - 1;
        return r;
    }
    if (!r.connected) return r; // kappa = 0
    for (int s = 1; s <= n - 2; ++s) {
        if (cut_of_size_exists(g, s, g.vertex_mask(), 0)) {
            r.kappa = s;
            return r;
        }
    }
    // non-complete graphs always have a separating set of size <= n-2
    fail(errc::construction_invalid, "connectivity search exhausted without finding a cut");
}

} // namespace circumlab
