#include "circumlab/oracles.hpp"

#include <bit>
#include <string>

namespace circumlab {

namespace {

// Vertices of `allowed` reachable from `from` (from itself excluded).
std::uint64_t reachable_through(const Graph& g, int from, std::uint64_t allowed) {
    std::uint64_t comp = 0;
    std::uint64_t frontier = g.neighbors(from) & allowed;
    while (frontier) {
        comp |= frontier;
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            next |= g.neighbors(v);
        }
        frontier = next & allowed & ~comp;
    }
    return comp;
}

struct PathSearch {
    const Graph& g;
    std::uint64_t all;
    std::vector<int> cur;
    std::uint64_t visited = 0;
    int best = 0;
    std::vector<int> best_verts;

    explicit PathSearch(const Graph& graph) : g(graph), all(graph.vertex_mask()) {}

    void dfs(int at) {
        if (static_cast<int>(cur.size()) > best) {
            best = static_cast<int>(cur.size());
            best_verts = cur;
        }
        const std::uint64_t rest = all & ~visited;
        if (!rest) return;
        const std::uint64_t reach = reachable_through(g, at, rest);
        if (static_cast<int>(cur.size()) + std::popcount(reach) <= best) return;
        for (std::uint64_t m = g.neighbors(at) & rest; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            visited |= bit(v);
            cur.push_back(v);
            dfs(v);
            cur.pop_back();
            visited &= ~bit(v);
        }
    }
};

struct CycleSearch {
    const Graph& g;
    int start = 0;
    std::uint64_t allowed = 0; // vertices > start
    std::vector<int> cur;
    std::uint64_t visited = 0;
    int best = 0;
    std::vector<int> best_verts;

    explicit CycleSearch(const Graph& graph) : g(graph) {}

    void dfs(int at) {
        if (static_cast<int>(cur.size()) >= 3 && g.adjacent(at, start) &&
            static_cast<int>(cur.size()) > best) {
            best = static_cast<int>(cur.size());
            best_verts = cur;
        }
        const std::uint64_t rest = allowed & ~visited;
        const std::uint64_t reach = reachable_through(g, at, rest);
        if (static_cast<int>(cur.size()) + std::popcount(reach) <= best) return;
        // must still be able to close back to start
        if (!((reach | bit(at)) & g.neighbors(start))) return;
        for (std::uint64_t m = g.neighbors(at) & rest; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            visited |= bit(v);
            cur.push_back(v);
            dfs(v);
            cur.pop_back();
            visited &= ~bit(v);
        }
    }
};

} // namespace

LongestPathResult longest_path(const Graph& g) {
    if (g.order() < 1) fail(errc::invalid_argument, "longest_path needs n >= 1");
    PathSearch s(g);
    for (int v = 0; v < g.order(); ++v) {
        s.cur.assign(1, v);
        s.visited = bit(v);
        s.dfs(v);
    }
    return {s.best, OrientedPath{std::move(s.best_verts)}};
}

CircumferenceResult circumference(const Graph& g) {
    CycleSearch s(g);
    for (int v = 0; v + 2 < g.order(); ++v) {
        // cycles whose minimum vertex is v
        s.start = v;
        s.allowed = g.vertex_mask() & ~(bit(v) | (bit(v) - 1));
        s.cur.assign(1, v);
        s.visited = bit(v);
        s.dfs(v);
    }
    if (s.best == 0) return {0, std::nullopt};
    return {s.best, CycleWitness{std::move(s.best_verts)}};
}

HamiltonicityResult is_hamiltonian(const Graph& g) {
    if (g.order() < 3) return {false, std::nullopt};
    CircumferenceResult c = circumference(g);
    if (c.order == g.order()) return {true, std::move(c.witness)};
    return {false, std::nullopt};
}

namespace {

struct Enumerator {
    const Graph& g;
    int target;
    const std::function<void(const OrientedPath&)>& yield;
    std::uint64_t budget;
    std::uint64_t all;
    std::uint64_t steps = 0;
    std::uint64_t count = 0;
    OrientedPath buf;
    std::uint64_t visited = 0;

    void dfs(int at) {
        if (++steps > budget) throw ResourceLimitError(count, budget);
        if (buf.order() == target) {
            ++count;
            yield(buf);
            return; // a longest path has no extension
        }
        const std::uint64_t rest = all & ~visited;
        const std::uint64_t reach = reachable_through(g, at, rest);
        if (buf.order() + std::popcount(reach) < target) return;
        for (std::uint64_t m = g.neighbors(at) & rest; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            visited |= bit(v);
            buf.verts.push_back(v);
            dfs(v);
            buf.verts.pop_back();
            visited &= ~bit(v);
        }
    }
};

} // namespace

std::uint64_t enumerate_longest_paths(const Graph& g,
                                      const std::function<void(const OrientedPath&)>& yield,
                                      std::uint64_t budget) {
    if (g.order() < 2) fail(errc::invalid_argument, "enumerate_longest_paths needs n >= 2");
    const int p = longest_path(g).order;
    Enumerator e{g, p, yield, budget, g.vertex_mask()};
    for (int v = 0; v < g.order(); ++v) {
        e.buf.verts.assign(1, v);
        e.visited = bit(v);
        e.dfs(v);
    }
    return e.count;
}

} // namespace circumlab
