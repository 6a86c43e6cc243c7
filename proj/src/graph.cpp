#include "circumlab/graph.hpp"

#include <algorithm>
#include <string>

namespace circumlab {

namespace detail {

Graph make_graph(int n, std::vector<std::uint64_t> adj) {
    if (n < 0 || n > Graph::max_order)
        fail(errc::too_large, "graph order " + std::to_string(n) + " outside 0.." +
                                  std::to_string(Graph::max_order));
    const std::uint64_t allowed = n == 0 ? 0 : ~std::uint64_t{0} >> (64 - n);
    for (int v = 0; v < n; ++v) {
        if (adj[v] & ~allowed)
            fail(errc::construction_invalid, "adjacency bit beyond vertex range");
        if ((adj[v] >> v) & 1u)
            fail(errc::self_loop, "vertex " + std::to_string(v) + " adjacent to itself");
    }
    for (int v = 0; v < n; ++v)
        for (std::uint64_t m = adj[v]; m;) {
            const int u = std::countr_zero(m);
            m &= m - 1;
            if (!((adj[u] >> v) & 1u))
                fail(errc::construction_invalid, "asymmetric adjacency");
        }
    Graph g;
    g.n_ = n;
    g.adj_ = std::move(adj);
    return g;
}

} // namespace detail

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (int j = 1; j < n_; ++j)
        for (int i = 0; i < j; ++i)
            if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
}

Graph build_graph(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0 || n > Graph::max_order)
        fail(errc::too_large, "graph order " + std::to_string(n) + " outside 0.." +
                                  std::to_string(Graph::max_order));
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            fail(errc::index_out_of_range, "edge (" + std::to_string(a) + "," +
                                               std::to_string(b) + ") on " + std::to_string(n) +
                                               " vertices");
        if (a == b) fail(errc::self_loop, "loop at vertex " + std::to_string(a));
        adj[a] |= bit(b); // duplicates merge
        adj[b] |= bit(a);
    }
    return detail::make_graph(n, std::move(adj));
}

Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    return build_graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph empty_graph(int n) { return build_graph(n, {}); }

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) e.emplace_back(i, j);
    return build_graph(n, e);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_graph(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) fail(errc::invalid_argument, "cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return build_graph(n, e);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int n = g.order() + h.order();
    if (n > Graph::max_order)
        fail(errc::too_large, "union order " + std::to_string(n) + " exceeds " +
                                  std::to_string(Graph::max_order));
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v);
    for (int v = 0; v < h.order(); ++v)
        adj[g.order() + v] = h.neighbors(v) << g.order();
    return detail::make_graph(n, std::move(adj));
}

Graph join(const Graph& g, const Graph& h) {
    Graph u = disjoint_union(g, h);
    const int n = u.order();
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) adj[v] = u.neighbors(v);
    const std::uint64_t left = g.order() == 0 ? 0 : ~std::uint64_t{0} >> (64 - g.order());
    const std::uint64_t right = u.vertex_mask() & ~left;
    for (int v = 0; v < g.order(); ++v) adj[v] |= right;
    for (int v = g.order(); v < n; ++v) adj[v] |= left;
    return detail::make_graph(n, std::move(adj));
}

DegreeSequence::DegreeSequence(std::vector<int> ascending) : sorted_(std::move(ascending)) {
    if (!std::is_sorted(sorted_.begin(), sorted_.end()))
        fail(errc::invalid_argument, "degree sequence must be ascending");
}

int DegreeSequence::min_degree() const {
    if (sorted_.empty()) fail(errc::invalid_argument, "empty degree sequence has no minimum");
    return sorted_.front();
}

std::optional<int> DegreeSequence::at(int k) const {
    if (k < 1 || k > size()) return std::nullopt;
    return sorted_[static_cast<std::size_t>(k - 1)];
}

DegreeSequence degree_sequence(const Graph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
    std::sort(d.begin(), d.end());
    return DegreeSequence(std::move(d));
}

} // namespace circumlab
