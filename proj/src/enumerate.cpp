#include "circumlab/enumerate.hpp"

#include <string>

#include "circumlab/connectivity.hpp"

namespace circumlab {

GraphFilter parse_filter(const std::string& name) {
    if (name == "all") return GraphFilter::all;
    if (name == "connected") return GraphFilter::connected;
    if (name == "two_connected") return GraphFilter::two_connected;
    fail(errc::invalid_argument, "unknown filter '" + name + "'");
}

int edge_slot_count(int n) { return n * (n - 1) / 2; }

std::uint64_t labeled_graph_count(int n) {
    if (n < 1 || n > 8)
        fail(errc::too_large, "labeled enumeration supports 1 <= n <= 8, got " + std::to_string(n));
    return std::uint64_t{1} << edge_slot_count(n);
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((mask >> k) & 1u) {
                adj[static_cast<std::size_t>(i)] |= bit(j);
                adj[static_cast<std::size_t>(j)] |= bit(i);
            }
    return detail::make_graph(n, std::move(adj));
}

bool passes_filter(const Graph& g, GraphFilter f) {
    switch (f) {
    case GraphFilter::all: return true;
    case GraphFilter::connected: return is_connected(g);
    case GraphFilter::two_connected: return vertex_connectivity(g).two_connected();
    }
    return false;
}

void for_each_labeled_graph(int n, GraphFilter f, const std::function<void(const Graph&)>& fn) {
    const std::uint64_t total = labeled_graph_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g = graph_from_edge_mask(n, mask);
        if (passes_filter(g, f)) fn(g);
    }
}

} // namespace circumlab
