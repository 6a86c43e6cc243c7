#pragma once

#include <cstdint>
#include <functional>

#include "circumlab/graph.hpp"

namespace circumlab {

// Labeled (not isomorphism-reduced) enumeration over all edge subsets of K_n.
// Edge slot k corresponds to the k-th upper-triangle pair ordered by (j, i)
// with i < j — the same order as the graph6 bit layout — and graphs are
// produced with the edge-set integer ascending.

enum class GraphFilter { all, connected, two_connected };

GraphFilter parse_filter(const std::string& name); // throws invalid_argument

int edge_slot_count(int n);
std::uint64_t labeled_graph_count(int n); // 2^(n(n-1)/2); requires n <= 8

Graph graph_from_edge_mask(int n, std::uint64_t mask);
bool passes_filter(const Graph& g, GraphFilter f);

/// Calls fn for every labeled graph on n vertices passing the filter,
/// mask-ascending. Requires 1 <= n <= 8 (too_large above).
void for_each_labeled_graph(int n, GraphFilter f, const std::function<void(const Graph&)>& fn);

} // namespace circumlab
