#pragma once

#include <vector>

#include "circumlab/graph.hpp"

namespace circumlab {

struct ConnectivityReport {
    int kappa = 0;
    bool connected = false;
    std::vector<int> cut_vertices; // ascending
    bool two_connected() const { return kappa >= 2; }
};

bool is_connected(const Graph& g);

/// Exact vertex connectivity by brute-force cut search: complete graphs are
/// n-1 by convention, otherwise the smallest vertex subset whose removal
/// disconnects the graph. Intended for desk-scale orders (n <= 14 or so).
ConnectivityReport vertex_connectivity(const Graph& g);

} // namespace circumlab
