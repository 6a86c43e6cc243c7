#pragma once

// Shared helpers for the test suites: well-known fixture graphs and the
// independent oracles the expected values are checked against.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <queue>
#include <string>
#include <vector>

#include "circumlab/graph.hpp"

namespace testsupport {

inline circumlab::Graph petersen() {
    return circumlab::build_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                       {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                       {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

inline circumlab::Graph bowtie() {
    return circumlab::join(circumlab::complete_graph(1),
                           circumlab::disjoint_union(circumlab::complete_graph(2),
                                                     circumlab::complete_graph(2)));
}

// Hamilton path 0..9 with chords (0,2),(1,4),(2,6),(5,9): hosts a length-4
// vine with non-crossing endpoint marks.
inline circumlab::Graph vine_ladder() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 9; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, 2);
    e.emplace_back(1, 4);
    e.emplace_back(2, 6);
    e.emplace_back(5, 9);
    return circumlab::build_graph(10, e);
}

// Reference graph6 codec built on plain string manipulation, independent of
// the bit-twiddling implementation under test.
inline std::string reference_graph6(const circumlab::Graph& g) {
    const int n = g.order();
    std::string bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits += g.adjacent(i, j) ? '1' : '0';
    while (bits.size() % 6 != 0) bits += '0';
    std::string out(1, static_cast<char>(63 + n));
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int v = 0;
        for (std::size_t b = 0; b < 6; ++b) v = 2 * v + (bits[k + b] - '0');
        out += static_cast<char>(63 + v);
    }
    return out;
}

// Maximum number of internally vertex-disjoint u-v paths via unit-capacity
// augmentation on the split digraph; an independent route to kappa.
inline int menger_disjoint_paths(const circumlab::Graph& g, int s, int t) {
    const int n = g.order();
    // node 2v = in, 2v+1 = out
    std::vector<std::vector<int>> cap(2 * static_cast<std::size_t>(n),
                                      std::vector<int>(2 * static_cast<std::size_t>(n), 0));
    for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? n : 1;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.adjacent(u, v)) cap[2 * u + 1][2 * v] = n;
    int flow = 0;
    while (true) {
        std::vector<int> pre(2 * static_cast<std::size_t>(n), -1);
        std::queue<int> q;
        q.push(2 * s + 1);
        pre[2 * s + 1] = 2 * s + 1;
        while (!q.empty()) {
            const int a = q.front();
            q.pop();
            for (int b = 0; b < 2 * n; ++b)
                if (pre[b] < 0 && cap[a][b] > 0) {
                    pre[b] = a;
                    q.push(b);
                }
        }
        if (pre[2 * t] < 0) return flow;
        for (int b = 2 * t; b != 2 * s + 1; b = pre[b]) {
            cap[pre[b]][b] -= 1;
            cap[b][pre[b]] += 1;
        }
        ++flow;
    }
}

inline int menger_kappa(const circumlab::Graph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    if (g.edge_count() == n * (n - 1) / 2) return n - 1;
    int best = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) best = std::min(best, menger_disjoint_paths(g, u, v));
    return best;
}

// Labeled connected graph count by the standard complement recurrence.
inline double connected_count(int n) {
    std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
    auto pow2 = [](int k) { return std::pow(2.0, k * (k - 1) / 2); };
    auto binom = [](int a, int b) {
        double r = 1;
        for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    for (int m = 1; m <= n; ++m) {
        c[static_cast<std::size_t>(m)] = pow2(m);
        for (int k = 1; k < m; ++k)
            c[static_cast<std::size_t>(m)] -=
                binom(m - 1, k - 1) * c[static_cast<std::size_t>(k)] * pow2(m - k);
    }
    return c[static_cast<std::size_t>(n)];
}

} // namespace testsupport
