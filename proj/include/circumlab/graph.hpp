#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "circumlab/error.hpp"

namespace circumlab {

inline constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

class Graph;

namespace detail {
// The one validated low-level constructor: checks symmetry, irreflexivity
// and that no bit at index >= n is set. Everything else funnels through it.
Graph make_graph(int n, std::vector<std::uint64_t> adj);
} // namespace detail

/// Simple undirected graph on at most 62 vertices, one 64-bit adjacency row
/// per vertex. Immutable after construction; plain value semantics.
class Graph {
public:
    static constexpr int max_order = 62;

    Graph() = default;

    int order() const { return n_; }
    std::uint64_t neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool adjacent(int u, int v) const { return (neighbors(u) >> v) & 1u; }
    int degree(int v) const { return std::popcount(neighbors(v)); }
    int edge_count() const;
    std::uint64_t vertex_mask() const { return n_ == 0 ? 0 : ~std::uint64_t{0} >> (64 - n_); }
    std::vector<std::pair<int, int>> edges() const; // i < j, ordered by (j, i)

    bool operator==(const Graph&) const = default;

private:
    friend Graph detail::make_graph(int n, std::vector<std::uint64_t> adj);
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

/// Builds a graph from an explicit edge list. Duplicate edges merge silently;
/// endpoints out of range raise index_out_of_range, loops raise self_loop.
Graph build_graph(int n, std::span<const std::pair<int, int>> edges);
Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges);

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

/// Disjoint union: h's vertices are relabelled to follow g's.
Graph disjoint_union(const Graph& g, const Graph& h);
/// Join: disjoint union plus every edge between the two vertex sets.
Graph join(const Graph& g, const Graph& h);

/// Ascending-sorted degree multiset with 1-based access d(k).
class DegreeSequence {
public:
    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<int> ascending);

    int size() const { return static_cast<int>(sorted_.size()); }
    /// d_1, the minimum degree. Requires a nonempty sequence.
    int min_degree() const;
    /// d_k for 1-based k; nullopt (the Inapplicable verdict) when k is
    /// outside 1..n. Out-of-range indices are values here, not errors.
    std::optional<int> at(int k) const;
    const std::vector<int>& values() const { return sorted_; }

    bool operator==(const DegreeSequence&) const = default;

private:
    std::vector<int> sorted_;
};

DegreeSequence degree_sequence(const Graph& g);

} // namespace circumlab
