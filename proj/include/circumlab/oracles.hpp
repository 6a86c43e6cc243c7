#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "circumlab/graph.hpp"
#include "circumlab/paths.hpp"

namespace circumlab {

// Ground-truth exact search. Depth-first backtracking over simple paths with
// a "remaining reachable vertices" bound; neighbors are always visited in
// ascending index order, so witnesses and enumeration order are reproducible.

inline constexpr std::uint64_t default_enumeration_budget = 200'000'000;

struct LongestPathResult {
    int order = 0;
    OrientedPath witness;
};

/// Order of a longest simple path, with a witness. Requires n >= 1.
LongestPathResult longest_path(const Graph& g);

struct CircumferenceResult {
    int order = 0;                       // 0 for acyclic graphs
    std::optional<CycleWitness> witness; // absent iff acyclic
};

CircumferenceResult circumference(const Graph& g);

struct HamiltonicityResult {
    bool hamiltonian = false;
    std::optional<CycleWitness> witness;
};

/// True iff the circumference equals n and n >= 3.
HamiltonicityResult is_hamiltonian(const Graph& g);

/// Calls `yield` once per oriented longest path (each undirected path appears
/// in both directions). Returns the number of paths yielded. Throws
/// ResourceLimitError, carrying the partial count, when the DFS exceeds
/// `budget` node expansions; never truncates silently. Requires n >= 2.
std::uint64_t enumerate_longest_paths(const Graph& g,
                                      const std::function<void(const OrientedPath&)>& yield,
                                      std::uint64_t budget = default_enumeration_budget);

} // namespace circumlab
