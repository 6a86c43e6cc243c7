#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "circumlab/graph.hpp"
#include "circumlab/paths.hpp"

namespace circumlab {

// A vine of length m on an oriented host path P = v1..vp is an ordered
// system of ears L_1..L_m, each a path w_i -> z_i meeting P exactly at its
// two endpoints, pairwise internally disjoint, whose endpoints interleave as
//
//   v1 = w_1 < w_2 < z_1 <= w_3 < z_2 <= w_4 < ... <= w_m < z_{m-1} < z_m = vp
//
// in path order (strict within each (w_{i+1}, z_i) pair, weak between pairs).

struct VineEar {
    std::vector<int> verts; // w first, z last; interior off the host path
    int w() const { return verts.front(); }
    int z() const { return verts.back(); }
    bool is_edge() const { return verts.size() == 2; }
    bool operator==(const VineEar&) const = default;
};

struct Vine {
    std::vector<VineEar> ears;
    int length() const { return static_cast<int>(ears.size()); }

    // Structural facts recorded when the host path is longest (every
    // endpoint neighborhood on the path). Minimality forces the strict
    // spacings x_t < z_2 and w_{m-1} < y_f but only the weak forms
    // x_t <= w_3 and z_{m-2} <= y_f; the strict variants of those two are
    // observed and recorded, not required.
    struct Claims {
        bool checked = false;
        bool first_ear_edge = false;
        bool last_ear_edge = false;
        std::optional<bool> xt_before_z2;           // x_t < z_2          (m >= 2, required)
        std::optional<bool> xt_at_or_before_w3;     // x_t <= w_3         (m >= 3, required)
        std::optional<bool> xt_strictly_before_w3;  // observed
        std::optional<bool> wm1_before_yf;          // w_{m-1} < y_f      (m >= 2, required)
        std::optional<bool> zm2_at_or_before_yf;    // z_{m-2} <= y_f     (m >= 3, required)
        std::optional<bool> zm2_strictly_before_yf; // observed
    };
    Claims claims;
};

/// Verifies both vine conditions verbatim against the host graph and path;
/// throws construction_invalid with a precise reason on any violation.
void check_vine(const Graph& g, const OrientedPath& path, const Vine& vine);

/// Searches for a vine of exactly m ears (deterministic first match).
std::optional<Vine> find_vine_of_length(const Graph& g, const OrientedPath& path, int m);

/// Minimal vine on the path: searches m = 1, 2, ... and returns the first
/// feasible system, re-checked and annotated. Throws no_vine_found when no
/// vine exists (the expected outcome when the host graph is not 2-connected;
/// a fatal bug when it is).
Vine find_minimal_vine(const Graph& g, const OrientedPath& path);

} // namespace circumlab
