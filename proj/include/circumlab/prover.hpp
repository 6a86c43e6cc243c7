#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circumlab/graph.hpp"
#include "circumlab/oracles.hpp"
#include "circumlab/paths.hpp"
#include "circumlab/vine.hpp"

#include "json.hpp"

namespace circumlab {

// The proof-following engine. Given a 2-connected graph it picks an extremal
// longest path, classifies the endpoint neighborhoods, and performs the
// matching cycle surgery, emitting a certificate whose cycle provably meets
//
//   T1: min{p, d_d + d_{d+1}}      T3: min{p, 2*d_{d+1}, d_d + d_{d+2}}
//
// Every structural fact the construction relies on is re-checked at runtime
// and failures carry the full intermediate state; nothing is assumed.

enum class CaseTrace { tail_hit, case1, case2_1, case2_2 };
const char* case_name(CaseTrace t);

/// Endpoint neighborhoods positioned along the path. x holds N(v1) in
/// forward order (x_t last); y holds N(vp) in reverse order (y_f last, i.e.
/// y_f is the mark nearest v1).
struct EndpointMarks {
    std::vector<int> x;
    std::vector<int> y;
    enum class Tag { tail_hit, non_crossing, crossing } tag = Tag::tail_hit;
    int x_t() const { return x.back(); }
    int y_f() const { return y.back(); }
};

/// Among all oriented longest paths: maximize d(v1), then d(vp), then take
/// the lexicographically smallest vertex sequence. Requires g connected,
/// n >= 2. Exhaustive, so deterministic and reproducible.
OrientedPath select_extremal_longest_path(const Graph& g,
                                          std::uint64_t budget = default_enumeration_budget);

/// Positions the marks and classifies: tail_hit when x_t = vp, non_crossing
/// when x_t <= y_f, crossing when y_f < x_t. Also audits the premises the
/// rotation argument needs (N(v1) u N(vp) on the path, and every rotated
/// endpoint's neighborhood on the path); violations raise not_longest_path.
EndpointMarks endpoint_marks(const Graph& g, const OrientedPath& path);

/// All rotated longest paths: x_i^- <-P v1 x_i ->P vp for each x-mark, and
/// the mirrored form for each y-mark. Each has order p by construction.
std::vector<OrientedPath> rotation_paths(const Graph& g, const OrientedPath& path);

struct DegreeFloors {
    int d_v1 = 0, d_vp = 0;
    int floor_v1 = 0;  // d_{d(v1)+1} <= d(v1)
    int floor_vp = 0;  // d_{d(vp)}   <= d(vp)
    int sum_floor = 0; // d_d + d_{d+1} <= d(v1)+d(vp)
    bool endpoints_both_delta = false;     // then both endpoint degrees >= d_{d+1}
    std::optional<int> refined_floor;      // d_{d+1} when endpoints_both_delta
    std::optional<int> v1_floor_delta2;    // d_{d+2} when d(v1) >= delta+1
};

/// Certifies the degree floors an extremal path guarantees: d(v1) dominates
/// every rotated endpoint degree and d(vp), d(vp) dominates its own rotated
/// endpoints, hence d(v1) >= d_{d(v1)+1}, d(vp) >= d_{d(vp)}, and the sum
/// floor; plus the refinements used by the T3 bound. Any failed comparison
/// raises inequality_violated (the path was not extremal, or a bug).
DegreeFloors degree_floor_inequalities(const Graph& g, const OrientedPath& path,
                                       const EndpointMarks& marks);

/// Non-crossing surgery: closes a cycle through the minimal vine, replacing
/// the outermost ears by the chords v1-z1* and vp-wm* that minimize the
/// skipped path segments. The result must be a single cycle with at least
/// d(v1)+d(vp)+1 vertices (checked; construction_invalid otherwise).
CycleWitness build_case1_cycle(const Graph& g, const OrientedPath& path,
                               const EndpointMarks& marks, const Vine& vine);

struct Case2Result {
    CycleWitness cycle;
    CaseTrace trace = CaseTrace::case2_1;
};

/// Crossing surgery: when some v1-neighbor succeeds a vp-neighbor on the
/// path, either N(v1) meets N+(vp) and the whole path closes into an order-p
/// cycle (2.1), or a tight crossing pair with no marks between gives a cycle
/// of order >= d(v1)+d(vp) (2.2). Both bounds are checked.
Case2Result build_case2_cycle(const Graph& g, const OrientedPath& path,
                              const EndpointMarks& marks);

struct CycleCertificate {
    std::string graph6;
    int n = 0;
    int p = 0;
    OrientedPath path;
    EndpointMarks marks;
    std::optional<Vine> vine; // present for case1 only
    CaseTrace trace = CaseTrace::tail_hit;
    DegreeFloors floors;
    int guaranteed_t1 = 0;
    std::optional<int> guaranteed_t3; // nullopt iff d_{d+2} inapplicable
    int achieved = 0;
    CycleWitness cycle;
};

/// Full pipeline: extremal path -> marks -> (tail hit | case 1 vine surgery |
/// case 2 crossing surgery) -> floors -> certificate. The achieved order is
/// checked against both guarantees before returning. Requires n >= 3 and a
/// 2-connected host (not_two_connected otherwise, message naming a cut
/// vertex when one exists).
CycleCertificate certified_long_cycle(const Graph& g,
                                      std::uint64_t budget = default_enumeration_budget);

/// For a graph whose degree sequence satisfies condition T2 or T4 (n >= 3):
/// returns a spanning cycle. The conditions force kappa >= 2 and the
/// certified cycle must span; either failing is reported loudly
/// (proof_gap_violated) rather than papered over.
CycleWitness hamilton_via_condition(const Graph& g,
                                    std::uint64_t budget = default_enumeration_budget);

// Certificate serialization: stable field names, schema documented in the
// README. The validator re-checks a certificate from the graph6 token and
// adjacency alone, independent of the construction code.
nlohmann::ordered_json certificate_to_json(const CycleCertificate& cert);
void validate_certificate_json(const nlohmann::json& j);

} // namespace circumlab
