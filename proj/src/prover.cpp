#include "circumlab/prover.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>
#include <string>

#include "circumlab/conditions.hpp"
#include "circumlab/connectivity.hpp"
#include "circumlab/graph6.hpp"

namespace circumlab {

const char* case_name(CaseTrace t) {
    switch (t) {
    case CaseTrace::tail_hit: return "tail_hit";
    case CaseTrace::case1: return "case1";
    case CaseTrace::case2_1: return "case2.1";
    case CaseTrace::case2_2: return "case2.2";
    }
    return "?";
}

OrientedPath select_extremal_longest_path(const Graph& g, std::uint64_t budget) {
    if (g.order() < 2) fail(errc::invalid_argument, "extremal path selection needs n >= 2");
    if (!is_connected(g)) fail(errc::invalid_argument, "extremal path selection needs a connected graph");
    OrientedPath best;
    int best_dv1 = -1, best_dvp = -1;
    enumerate_longest_paths(
        g,
        [&](const OrientedPath& cand) {
            const int dv1 = g.degree(cand.front());
            const int dvp = g.degree(cand.back());
            if (dv1 < best_dv1) return;
            if (dv1 == best_dv1) {
                if (dvp < best_dvp) return;
                if (dvp == best_dvp && !(cand.verts < best.verts)) return;
            }
            best = cand;
            best_dv1 = dv1;
            best_dvp = dvp;
        },
        budget);
    return best;
}

namespace {

std::vector<int> sorted_marks(const Graph& g, const OrientedPath& path, int of, bool forward) {
    std::vector<int> marks;
    for (std::uint64_t m = g.neighbors(of); m;) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        marks.push_back(v);
    }
    std::sort(marks.begin(), marks.end(), [&](int a, int b) {
        return forward ? path.position_of(a) < path.position_of(b)
                       : path.position_of(a) > path.position_of(b);
    });
    return marks;
}

} // namespace

EndpointMarks endpoint_marks(const Graph& g, const OrientedPath& path) {
    if (path.order() < 2) fail(errc::invalid_argument, "marks need a path of order >= 2");
    const std::uint64_t on_path = path.vertex_mask();
    const int v1 = path.front(), vp = path.back();
    if ((g.neighbors(v1) | g.neighbors(vp)) & ~on_path)
        fail(errc::not_longest_path,
             "an endpoint neighbor lies off the path; the path cannot be longest");

    EndpointMarks marks;
    marks.x = sorted_marks(g, path, v1, true);
    marks.y = sorted_marks(g, path, vp, false);

    // premises of the rotation argument: each rotated endpoint is again the
    // endpoint of a longest path, so its whole neighborhood stays on the path
    for (int xi : marks.x) {
        const int pre = *path.predecessor(xi);
        if (g.neighbors(pre) & ~on_path)
            fail(errc::not_longest_path, "rotated endpoint x_i^- sees a vertex off the path");
    }
    for (int yj : marks.y) {
        const int suc = *path.successor(yj);
        if (g.neighbors(suc) & ~on_path)
            fail(errc::not_longest_path, "rotated endpoint y_j^+ sees a vertex off the path");
    }

    if (marks.x_t() == vp)
        marks.tag = EndpointMarks::Tag::tail_hit;
    else if (path.precedes_eq(marks.x_t(), marks.y_f()))
        marks.tag = EndpointMarks::Tag::non_crossing;
    else
        marks.tag = EndpointMarks::Tag::crossing;
    return marks;
}

std::vector<OrientedPath> rotation_paths(const Graph& g, const OrientedPath& path) {
    const EndpointMarks marks = endpoint_marks(g, path);
    const int p = path.order();
    std::vector<OrientedPath> out;
    for (int xi : marks.x) {
        const int k = path.position_of(xi);
        std::vector<int> r = path.segment(k - 1, 0);
        std::vector<int> tail = path.segment(k, p - 1);
        r.insert(r.end(), tail.begin(), tail.end());
        out.push_back(OrientedPath{std::move(r)});
    }
    for (int yj : marks.y) {
        const int k = path.position_of(yj);
        std::vector<int> r = path.segment(k + 1, p - 1);
        std::vector<int> tail = path.segment(k, 0);
        r.insert(r.end(), tail.begin(), tail.end());
        out.push_back(OrientedPath{std::move(r)});
    }
    return out;
}

DegreeFloors degree_floor_inequalities(const Graph& g, const OrientedPath& path,
                                       const EndpointMarks& marks) {
    const DegreeSequence ds = degree_sequence(g);
    const int delta = ds.min_degree();
    const int v1 = path.front(), vp = path.back();
    DegreeFloors f;
    f.d_v1 = g.degree(v1);
    f.d_vp = g.degree(vp);

    auto check = [&](bool ok, const std::string& what) {
        if (!ok)
            fail(errc::inequality_violated,
                 what + " (the path is not extremal under the maximum-endpoint-degree choices)");
    };

    check(static_cast<int>(marks.x.size()) == f.d_v1, "x-mark count equals d(v1)");
    check(static_cast<int>(marks.y.size()) == f.d_vp, "y-mark count equals d(vp)");
    check(f.d_v1 >= f.d_vp, "d(v1) >= d(vp)");
    for (int xi : marks.x)
        check(f.d_v1 >= g.degree(*path.predecessor(xi)), "d(v1) >= d(x_i^-)");
    for (int yj : marks.y)
        check(f.d_vp >= g.degree(*path.successor(yj)), "d(vp) >= d(y_j^+)");

    f.floor_v1 = *ds.at(f.d_v1 + 1); // d(v1)+1 <= n always
    f.floor_vp = *ds.at(f.d_vp);
    check(f.d_v1 >= f.floor_v1, "d(v1) >= d_{d(v1)+1}");
    check(f.d_vp >= f.floor_vp, "d(vp) >= d_{d(vp)}");
    f.sum_floor = *ds.at(delta) + *ds.at(delta + 1);
    check(f.floor_v1 + f.floor_vp >= f.sum_floor, "floor sum >= d_delta + d_{delta+1}");

    if (f.d_v1 == delta && f.d_vp == delta) {
        f.endpoints_both_delta = true;
        for (int yj : marks.y)
            check(g.degree(*path.successor(yj)) == delta, "d(y_j^+) = delta when d(vp) = delta");
        f.refined_floor = *ds.at(delta + 1);
        check(f.d_vp >= *f.refined_floor && f.d_v1 >= *f.refined_floor,
              "both endpoint degrees >= d_{delta+1}");
    }
    if (f.d_v1 >= delta + 1) {
        f.v1_floor_delta2 = ds.at(delta + 2);
        check(f.v1_floor_delta2.has_value(), "d_{delta+2} applicable when d(v1) > delta");
        check(f.floor_v1 >= *f.v1_floor_delta2, "d_{d(v1)+1} >= d_{delta+2}");
    }
    return f;
}

namespace {

struct WorkAdj {
    std::array<std::uint64_t, Graph::max_order> adj{};
    void add(int u, int v) {
        adj[static_cast<std::size_t>(u)] |= bit(v);
        adj[static_cast<std::size_t>(v)] |= bit(u);
    }
    void remove(int u, int v) {
        adj[static_cast<std::size_t>(u)] &= ~bit(v);
        adj[static_cast<std::size_t>(v)] &= ~bit(u);
    }
};

[[noreturn]] void construction_failure(const char* stage, const OrientedPath& path,
                                       const std::string& detail) {
    std::ostringstream os;
    os << stage << ": " << detail << "; path =";
    for (int v : path.verts) os << ' ' << v;
    fail(errc::construction_invalid, os.str());
}

// Walks the 2-regular subgraph from `start` and returns the cycle sequence;
// fails when any survivor has degree != 2 or the walk misses survivors.
std::vector<int> extract_cycle(const WorkAdj& h, std::uint64_t survivors, int start,
                               const OrientedPath& path, const char* stage) {
    for (std::uint64_t m = survivors; m;) {
        const int v = std::countr_zero(m);
        m &= m - 1;
        if (std::popcount(h.adj[static_cast<std::size_t>(v)] & survivors) != 2)
            construction_failure(stage, path,
                                 "vertex " + std::to_string(v) + " has degree " +
                                     std::to_string(std::popcount(
                                         h.adj[static_cast<std::size_t>(v)] & survivors)) +
                                     " in the surgered graph");
    }
    std::vector<int> cycle{start};
    int prev = -1, at = start;
    while (true) {
        const std::uint64_t nbrs = h.adj[static_cast<std::size_t>(at)] & survivors;
        int next = std::countr_zero(nbrs);
        if (next == prev) {
            const std::uint64_t rest = nbrs & (nbrs - 1);
            next = std::countr_zero(rest);
        }
        if (next == start) break;
        cycle.push_back(next);
        prev = at;
        at = next;
    }
    if (static_cast<int>(cycle.size()) != std::popcount(survivors))
        construction_failure(stage, path, "surgered graph is not a single cycle");
    return cycle;
}

int first_mark_after(const OrientedPath& path, const std::vector<int>& marks, int pos) {
    int best = -1, best_pos = path.order();
    for (int v : marks) {
        const int k = path.position_of(v);
        if (k > pos && k < best_pos) {
            best = v;
            best_pos = k;
        }
    }
    return best;
}

int last_mark_before(const OrientedPath& path, const std::vector<int>& marks, int pos) {
    int best = -1, best_pos = -1;
    for (int v : marks) {
        const int k = path.position_of(v);
        if (k < pos && k > best_pos) {
            best = v;
            best_pos = k;
        }
    }
    return best;
}

} // namespace

CycleWitness build_case1_cycle(const Graph& g, const OrientedPath& path,
                               const EndpointMarks& marks, const Vine& vine) {
    const int p = path.order();
    const int m = vine.length();
    const int v1 = path.front(), vp = path.back();

    if (m == 1) {
        // only reachable when v1 vp is an edge: the closing chord itself
        const VineEar& ear = vine.ears.front();
        if (!ear.is_edge() || ear.w() != v1 || ear.z() != vp)
            construction_failure("case1(m=1)", path, "single ear is not the closing edge");
        CycleWitness c{path.verts};
        if (!is_cycle_in(g, c.verts))
            construction_failure("case1(m=1)", path, "closed path is not a cycle");
        return c;
    }

    if (marks.tag != EndpointMarks::Tag::non_crossing)
        construction_failure("case1", path, "marks are not non-crossing");
    const int bound = static_cast<int>(marks.x.size() + marks.y.size()) + 1;

    if (m == 2) {
        // Both outer ears are single edges v1-z1 and w2-vp. The generic
        // surgery below needs middle ears to carry the cycle, so here the
        // cycle keeps one origin edge and shortens the other side with the
        // nearest chord; both variants are valid, the larger one is kept.
        const int z1 = vine.ears[0].z();
        const int w2 = vine.ears[1].w();
        const int z1s = first_mark_after(path, marks.x, path.position_of(w2));
        const int w2s = last_mark_before(path, marks.y, path.position_of(z1));
        if (z1s < 0 || w2s < 0)
            construction_failure("case1(m=2)", path, "chord choice missing");
        auto candidate = [&](int fwd_end, int bwd_end) {
            std::vector<int> verts = path.segment(0, path.position_of(fwd_end));
            std::vector<int> back = path.segment(p - 1, path.position_of(bwd_end));
            verts.insert(verts.end(), back.begin(), back.end());
            return CycleWitness{std::move(verts)};
        };
        const CycleWitness a = candidate(w2s, z1);  // v1..w2* vp..z1, closes via z1-v1
        const CycleWitness b = candidate(w2, z1s);  // v1..w2  vp..z1*, closes via z1*-v1
        const bool a_ok = is_cycle_in(g, a.verts);
        const bool b_ok = is_cycle_in(g, b.verts);
        if (!a_ok && !b_ok)
            construction_failure("case1(m=2)", path, "neither chord variant closes a cycle");
        CycleWitness best = (!b_ok || (a_ok && a.order() >= b.order())) ? a : b;
        if (best.order() < bound)
            construction_failure("case1(m=2)", path,
                                 "cycle order " + std::to_string(best.order()) +
                                     " below d(v1)+d(vp)+1 = " + std::to_string(bound));
        return best;
    }

    // m >= 3: H = P + middle ears + the two chords, minus the skipped
    // segments (their edges and interior vertices).
    const int w2 = vine.ears[1].w();
    const int zm1 = vine.ears[static_cast<std::size_t>(m - 2)].z();
    const int z1s = first_mark_after(path, marks.x, path.position_of(w2));
    const int wms = last_mark_before(path, marks.y, path.position_of(zm1));
    if (z1s < 0 || wms < 0) construction_failure("case1", path, "chord choice missing");

    WorkAdj h;
    for (int i = 0; i + 1 < p; ++i) h.add(path.verts[static_cast<std::size_t>(i)], path.verts[static_cast<std::size_t>(i + 1)]);
    std::uint64_t survivors = path.vertex_mask();
    for (int i = 1; i + 1 < m; ++i) { // middle ears
        const VineEar& e = vine.ears[static_cast<std::size_t>(i)];
        for (std::size_t k = 0; k + 1 < e.verts.size(); ++k) h.add(e.verts[k], e.verts[k + 1]);
        for (std::size_t k = 1; k + 1 < e.verts.size(); ++k) survivors |= bit(e.verts[k]);
    }
    h.add(v1, z1s);
    h.add(vp, wms);

    auto drop_segment = [&](int from_pos, int to_pos) {
        for (int k = from_pos; k < to_pos; ++k)
            h.remove(path.verts[static_cast<std::size_t>(k)], path.verts[static_cast<std::size_t>(k + 1)]);
        for (int k = from_pos + 1; k < to_pos; ++k)
            survivors &= ~bit(path.verts[static_cast<std::size_t>(k)]);
    };
    drop_segment(path.position_of(w2), path.position_of(z1s));
    for (int i = 3; i <= m - 1; ++i)
        drop_segment(path.position_of(vine.ears[static_cast<std::size_t>(i - 1)].w()),
                     path.position_of(vine.ears[static_cast<std::size_t>(i - 2)].z()));
    drop_segment(path.position_of(wms), path.position_of(zm1));

    CycleWitness c{extract_cycle(h, survivors, v1, path, "case1")};
    if (!is_cycle_in(g, c.verts))
        construction_failure("case1", path, "surgered cycle uses a non-edge");
    if (c.order() < bound)
        construction_failure("case1", path,
                             "cycle order " + std::to_string(c.order()) +
                                 " below d(v1)+d(vp)+1 = " + std::to_string(bound));
    return c;
}

Case2Result build_case2_cycle(const Graph& g, const OrientedPath& path,
                              const EndpointMarks& marks) {
    if (marks.tag != EndpointMarks::Tag::crossing)
        construction_failure("case2", path, "marks are not crossing");
    const int p = path.order();
    const int v1 = path.front(), vp = path.back();

    // 2.1: some v1-neighbor directly follows a vp-neighbor on the path
    int hinge = -1;
    for (int xi : marks.x) {
        const int k = path.position_of(xi);
        if (k >= 1 && g.adjacent(path.verts[static_cast<std::size_t>(k - 1)], vp) &&
            (hinge < 0 || k < path.position_of(hinge)))
            hinge = xi;
    }
    if (hinge >= 0) {
        const int k = path.position_of(hinge);
        std::vector<int> verts{v1};
        std::vector<int> fwd = path.segment(k, p - 1);
        std::vector<int> bwd = path.segment(k - 1, 1);
        verts.insert(verts.end(), fwd.begin(), fwd.end());
        verts.insert(verts.end(), bwd.begin(), bwd.end());
        CycleWitness c{std::move(verts)};
        if (!is_cycle_in(g, c.verts) || c.order() != p)
            construction_failure("case2.1", path, "hinge cycle does not cover the path");
        return {std::move(c), CaseTrace::case2_1};
    }

    // 2.2: tightest crossing pair y_j < x_i with no endpoint marks between
    int x_star = -1, x_pos = p;
    int y_max = -1;
    for (int yj : marks.y) y_max = std::max(y_max, path.position_of(yj));
    for (int xi : marks.x) {
        const int k = path.position_of(xi);
        bool has_y_before = false;
        for (int yj : marks.y)
            if (path.position_of(yj) < k) has_y_before = true;
        if (has_y_before && k < x_pos) {
            x_star = xi;
            x_pos = k;
        }
    }
    if (x_star < 0) construction_failure("case2.2", path, "no crossing pair despite crossing tag");
    int y_star = -1, y_pos = -1;
    for (int yj : marks.y) {
        const int k = path.position_of(yj);
        if (k < x_pos && k > y_pos) {
            y_star = yj;
            y_pos = k;
        }
    }
    for (int v : marks.x)
        if (path.position_of(v) > y_pos && path.position_of(v) < x_pos)
            construction_failure("case2.2", path, "x-mark strictly between the crossing pair");
    for (int v : marks.y)
        if (path.position_of(v) > y_pos && path.position_of(v) < x_pos)
            construction_failure("case2.2", path, "y-mark strictly between the crossing pair");

    std::vector<int> verts{v1};
    std::vector<int> fwd = path.segment(x_pos, p - 1);
    std::vector<int> bwd = path.segment(y_pos, 1);
    verts.insert(verts.end(), fwd.begin(), fwd.end());
    verts.insert(verts.end(), bwd.begin(), bwd.end());
    CycleWitness c{std::move(verts)};
    const int bound = static_cast<int>(marks.x.size() + marks.y.size());
    if (!is_cycle_in(g, c.verts))
        construction_failure("case2.2", path, "crossing cycle uses a non-edge");
    if (c.order() < bound)
        construction_failure("case2.2", path,
                             "cycle order " + std::to_string(c.order()) +
                                 " below d(v1)+d(vp) = " + std::to_string(bound));
    return {std::move(c), CaseTrace::case2_2};
}

CycleCertificate certified_long_cycle(const Graph& g, std::uint64_t budget) {
    if (g.order() < 3)
        fail(errc::not_two_connected, "need n >= 3, got n = " + std::to_string(g.order()));
    const ConnectivityReport conn = vertex_connectivity(g);
    if (!conn.two_connected()) {
        std::string msg = "kappa = " + std::to_string(conn.kappa);
        if (!conn.cut_vertices.empty())
            msg += ", cut vertex " + std::to_string(conn.cut_vertices.front());
        fail(errc::not_two_connected, msg);
    }

    CycleCertificate cert;
    cert.graph6 = emit_graph6(g);
    cert.n = g.order();
    cert.path = select_extremal_longest_path(g, budget);
    cert.p = cert.path.order();
    cert.marks = endpoint_marks(g, cert.path);

    switch (cert.marks.tag) {
    case EndpointMarks::Tag::tail_hit:
        cert.trace = CaseTrace::tail_hit;
        cert.cycle = CycleWitness{cert.path.verts};
        if (!is_cycle_in(g, cert.cycle.verts))
            construction_failure("tail_hit", cert.path, "closing edge missing");
        break;
    case EndpointMarks::Tag::non_crossing:
        cert.trace = CaseTrace::case1;
        cert.vine = find_minimal_vine(g, cert.path);
        cert.cycle = build_case1_cycle(g, cert.path, cert.marks, *cert.vine);
        break;
    case EndpointMarks::Tag::crossing: {
        Case2Result r = build_case2_cycle(g, cert.path, cert.marks);
        cert.trace = r.trace;
        cert.cycle = std::move(r.cycle);
        break;
    }
    }
    cert.achieved = cert.cycle.order();
    cert.floors = degree_floor_inequalities(g, cert.path, cert.marks);

    const DegreeSequence ds = degree_sequence(g);
    const int delta = ds.min_degree();
    cert.guaranteed_t1 = std::min(cert.p, *ds.at(delta) + *ds.at(delta + 1));
    if (const auto dd2 = ds.at(delta + 2))
        cert.guaranteed_t3 = std::min({cert.p, 2 * *ds.at(delta + 1), *ds.at(delta) + *dd2});

    if (cert.achieved < cert.guaranteed_t1)
        construction_failure("certificate", cert.path,
                             "achieved " + std::to_string(cert.achieved) + " below T1 guarantee " +
                                 std::to_string(cert.guaranteed_t1));
    if (cert.guaranteed_t3 && cert.achieved < *cert.guaranteed_t3)
        construction_failure("certificate", cert.path,
                             "achieved " + std::to_string(cert.achieved) + " below T3 guarantee " +
                                 std::to_string(*cert.guaranteed_t3));
    return cert;
}

CycleWitness hamilton_via_condition(const Graph& g, std::uint64_t budget) {
    const int n = g.order();
    if (n < 3)
        fail(errc::condition_not_satisfied, "Hamiltonicity needs n >= 3, got " + std::to_string(n));
    const DegreeSequence ds = degree_sequence(g);
    const ConditionSet v = condition_verdicts(ds, n);
    if (!v.t2.holds() && !v.t4.holds()) {
        std::ostringstream os;
        os << "neither condition holds: T2 " << status_name(v.t2.status);
        if (v.t2.lhs) os << " (" << *v.t2.lhs << " vs n = " << n << ")";
        os << ", T4 " << status_name(v.t4.status);
        if (v.t4.lhs) os << " (" << *v.t4.lhs << " vs n = " << n << ")";
        fail(errc::condition_not_satisfied, os.str());
    }

    // the cut-vertex counting argument makes the conditions imply kappa >= 2
    const ConnectivityReport conn = vertex_connectivity(g);
    if (!conn.two_connected())
        fail(errc::proof_gap_violated,
             "condition holds but kappa = " + std::to_string(conn.kappa) +
                 "; the cut-vertex counting argument is violated");

    const CycleCertificate cert = certified_long_cycle(g, budget);
    if (cert.achieved == n) return cert.cycle;

    // A cycle of order >= p that is not spanning would extend to a path of
    // order p+1 in a connected graph, contradicting the maximality of p.
    fail(errc::proof_gap_violated,
         "certified cycle has order " + std::to_string(cert.achieved) + " < n = " +
             std::to_string(n) + " with p = " + std::to_string(cert.p) +
             "; the extension argument is violated");
}

nlohmann::ordered_json certificate_to_json(const CycleCertificate& cert) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["graph6"] = cert.graph6;
    j["n"] = cert.n;
    j["p"] = cert.p;
    j["case"] = case_name(cert.trace);
    j["path"] = cert.path.verts;
    j["marks_x"] = cert.marks.x;
    j["marks_y"] = cert.marks.y;
    if (cert.vine) {
        nlohmann::ordered_json ears = nlohmann::ordered_json::array();
        for (const VineEar& e : cert.vine->ears) ears.push_back(e.verts);
        j["vine"] = std::move(ears);
    } else {
        j["vine"] = nullptr;
    }
    j["cycle"] = cert.cycle.verts;
    nlohmann::ordered_json floors;
    floors["d_v1"] = cert.floors.d_v1;
    floors["d_vp"] = cert.floors.d_vp;
    floors["floor_v1"] = cert.floors.floor_v1;
    floors["floor_vp"] = cert.floors.floor_vp;
    floors["sum_floor"] = cert.floors.sum_floor;
    floors["endpoints_both_delta"] = cert.floors.endpoints_both_delta;
    j["floors"] = std::move(floors);
    j["guaranteed_t1"] = cert.guaranteed_t1;
    if (cert.guaranteed_t3)
        j["guaranteed_t3"] = *cert.guaranteed_t3;
    else
        j["guaranteed_t3"] = nullptr;
    j["achieved"] = cert.achieved;
    return j;
}

namespace {

[[noreturn]] void reject(const std::string& why) {
    fail(errc::construction_invalid, "certificate rejected: " + why);
}

std::vector<int> int_list(const nlohmann::json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_array()) reject(std::string(field) + " missing");
    std::vector<int> out;
    for (const auto& e : j[field]) {
        if (!e.is_number_integer()) reject(std::string(field) + " holds a non-integer");
        out.push_back(e.get<int>());
    }
    return out;
}

} // namespace

// Re-checks a serialized certificate from the token and adjacency alone.
void validate_certificate_json(const nlohmann::json& j) {
    if (!j.contains("graph6") || !j["graph6"].is_string()) reject("graph6 field missing");
    const Graph g = parse_graph6(j["graph6"].get<std::string>());
    const int n = g.order();
    if (!j.contains("n") || j["n"].get<int>() != n) reject("n does not match the token");

    const std::vector<int> path_verts = int_list(j, "path");
    if (!is_path_in(g, path_verts)) reject("path is not a path of the graph");
    OrientedPath path{path_verts};
    const int p = path.order();
    if (!j.contains("p") || j["p"].get<int>() != p) reject("p does not match the path");
    const int v1 = path.front(), vp = path.back();
    if ((g.neighbors(v1) | g.neighbors(vp)) & ~path.vertex_mask())
        reject("an endpoint neighbor lies off the path, so the path cannot be longest");

    // marks must be exactly the endpoint neighborhoods in path order
    const std::vector<int> mx = int_list(j, "marks_x");
    const std::vector<int> my = int_list(j, "marks_y");
    std::uint64_t seen = 0;
    for (std::size_t i = 0; i < mx.size(); ++i) {
        if (!g.adjacent(v1, mx[i])) reject("x-mark not adjacent to v1");
        if (i > 0 && !path.precedes(mx[i - 1], mx[i])) reject("x-marks out of order");
        seen |= bit(mx[i]);
    }
    if (seen != g.neighbors(v1)) reject("x-marks do not cover N(v1)");
    seen = 0;
    for (std::size_t i = 0; i < my.size(); ++i) {
        if (!g.adjacent(vp, my[i])) reject("y-mark not adjacent to vp");
        if (i > 0 && !path.precedes(my[i], my[i - 1])) reject("y-marks out of order");
        seen |= bit(my[i]);
    }
    if (seen != g.neighbors(vp)) reject("y-marks do not cover N(vp)");
    const int xt = mx.back(), yf = my.back();

    const std::vector<int> cycle = int_list(j, "cycle");
    if (!is_cycle_in(g, cycle)) reject("cycle is not a cycle of the graph");
    const int achieved = j.value("achieved", -1);
    if (achieved != static_cast<int>(cycle.size())) reject("achieved does not match the cycle");
    if (achieved > p) reject("cycle longer than the claimed longest path");

    const std::string trace = j.value("case", "");
    if (trace == "tail_hit") {
        if (xt != vp) reject("tail_hit without the closing chord");
        if (achieved != p) reject("tail_hit cycle must have order p");
    } else if (trace == "case1") {
        if (xt == vp || !path.precedes_eq(xt, yf)) reject("case1 marks are not non-crossing");
        if (!j.contains("vine") || !j["vine"].is_array()) reject("case1 without a vine");
        const auto& ears_json = j["vine"];
        const int m = static_cast<int>(ears_json.size());
        if (m < 1) reject("empty vine");
        std::uint64_t interiors = 0;
        std::vector<std::pair<int, int>> wz;
        for (const auto& ej : ears_json) {
            std::vector<int> ear;
            for (const auto& e : ej) ear.push_back(e.get<int>());
            if (ear.size() < 2 || !is_path_in(g, ear)) reject("vine ear is not a path");
            const int w = ear.front(), z = ear.back();
            if (path.position_of(w) < 0 || path.position_of(z) < 0)
                reject("vine ear endpoint off the path");
            for (std::size_t k = 1; k + 1 < ear.size(); ++k) {
                if (path.contains(ear[k])) reject("vine ear interior on the path");
                if (interiors & bit(ear[k])) reject("vine ears share an interior vertex");
                interiors |= bit(ear[k]);
            }
            wz.emplace_back(path.position_of(w), path.position_of(z));
        }
        if (wz.front().first != 0 || wz.back().second != p - 1) reject("vine does not span the path");
        if (m >= 2) {
            if (!(wz[0].first < wz[1].first)) reject("vine interleaving violated (w_1 < w_2)");
            if (!(wz[static_cast<std::size_t>(m - 2)].second < wz[static_cast<std::size_t>(m - 1)].second))
                reject("vine interleaving violated (z_{m-1} < z_m)");
            for (int i = 2; i <= m; ++i)
                if (!(wz[static_cast<std::size_t>(i - 1)].first < wz[static_cast<std::size_t>(i - 2)].second))
                    reject("vine interleaving violated (w_i < z_{i-1})");
            for (int i = 3; i <= m; ++i)
                if (!(wz[static_cast<std::size_t>(i - 3)].second <= wz[static_cast<std::size_t>(i - 1)].first))
                    reject("vine interleaving violated (z_{i-2} <= w_i)");
            if (achieved < g.degree(v1) + g.degree(vp) + 1)
                reject("case1 cycle below d(v1)+d(vp)+1");
        }
    } else if (trace == "case2.1") {
        if (!path.precedes(yf, xt)) reject("case2 marks are not crossing");
        if (achieved != p) reject("case2.1 cycle must have order p");
    } else if (trace == "case2.2") {
        if (!path.precedes(yf, xt)) reject("case2 marks are not crossing");
        if (achieved < g.degree(v1) + g.degree(vp)) reject("case2.2 cycle below d(v1)+d(vp)");
    } else {
        reject("unknown case trace '" + trace + "'");
    }

    const DegreeSequence ds = degree_sequence(g);
    const int delta = ds.min_degree();
    const int t1 = std::min(p, *ds.at(delta) + *ds.at(delta + 1));
    if (j.value("guaranteed_t1", -1) != t1) reject("guaranteed_t1 does not match the degrees");
    if (achieved < t1) reject("achieved below the T1 guarantee");
    if (const auto dd2 = ds.at(delta + 2)) {
        const int t3 = std::min({p, 2 * *ds.at(delta + 1), *ds.at(delta) + *dd2});
        if (!j.contains("guaranteed_t3") || j["guaranteed_t3"].is_null() ||
            j["guaranteed_t3"].get<int>() != t3)
            reject("guaranteed_t3 does not match the degrees");
        if (achieved < t3) reject("achieved below the T3 guarantee");
    } else if (j.contains("guaranteed_t3") && !j["guaranteed_t3"].is_null()) {
        reject("guaranteed_t3 claimed although d_{delta+2} is inapplicable");
    }
}

} // namespace circumlab
