#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "circumlab/conditions.hpp"
#include "circumlab/connectivity.hpp"
#include "circumlab/enumerate.hpp"
#include "circumlab/graph6.hpp"
#include "circumlab/prover.hpp"
#include "test_support.hpp"

using namespace circumlab;

namespace {
Graph family_e2() { return join(complete_graph(2), empty_graph(3)); }
Graph family_e1() {
    return join(complete_graph(2), disjoint_union(empty_graph(2), complete_graph(2)));
}
} // namespace

TEST_CASE("extremal path selection endpoints") {
    const OrientedPath e2 = select_extremal_longest_path(family_e2());
    CHECK(e2.order() == 5);
    // every longest path ends in the independent set, both endpoint degrees 2
    CHECK(family_e2().degree(e2.front()) == 2);
    CHECK(family_e2().degree(e2.back()) == 2);

    const OrientedPath c5 = select_extremal_longest_path(cycle_graph(5));
    CHECK(c5.order() == 5);
    CHECK(cycle_graph(5).degree(c5.front()) == 2);

    const Graph bow = testsupport::bowtie(); // apex 0
    const OrientedPath bp = select_extremal_longest_path(bow);
    CHECK(bp.order() == 5);
    CHECK(bow.degree(bp.front()) == 2);
    CHECK(bow.degree(bp.back()) == 2);
    const bool front_left = bp.front() == 1 || bp.front() == 2;
    const bool back_left = bp.back() == 1 || bp.back() == 2;
    CHECK(front_left != back_left);

    CHECK(select_extremal_longest_path(bow).verts == bp.verts); // deterministic
    CHECK_THROWS_AS(select_extremal_longest_path(disjoint_union(complete_graph(2), complete_graph(2))),
                    Error);
}

TEST_CASE("endpoint marks classify the cases") {
    const OrientedPath c5_path{{0, 1, 2, 3, 4}};
    const EndpointMarks c5 = endpoint_marks(cycle_graph(5), c5_path);
    CHECK(c5.tag == EndpointMarks::Tag::tail_hit);
    CHECK(c5.x_t() == 4);

    const OrientedPath k4_path{{0, 1, 2, 3}};
    CHECK(endpoint_marks(complete_graph(4), k4_path).tag == EndpointMarks::Tag::tail_hit);

    // marks on a non-longest path are caller misuse
    CHECK_THROWS_AS(endpoint_marks(complete_graph(4), OrientedPath{{0, 1}}), Error);
    try {
        endpoint_marks(complete_graph(4), OrientedPath{{0, 1}});
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_longest_path);
    }
}

TEST_CASE("mark counts equal endpoint degrees and sit on the path") {
    const Graph g = family_e2();
    const OrientedPath path = select_extremal_longest_path(g);
    const EndpointMarks m = endpoint_marks(g, path);
    CHECK(static_cast<int>(m.x.size()) == g.degree(path.front()));
    CHECK(static_cast<int>(m.y.size()) == g.degree(path.back()));
    for (int v : m.x) CHECK(path.contains(v));
    for (int v : m.y) CHECK(path.contains(v));
    CHECK(m.tag == EndpointMarks::Tag::crossing); // both endpoints see the clique interleaved
}

TEST_CASE("rotation paths re-validate as longest paths") {
    for (int n = 3; n <= 5; ++n)
        for_each_labeled_graph(n, GraphFilter::two_connected, [&](const Graph& g) {
            const OrientedPath path = select_extremal_longest_path(g);
            for (const OrientedPath& r : rotation_paths(g, path)) {
                CHECK(is_path_in(g, r.verts));
                CHECK(r.order() == path.order());
            }
        });
}

TEST_CASE("degree floors on the fixtures") {
    const Graph e2 = family_e2();
    const OrientedPath path = select_extremal_longest_path(e2);
    const DegreeFloors f = degree_floor_inequalities(e2, path, endpoint_marks(e2, path));
    CHECK(f.d_v1 == 2);
    CHECK(f.d_vp == 2);
    CHECK(f.floor_v1 == 2);
    CHECK(f.floor_vp == 2);
    CHECK(f.sum_floor == 4);
    CHECK(f.endpoints_both_delta);
    CHECK(f.refined_floor == 2);

    const Graph c5 = cycle_graph(5);
    const OrientedPath cp = select_extremal_longest_path(c5);
    const DegreeFloors cf = degree_floor_inequalities(c5, cp, endpoint_marks(c5, cp));
    CHECK(cf.d_v1 + cf.d_vp == 4);
    CHECK(cf.sum_floor == 4);
}

TEST_CASE("degree floors hold on every two-connected extremal path up to n = 5") {
    for (int n = 3; n <= 5; ++n)
        for_each_labeled_graph(n, GraphFilter::two_connected, [&](const Graph& g) {
            const OrientedPath path = select_extremal_longest_path(g);
            CHECK_NOTHROW(degree_floor_inequalities(g, path, endpoint_marks(g, path)));
        });
}

TEST_CASE("case-1 surgery through a length-4 vine") {
    const Graph g = testsupport::vine_ladder();
    OrientedPath host;
    for (int i = 0; i < 10; ++i) host.verts.push_back(i);
    const EndpointMarks marks = endpoint_marks(g, host);
    REQUIRE(marks.tag == EndpointMarks::Tag::non_crossing);
    const Vine vine = find_minimal_vine(g, host);
    REQUIRE(vine.length() == 4);
    const CycleWitness c = build_case1_cycle(g, host, marks, vine);
    CHECK(is_cycle_in(g, c.verts));
    CHECK(c.order() >= g.degree(0) + g.degree(9) + 1);
    // the skipped middle gap drops exactly vertex 3
    CHECK(std::find(c.verts.begin(), c.verts.end(), 3) == c.verts.end());
    CHECK(c.order() == 9);
}

TEST_CASE("case-1 surgery on a frozen n = 7 instance") {
    const Graph g = parse_graph6("FLjE?");
    const CycleCertificate cert = certified_long_cycle(g);
    CHECK(cert.trace == CaseTrace::case1);
    REQUIRE(cert.vine.has_value());
    CHECK(cert.vine->length() == 3);
    CHECK(cert.achieved >= cert.floors.d_v1 + cert.floors.d_vp + 1);
    CHECK(cert.achieved <= circumference(g).order);
}

TEST_CASE("case-2 surgery on E2") {
    const Graph g = family_e2();
    const OrientedPath path = select_extremal_longest_path(g);
    const EndpointMarks marks = endpoint_marks(g, path);
    REQUIRE(marks.tag == EndpointMarks::Tag::crossing);
    const Case2Result r = build_case2_cycle(g, path, marks);
    CHECK(is_cycle_in(g, r.cycle.verts));
    if (r.trace == CaseTrace::case2_1) CHECK(r.cycle.order() == path.order());
    else CHECK(r.cycle.order() >= 4);
}

TEST_CASE("certificates on the sharpness families") {
    const CycleCertificate e2 = certified_long_cycle(family_e2());
    CHECK(e2.achieved == 4);
    CHECK(e2.guaranteed_t1 == 4); // min{5, 4}
    CHECK(e2.guaranteed_t3 == 4); // min{5, 4, 6}
    CHECK(e2.achieved <= circumference(family_e2()).order);

    const CycleCertificate e1 = certified_long_cycle(family_e1());
    CHECK(e1.guaranteed_t1 == 5); // min{6, 5}
    CHECK(e1.guaranteed_t3 == 5); // min{6, 6, 5}
    CHECK(e1.achieved == 5);      // c = 5 exactly

    const CycleCertificate c5 = certified_long_cycle(cycle_graph(5));
    CHECK(c5.trace == CaseTrace::tail_hit);
    CHECK(c5.achieved == 5);

    const CycleCertificate k4 = certified_long_cycle(complete_graph(4));
    CHECK(k4.trace == CaseTrace::tail_hit);
    CHECK(k4.achieved == 4);
    CHECK_FALSE(k4.guaranteed_t3.has_value());
}

TEST_CASE("petersen certificate meets both guarantees") {
    const CycleCertificate cert = certified_long_cycle(testsupport::petersen());
    CHECK(cert.p == 10);
    CHECK(cert.guaranteed_t1 == 6);
    CHECK(cert.guaranteed_t3 == 6);
    CHECK(cert.achieved >= 6);
    CHECK(cert.achieved <= 9);
    CHECK(is_cycle_in(testsupport::petersen(), cert.cycle.verts));
}

TEST_CASE("certified_long_cycle refuses separable inputs naming a cut vertex") {
    try {
        certified_long_cycle(testsupport::bowtie());
        FAIL("expected not_two_connected");
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_two_connected);
        CHECK(std::string(e.what()).find("cut vertex 0") != std::string::npos);
    }
    CHECK_THROWS_AS(certified_long_cycle(complete_graph(2)), Error);
}

TEST_CASE("hamilton_via_condition on K4 and refusals") {
    const CycleWitness c = hamilton_via_condition(complete_graph(4));
    CHECK(c.order() == 4);
    CHECK(is_cycle_in(complete_graph(4), c.verts));

    try {
        hamilton_via_condition(family_e2());
        FAIL("expected condition_not_satisfied");
    } catch (const Error& e) {
        CHECK(e.code() == errc::condition_not_satisfied);
    }
}

TEST_CASE("hamilton_via_condition spans every holding graph at n = 5") {
    int holding = 0;
    for_each_labeled_graph(5, GraphFilter::all, [&](const Graph& g) {
        const ConditionSet v = condition_verdicts(degree_sequence(g), 5);
        if (!v.t2.holds() && !v.t4.holds()) return;
        ++holding;
        const CycleWitness c = hamilton_via_condition(g);
        CHECK(c.order() == 5);
        CHECK(is_cycle_in(g, c.verts));
    });
    CHECK(holding > 0);
}

TEST_CASE("certificate serialization validates and tampering is caught") {
    const CycleCertificate cert = certified_long_cycle(family_e2());
    nlohmann::ordered_json j = certificate_to_json(cert);
    CHECK_NOTHROW(validate_certificate_json(j));

    nlohmann::ordered_json bad = j;
    bad["achieved"] = cert.achieved + 1;
    CHECK_THROWS_AS(validate_certificate_json(bad), Error);

    bad = j;
    bad["cycle"].erase(0);
    CHECK_THROWS_AS(validate_certificate_json(bad), Error);

    bad = j;
    bad["guaranteed_t1"] = 2;
    CHECK_THROWS_AS(validate_certificate_json(bad), Error);

    bad = j;
    bad["path"][0] = 63;
    CHECK_THROWS_AS(validate_certificate_json(bad), Error);

    // and a case-1 certificate round-trips through its vine checks
    const nlohmann::ordered_json j1 = certificate_to_json(certified_long_cycle(parse_graph6("FLjE?")));
    CHECK_NOTHROW(validate_certificate_json(j1));
}

TEST_CASE("exhaustive two-connected audit up to n = 6") {
    for (int n = 3; n <= 6; ++n)
        for_each_labeled_graph(n, GraphFilter::two_connected, [&](const Graph& g) {
            const CycleCertificate cert = certified_long_cycle(g);
            const int c = circumference(g).order;
            CHECK(is_cycle_in(g, cert.cycle.verts));
            CHECK(cert.achieved >= cert.guaranteed_t1);
            if (cert.guaranteed_t3) CHECK(cert.achieved >= *cert.guaranteed_t3);
            CHECK(cert.achieved <= c);
        });
}
