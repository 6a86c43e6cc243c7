#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "circumlab/connectivity.hpp"
#include "circumlab/enumerate.hpp"
#include "circumlab/graph6.hpp"
#include "circumlab/prover.hpp"
#include "circumlab/vine.hpp"
#include "test_support.hpp"

using namespace circumlab;

TEST_CASE("the closing chord of a cycle is a one-ear vine") {
    const Graph c5 = cycle_graph(5);
    const OrientedPath host{{0, 1, 2, 3, 4}};
    const Vine v = find_minimal_vine(c5, host);
    CHECK(v.length() == 1);
    CHECK(v.ears.front().verts == std::vector<int>{0, 4});
    CHECK(v.claims.checked);
    CHECK(v.claims.first_ear_edge);
}

TEST_CASE("no vine exists across the bowtie cut vertex") {
    const Graph bow = testsupport::bowtie();
    const OrientedPath host = select_extremal_longest_path(bow);
    try {
        find_minimal_vine(bow, host);
        FAIL("expected no_vine_found");
    } catch (const Error& e) {
        CHECK(e.code() == errc::no_vine_found);
    }
    CHECK_FALSE(find_vine_of_length(bow, host, 1).has_value());
    CHECK_FALSE(find_vine_of_length(bow, host, 2).has_value());
    CHECK_FALSE(find_vine_of_length(bow, host, 3).has_value());
}

TEST_CASE("no vine on a chordless path host") {
    const Graph p4 = path_graph(4);
    CHECK_THROWS_AS(find_minimal_vine(p4, OrientedPath{{0, 1, 2, 3}}), Error);
}

TEST_CASE("minimal vine on the E2 extremal path") {
    const Graph e2 = join(complete_graph(2), empty_graph(3));
    const OrientedPath host = select_extremal_longest_path(e2);
    const Vine v = find_minimal_vine(e2, host);
    CHECK(v.length() <= 3);
    check_vine(e2, host, v);
    CHECK(v.claims.checked);
    CHECK(v.claims.first_ear_edge);
    CHECK(v.claims.last_ear_edge);
    CHECK_FALSE(find_vine_of_length(e2, host, v.length() - 1).has_value());
}

TEST_CASE("length-4 vine on the ladder host path") {
    const Graph g = testsupport::vine_ladder();
    OrientedPath host;
    for (int i = 0; i < 10; ++i) host.verts.push_back(i);
    REQUIRE(is_path_in(g, host.verts));

    const Vine v = find_minimal_vine(g, host);
    CHECK(v.length() == 4);
    CHECK(v.ears[0].verts == std::vector<int>{0, 2});
    CHECK(v.ears[1].verts == std::vector<int>{1, 4});
    CHECK(v.ears[2].verts == std::vector<int>{2, 6});
    CHECK(v.ears[3].verts == std::vector<int>{5, 9});
    CHECK_FALSE(find_vine_of_length(g, host, 3).has_value());
    CHECK_FALSE(find_vine_of_length(g, host, 2).has_value());
    // spacing facts on this host
    CHECK(v.claims.checked);
    CHECK(v.claims.xt_before_z2 == true);
    CHECK(v.claims.xt_at_or_before_w3 == true);
    CHECK(v.claims.wm1_before_yf == true);
    CHECK(v.claims.zm2_at_or_before_yf == true);
}

TEST_CASE("ears may pass through off-path vertices") {
    // C6 plus a two-edge detour over vertex 6 between 0 and 3
    Graph g = build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {6, 3}});
    const OrientedPath host{{0, 1, 2, 3, 4, 5}};
    REQUIRE(is_path_in(g, host.verts));
    // this is not a longest path (6 hangs off it), so claims stay unchecked,
    // but the ear machinery still finds the interior ear
    const Vine v = find_minimal_vine(g, host);
    check_vine(g, host, v);
    CHECK_FALSE(v.claims.checked);
    bool has_interior_ear = false;
    for (const VineEar& e : v.ears) has_interior_ear = has_interior_ear || e.verts.size() > 2;
    CHECK(has_interior_ear);
}

TEST_CASE("check_vine rejects corrupted systems") {
    const Graph c5 = cycle_graph(5);
    const OrientedPath host{{0, 1, 2, 3, 4}};
    Vine bad;
    bad.ears.push_back(VineEar{{0, 2}}); // not an edge of C5
    CHECK_THROWS_AS(check_vine(c5, host, bad), Error);

    // real edges, broken interleaving: w_2 < z_1 fails
    const Graph g = testsupport::vine_ladder();
    OrientedPath host10;
    for (int i = 0; i < 10; ++i) host10.verts.push_back(i);
    Vine crossed;
    crossed.ears.push_back(VineEar{{0, 2}});
    crossed.ears.push_back(VineEar{{5, 9}});
    CHECK_THROWS_AS(check_vine(g, host10, crossed), Error);
}

TEST_CASE("minimal vines on every two-connected extremal path up to n = 6") {
    for (int n = 3; n <= 6; ++n)
        for_each_labeled_graph(n, GraphFilter::two_connected, [&](const Graph& g) {
            const OrientedPath host = select_extremal_longest_path(g);
            const Vine v = find_minimal_vine(g, host);
            check_vine(g, host, v);
            CHECK(v.claims.checked);
            CHECK(v.claims.first_ear_edge);
            CHECK(v.claims.last_ear_edge);
            if (v.length() > 1) CHECK_FALSE(find_vine_of_length(g, host, v.length() - 1).has_value());
        });
}
