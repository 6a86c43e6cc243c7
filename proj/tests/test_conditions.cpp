#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "circumlab/conditions.hpp"
#include "circumlab/enumerate.hpp"
#include "circumlab/oracles.hpp"
#include "test_support.hpp"

using namespace circumlab;

TEST_CASE("verdicts for E2 at delta = 2") {
    const Graph e2 = join(complete_graph(2), empty_graph(3));
    const ConditionSet v = condition_verdicts(degree_sequence(e2), 5);
    CHECK(v.b.status == Status::fails);  // 4 < 5
    CHECK(v.d.status == Status::fails);  // 4 < 5
    CHECK(v.t2.status == Status::fails); // 2+2 = 4 < 5
    CHECK(v.t2.lhs == 4);
    CHECK(v.t4.status == Status::fails); // min{4, 6} = 4 < 5
    CHECK(v.t4.lhs == 4);
}

TEST_CASE("verdicts for K4: T4 is inapplicable on complete graphs") {
    const ConditionSet v = condition_verdicts(degree_sequence(complete_graph(4)), 4);
    CHECK(v.b.status == Status::holds);
    CHECK(v.d.status == Status::holds);
    CHECK(v.t2.status == Status::holds);
    CHECK(v.t4.status == Status::inapplicable); // delta+2 = 5 > 4
    CHECK_FALSE(v.t4.lhs.has_value());
}

TEST_CASE("C5 fails every condition yet is hamiltonian: sufficient, not necessary") {
    const Graph c5 = cycle_graph(5);
    const ConditionSet v = condition_verdicts(degree_sequence(c5), 5);
    CHECK(v.b.status == Status::fails);
    CHECK(v.d.status == Status::fails);
    CHECK(v.t2.status == Status::fails);
    CHECK(v.t4.status == Status::fails);
    CHECK(is_hamiltonian(c5).hamiltonian);
}

TEST_CASE("bound targets on the delta=2 family members") {
    const Graph e2 = join(complete_graph(2), empty_graph(3));
    const BoundTargetSet t = bound_targets(degree_sequence(e2), 5);
    CHECK(t.a.value == 4);
    CHECK(t.c.value == 4);
    CHECK(t.t1.value == 4); // min{5, 4}: tight at c = 4
    CHECK(t.t3.value == 4); // min{5, 4, 6}

    const Graph e1 = join(complete_graph(2), disjoint_union(empty_graph(2), complete_graph(2)));
    const BoundTargetSet u = bound_targets(degree_sequence(e1), 6);
    CHECK(u.t1.value == 5);
    CHECK(u.t3.value == 5); // min{6, 6, 5}: tight at c = 5

    const BoundTargetSet k = bound_targets(degree_sequence(complete_graph(4)), 4);
    CHECK(k.t1.value == 4);
    CHECK_FALSE(k.t3.value.has_value());
}

TEST_CASE("targets never exceed p and are mutually ordered") {
    for (int n = 1; n <= 5; ++n)
        for_each_labeled_graph(n, GraphFilter::all, [&](const Graph& g) {
            const DegreeSequence ds = degree_sequence(g);
            const int p = longest_path(g).order;
            const BoundTargetSet t = bound_targets(ds, p);
            for (const BoundTarget* bt : {&t.a, &t.c, &t.t1, &t.t3})
                if (bt->value) CHECK(*bt->value <= p);
            if (t.a.value && t.c.value) CHECK(*t.a.value <= *t.c.value);
            if (t.c.value && t.t1.value) CHECK(*t.c.value <= *t.t1.value);
            if (t.t1.value && t.t3.value) CHECK(*t.t1.value <= *t.t3.value);
        });
}

TEST_CASE("implication chain is consistent over every graph up to n = 5") {
    for (int n = 1; n <= 5; ++n)
        for_each_labeled_graph(n, GraphFilter::all, [&](const Graph& g) {
            const ImplicationReport r = implication_audit(degree_sequence(g), n);
            CHECK(r.consistent);
            for (const auto& link : r.links)
                if (link.applicable) CHECK(*link.lhs <= *link.rhs);
        });
}

TEST_CASE("a graph holding T2 but failing D exists at n = 6") {
    bool found = false;
    for_each_labeled_graph(6, GraphFilter::all, [&](const Graph& g) {
        if (found) return;
        const ConditionSet v = condition_verdicts(degree_sequence(g), 6);
        if (v.t2.status == Status::holds && v.d.status == Status::fails) found = true;
    });
    CHECK(found);
}

TEST_CASE("E1 at delta = 2 fails both new conditions") {
    const Graph e1 = join(complete_graph(2), disjoint_union(empty_graph(2), complete_graph(2)));
    const ConditionSet v = condition_verdicts(degree_sequence(e1), 6);
    CHECK(v.t2.status == Status::fails); // 2+3 = 5 < 6
    CHECK(v.t2.lhs == 5);
    CHECK(v.t4.status == Status::fails); // min{6, 5} = 5 < 6
    CHECK(v.t4.lhs == 5);
}

TEST_CASE("K2 satisfies the T2 arithmetic but sits below the n >= 3 gate") {
    const ConditionSet v = condition_verdicts(degree_sequence(complete_graph(2)), 2);
    CHECK(v.t2.status == Status::holds); // 1+1 >= 2 numerically
    CHECK_FALSE(is_hamiltonian(complete_graph(2)).hamiltonian);
}

TEST_CASE("degenerate orders") {
    const ConditionSet v0 = condition_verdicts(DegreeSequence(std::vector<int>{}), 0);
    CHECK(v0.t2.status == Status::inapplicable);
    // isolated vertex: delta = 0 makes the indexed conditions inapplicable
    const ConditionSet v1 = condition_verdicts(degree_sequence(empty_graph(3)), 3);
    CHECK(v1.d.status == Status::inapplicable);
    CHECK(v1.t2.status == Status::inapplicable);
    CHECK(v1.b.status == Status::fails);
}
