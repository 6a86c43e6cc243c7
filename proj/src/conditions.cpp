#include "circumlab/conditions.hpp"

#include <algorithm>

namespace circumlab {

const char* tag_name(TheoremTag t) {
    switch (t) {
    case TheoremTag::B: return "B";
    case TheoremTag::D: return "D";
    case TheoremTag::T2: return "T2";
    case TheoremTag::T4: return "T4";
    case TheoremTag::A: return "A";
    case TheoremTag::C: return "C";
    case TheoremTag::T1: return "T1";
    case TheoremTag::T3: return "T3";
    }
    return "?";
}

const char* status_name(Status s) {
    switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::inapplicable: return "inapplicable";
    }
    return "?";
}

namespace {

ConditionVerdict verdict(TheoremTag tag, int n, int delta, std::optional<int> lhs) {
    ConditionVerdict v;
    v.tag = tag;
    v.n = n;
    v.delta = delta;
    v.lhs = lhs;
    v.status = !lhs ? Status::inapplicable : (*lhs >= n ? Status::holds : Status::fails);
    return v;
}

std::optional<int> sum(std::optional<int> a, std::optional<int> b) {
    if (!a || !b) return std::nullopt;
    return *a + *b;
}

std::optional<int> min2(std::optional<int> a, std::optional<int> b) {
    if (!a || !b) return std::nullopt; // an Inapplicable operand poisons the min
    return std::min(*a, *b);
}

} // namespace

ConditionSet condition_verdicts(const DegreeSequence& ds, int n) {
    ConditionSet s;
    if (n == 0) {
        s.b = verdict(TheoremTag::B, 0, 0, std::nullopt);
        s.d = verdict(TheoremTag::D, 0, 0, std::nullopt);
        s.t2 = verdict(TheoremTag::T2, 0, 0, std::nullopt);
        s.t4 = verdict(TheoremTag::T4, 0, 0, std::nullopt);
        return s;
    }
    const int delta = ds.min_degree();
    s.d_delta = ds.at(delta);
    s.d_delta1 = ds.at(delta + 1);
    s.d_delta2 = ds.at(delta + 2);
    s.b = verdict(TheoremTag::B, n, delta, 2 * delta);
    s.d = verdict(TheoremTag::D, n, delta, sum(s.d_delta, s.d_delta));
    s.t2 = verdict(TheoremTag::T2, n, delta, sum(s.d_delta, s.d_delta1));
    s.t4 = verdict(TheoremTag::T4, n, delta,
                   min2(sum(s.d_delta1, s.d_delta1), sum(s.d_delta, s.d_delta2)));
    return s;
}

BoundTargetSet bound_targets(const DegreeSequence& ds, int p) {
    BoundTargetSet t;
    t.a.tag = TheoremTag::A;
    t.c.tag = TheoremTag::C;
    t.t1.tag = TheoremTag::T1;
    t.t3.tag = TheoremTag::T3;
    if (ds.size() == 0) return t;
    const int delta = ds.min_degree();
    const auto dd = ds.at(delta);
    const auto dd1 = ds.at(delta + 1);
    const auto dd2 = ds.at(delta + 2);
    t.a.value = min2(p, 2 * delta);
    t.c.value = min2(p, sum(dd, dd));
    t.t1.value = min2(p, sum(dd, dd1));
    t.t3.value = min2(p, min2(sum(dd1, dd1), sum(dd, dd2)));
    return t;
}

ImplicationReport implication_audit(const DegreeSequence& ds, int n) {
    ImplicationReport r;
    if (n == 0) return r;
    const int delta = ds.min_degree();
    const auto dd = ds.at(delta);
    const auto dd1 = ds.at(delta + 1);
    const auto dd2 = ds.at(delta + 2);

    auto link = [&](const char* ln, const char* rn, std::optional<int> l, std::optional<int> rr) {
        ImplicationReport::Link k;
        k.lhs_name = ln;
        k.rhs_name = rn;
        k.lhs = l;
        k.rhs = rr;
        k.applicable = l.has_value() && rr.has_value();
        k.ok = !k.applicable || *l <= *rr;
        if (!k.ok) r.consistent = false;
        r.links.push_back(std::move(k));
    };

    const std::optional<int> t2lhs = dd && dd1 ? std::optional<int>(*dd + *dd1) : std::nullopt;
    const std::optional<int> t4lhs =
        dd1 && dd && dd2 ? std::optional<int>(std::min(2 * *dd1, *dd + *dd2)) : std::nullopt;
    link("2*d_1", "2*d_delta", 2 * ds.min_degree(), dd ? std::optional<int>(2 * *dd) : std::nullopt);
    link("2*d_delta", "d_delta+d_delta+1", dd ? std::optional<int>(2 * *dd) : std::nullopt, t2lhs);
    link("d_delta+d_delta+1", "min{2*d_delta+1, d_delta+d_delta+2}", t2lhs, t4lhs);

    if (!r.consistent)
        fail(errc::chain_violation, "sorted degree sequence violated the monotone chain");

    // verdict-level implications, with Inapplicable as escape
    const ConditionSet v = condition_verdicts(ds, n);
    auto implies = [&](const ConditionVerdict& a, const ConditionVerdict& b) {
        if (a.status == Status::holds && b.status == Status::fails) {
            r.consistent = false;
            fail(errc::chain_violation, std::string("verdict ") + tag_name(a.tag) +
                                            " holds but " + tag_name(b.tag) + " fails");
        }
    };
    implies(v.b, v.d);
    implies(v.d, v.t2);
    implies(v.t2, v.t4);
    return r;
}

} // namespace circumlab
