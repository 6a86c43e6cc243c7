#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circumlab/graph.hpp"

namespace circumlab {

// The four Hamiltonicity conditions and four circumference bound targets,
// evaluated purely from the sorted degree sequence:
//
//   B : 2*d_1 >= n                                   A : min{p, 2*d_1}
//   D : 2*d_d >= n                                   C : min{p, 2*d_d}
//   T2: d_d + d_{d+1} >= n                           T1: min{p, d_d + d_{d+1}}
//   T4: min{2*d_{d+1}, d_d + d_{d+2}} >= n           T3: min{p, 2*d_{d+1}, d_d + d_{d+2}}
//
// where d = delta is the minimum degree and d_k is the k-th smallest degree.
// Whenever a required index falls outside 1..n the whole verdict or target is
// Inapplicable; no term of a min is ever dropped silently.

enum class TheoremTag { B, D, T2, T4, A, C, T1, T3 };
enum class Status { holds, fails, inapplicable };

const char* tag_name(TheoremTag t);
const char* status_name(Status s);

struct ConditionVerdict {
    TheoremTag tag{};
    Status status = Status::inapplicable;
    int n = 0;
    int delta = 0;
    std::optional<int> lhs; // the condition's left side, when applicable
    bool holds() const { return status == Status::holds; }
};

struct ConditionSet {
    ConditionVerdict b, d, t2, t4;
    std::optional<int> d_delta, d_delta1, d_delta2; // operands for reports
};

ConditionSet condition_verdicts(const DegreeSequence& ds, int n);

struct BoundTarget {
    TheoremTag tag{};
    std::optional<int> value; // nullopt = Inapplicable
};

struct BoundTargetSet {
    BoundTarget a, c, t1, t3;
};

/// Evaluates the four min-expressions against a supplied longest-path order.
BoundTargetSet bound_targets(const DegreeSequence& ds, int p);

/// Audits the monotone chain 2*d_1 <= 2*d_d <= d_d+d_{d+1} <= min{2*d_{d+1},
/// d_d+d_{d+2}} and the induced verdict implications B => D => T2 => T4
/// (with Inapplicable as an escape). A violated link means an implementation
/// bug, not a graph property, and raises chain_violation.
struct ImplicationReport {
    struct Link {
        std::string lhs_name, rhs_name;
        std::optional<int> lhs, rhs;
        bool applicable = false;
        bool ok = true;
    };
    std::vector<Link> links;
    bool consistent = true;
};

ImplicationReport implication_audit(const DegreeSequence& ds, int n);

} // namespace circumlab
