#pragma once

#include <string>
#include <vector>

#include "circumlab/graph.hpp"

#include "json.hpp"

namespace circumlab {

// The three sharpness families, generated deterministically with clique
// vertices labelled first:
//
//   E1: K_d + (d*K1 u K2)   n = 2d+2
//   E2: K_d + complement(K_{d+1})   n = 2d+1
//   E3: K_1 + 2*K_d         n = 2d+1
//
// delta >= 2 throughout; at delta = 1 the families degenerate (E2 becomes a
// star with kappa = 1) and the audited claims no longer apply, so generation
// refuses rather than special-cases.

enum class FamilyKind { e1, e2, e3 };
const char* family_name(FamilyKind k);

struct FamilySpec {
    FamilyKind kind{};
    int delta = 0;
};

Graph generate(const FamilySpec& spec);

struct ClaimCheck {
    std::string id;
    std::string statement;   // rendered with concrete numbers
    long long lhs = 0;
    std::string relation;    // "<", "<=", "==", ">="
    long long rhs = 0;
    bool holds = false;
    bool discrepancy = false; // recorded beside the stated claim, not asserted
};

struct SharpnessReport {
    FamilySpec spec;
    std::string graph6;
    int n = 0, c = 0, p = 0, kappa = 0;
    bool hamiltonian = false;
    std::vector<std::pair<std::string, int>> degrees; // named d_k operands
    std::vector<ClaimCheck> checks;

    bool all_non_discrepant_pass() const;
};

/// Recomputes every closed form and every non-relaxation inequality for one
/// family instance against the exact oracles. Failed checks are report
/// entries, never exceptions.
SharpnessReport sharpness_audit_family(const FamilySpec& spec);
std::vector<SharpnessReport> sharpness_audit(int delta);

nlohmann::ordered_json sharpness_report_to_json(const SharpnessReport& r);
std::string sharpness_report_table(const SharpnessReport& r);

} // namespace circumlab
