#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "circumlab/conditions.hpp"
#include "circumlab/graph.hpp"
#include "circumlab/prover.hpp"

namespace circumlab {

// Per-graph audit record: degree stats, oracle values, the four condition
// verdicts, the four bound targets, certificate summary, and violation flags.
// An empty violation list means every theorem claim applicable to this graph
// was re-verified. The record is pure data; audits over many graphs are
// embarrassingly parallel, and the OpenMP runner is checked against the
// serial one for byte-identical output.

struct AuditOptions {
    bool certificates = true;      // run the constructive prover on 2-connected inputs
    bool hamilton_check = true;    // run hamilton_via_condition when T2/T4 holds
    std::uint64_t budget = default_enumeration_budget;
};

struct AuditRecord {
    std::string graph6;
    bool parse_error = false;
    std::string error; // parse failure text
    int n = 0;
    int delta = 0;
    std::optional<int> d_delta, d_delta1, d_delta2;
    int kappa = 0;
    int p = 0, c = 0;
    bool hamiltonian = false;
    ConditionSet verdicts;
    BoundTargetSet targets;
    std::optional<CaseTrace> cert_case;
    std::optional<int> achieved;
    std::vector<std::string> violations;

    bool clean() const { return !parse_error && violations.empty(); }
};

AuditRecord audit_graph(const Graph& g, std::string token, const AuditOptions& opt = {});
AuditRecord audit_token(const std::string& line, const AuditOptions& opt = {});

std::string record_to_json_line(const AuditRecord& r);

// Serial reference and OpenMP kernel; both produce identical record vectors
// in input order (jobs <= 0 means use all available threads).
std::vector<AuditRecord> run_audits_serial(const std::vector<std::string>& tokens,
                                           const AuditOptions& opt = {});
std::vector<AuditRecord> run_audits_parallel(const std::vector<std::string>& tokens,
                                             const AuditOptions& opt = {}, int jobs = 0);

struct VerifyStreamResult {
    std::uint64_t graphs = 0;
    std::uint64_t violations = 0;
    std::uint64_t input_errors = 0;
    bool aborted = false; // strict mode stop
    std::vector<std::string> counterexamples;
};

struct VerifyStreamOptions {
    AuditOptions audit;
    bool strict = false;
    int jobs = 0;
    std::size_t batch_size = 2048;
};

/// Reads one token per line, audits in order-preserving parallel batches and
/// writes one JSON record per line. Exit-code policy lives with the CLI.
VerifyStreamResult verify_stream(std::istream& in, std::ostream& out,
                                 const VerifyStreamOptions& opt);

} // namespace circumlab
