#include "circumlab/audit.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "circumlab/connectivity.hpp"
#include "circumlab/graph6.hpp"
#include "circumlab/oracles.hpp"

#include "json.hpp"

namespace circumlab {

namespace {

void check_condition_implications(const Graph& g, AuditRecord& r, const AuditOptions& opt) {
    const bool holds = r.verdicts.t2.holds() || r.verdicts.t4.holds();
    if (!holds || r.n < 3) return; // the n >= 3 gate: no Hamiltonicity claims below it
    if (r.kappa < 2) r.violations.push_back("condition_holds_but_kappa_lt_2");
    if (!r.hamiltonian) r.violations.push_back("condition_holds_but_not_hamiltonian");
    if (!opt.hamilton_check) return;
    try {
        const CycleWitness cycle = hamilton_via_condition(g, opt.budget);
        if (cycle.order() != r.n || !is_cycle_in(g, cycle.verts))
            r.violations.push_back("hamilton_witness_invalid");
    } catch (const Error& e) {
        r.violations.push_back(std::string("hamilton_via_condition_failed:") + errc_name(e.code()));
    }
}

void check_bound_targets(const Graph& g, AuditRecord& r, const AuditOptions& opt) {
    if (r.kappa < 2) return; // the bounds are claims about 2-connected graphs
    auto against_c = [&](const BoundTarget& t, const char* name) {
        if (t.value && r.c < *t.value)
            r.violations.push_back(std::string("bound_") + name + "_exceeds_c");
    };
    against_c(r.targets.a, "A");
    against_c(r.targets.c, "C");
    against_c(r.targets.t1, "T1");
    against_c(r.targets.t3, "T3");

    if (!opt.certificates) return;
    try {
        const CycleCertificate cert = certified_long_cycle(g, opt.budget);
        r.cert_case = cert.trace;
        r.achieved = cert.achieved;
        if (!is_cycle_in(g, cert.cycle.verts)) r.violations.push_back("certificate_cycle_invalid");
        if (cert.achieved > r.c) r.violations.push_back("certificate_exceeds_oracle_c");
        if (r.targets.t1.value && cert.achieved < *r.targets.t1.value)
            r.violations.push_back("certificate_below_T1_target");
        if (r.targets.t3.value && cert.achieved < *r.targets.t3.value)
            r.violations.push_back("certificate_below_T3_target");
    } catch (const Error& e) {
        r.violations.push_back(std::string("certificate_failed:") + errc_name(e.code()));
    }
}

} // namespace

AuditRecord audit_graph(const Graph& g, std::string token, const AuditOptions& opt) {
    AuditRecord r;
    r.graph6 = std::move(token);
    r.n = g.order();
    try {
        if (parse_graph6(r.graph6) != g) r.violations.push_back("codec_roundtrip_failed");

        const DegreeSequence ds = degree_sequence(g);
        if (r.n > 0) {
            r.delta = ds.min_degree();
            r.d_delta = ds.at(r.delta);
            r.d_delta1 = ds.at(r.delta + 1);
            r.d_delta2 = ds.at(r.delta + 2);
        }
        r.kappa = vertex_connectivity(g).kappa;
        if (r.n >= 1) {
            r.p = longest_path(g).order;
            r.c = circumference(g).order;
            if (r.c > r.p) r.violations.push_back("oracle_c_exceeds_p");
            r.hamiltonian = is_hamiltonian(g).hamiltonian;
        }
        r.verdicts = condition_verdicts(ds, r.n);
        r.targets = bound_targets(ds, r.p);
        if (r.n > 0 && !implication_audit(ds, r.n).consistent)
            r.violations.push_back("implication_chain_violated");

        check_condition_implications(g, r, opt);
        check_bound_targets(g, r, opt);
    } catch (const Error& e) {
        r.violations.push_back(std::string("audit_error:") + errc_name(e.code()) + ":" + e.what());
    }
    return r;
}

AuditRecord audit_token(const std::string& line, const AuditOptions& opt) {
    std::string token = line;
    if (!token.empty() && token.back() == '\r') token.pop_back();
    try {
        const Graph g = parse_graph6(token);
        return audit_graph(g, token, opt);
    } catch (const Error& e) {
        AuditRecord r;
        r.graph6 = token;
        r.parse_error = true;
        r.error = e.what();
        return r;
    }
}

std::string record_to_json_line(const AuditRecord& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["graph6"] = r.graph6;
    if (r.parse_error) {
        j["error"] = r.error;
        return j.dump();
    }
    j["n"] = r.n;
    j["delta"] = r.delta;
    auto opt_int = [](const std::optional<int>& v) {
        return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
    };
    j["d_delta"] = opt_int(r.d_delta);
    j["d_delta_plus_1"] = opt_int(r.d_delta1);
    j["d_delta_plus_2"] = opt_int(r.d_delta2);
    j["kappa"] = r.kappa;
    j["p"] = r.p;
    j["c"] = r.c;
    j["hamiltonian"] = r.hamiltonian;
    nlohmann::ordered_json verdicts;
    verdicts["B"] = status_name(r.verdicts.b.status);
    verdicts["D"] = status_name(r.verdicts.d.status);
    verdicts["T2"] = status_name(r.verdicts.t2.status);
    verdicts["T4"] = status_name(r.verdicts.t4.status);
    j["verdicts"] = std::move(verdicts);
    nlohmann::ordered_json targets;
    targets["A"] = opt_int(r.targets.a.value);
    targets["C"] = opt_int(r.targets.c.value);
    targets["T1"] = opt_int(r.targets.t1.value);
    targets["T3"] = opt_int(r.targets.t3.value);
    j["targets"] = std::move(targets);
    if (r.cert_case) {
        nlohmann::ordered_json cert;
        cert["case"] = case_name(*r.cert_case);
        cert["achieved"] = r.achieved ? nlohmann::ordered_json(*r.achieved)
                                      : nlohmann::ordered_json(nullptr);
        j["certificate"] = std::move(cert);
    } else {
        j["certificate"] = nullptr;
    }
    j["violations"] = r.violations;
    return j.dump();
}

std::vector<AuditRecord> run_audits_serial(const std::vector<std::string>& tokens,
                                           const AuditOptions& opt) {
    std::vector<AuditRecord> out;
    out.reserve(tokens.size());
    for (const std::string& t : tokens) out.push_back(audit_token(t, opt));
    return out;
}

std::vector<AuditRecord> run_audits_parallel(const std::vector<std::string>& tokens,
                                             const AuditOptions& opt, int jobs) {
    std::vector<AuditRecord> out(tokens.size());
#ifdef _OPENMP
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(tokens.size()); ++i)
        out[static_cast<std::size_t>(i)] = audit_token(tokens[static_cast<std::size_t>(i)], opt);
#else
    (void)jobs;
    for (std::size_t i = 0; i < tokens.size(); ++i) out[i] = audit_token(tokens[i], opt);
#endif
    return out;
}

VerifyStreamResult verify_stream(std::istream& in, std::ostream& out,
                                 const VerifyStreamOptions& opt) {
    VerifyStreamResult res;
    std::vector<std::string> batch;
    batch.reserve(opt.batch_size);
    bool more = true;
    while (more && !res.aborted) {
        batch.clear();
        std::string line;
        while (batch.size() < opt.batch_size && (more = static_cast<bool>(std::getline(in, line))))
            batch.push_back(line);
        if (batch.empty()) break;
        const std::vector<AuditRecord> records = run_audits_parallel(batch, opt.audit, opt.jobs);
        for (const AuditRecord& r : records) {
            out << record_to_json_line(r) << '\n';
            ++res.graphs;
            if (r.parse_error) {
                ++res.input_errors;
                if (opt.strict) {
                    res.aborted = true;
                    break;
                }
            } else if (!r.violations.empty()) {
                ++res.violations;
                res.counterexamples.push_back(r.graph6);
            }
        }
    }
    return res;
}

} // namespace circumlab
