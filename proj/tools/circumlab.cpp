#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "circumlab/audit.hpp"
#include "circumlab/connectivity.hpp"
#include "circumlab/enumerate.hpp"
#include "circumlab/families.hpp"
#include "circumlab/graph6.hpp"
#include "circumlab/prover.hpp"

namespace {

using namespace circumlab;

int default_jobs() {
    if (const char* env = std::getenv("CIRCUMLAB_JOBS")) {
        const int j = std::atoi(env);
        if (j > 0) return j;
    }
    return 0; // all available threads
}

struct DeltaRange {
    int lo = 2, hi = 2;
};

DeltaRange parse_delta_range(const std::string& text) {
    DeltaRange r;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = std::stoi(text);
    } else {
        r.lo = std::stoi(text.substr(0, dots));
        r.hi = std::stoi(text.substr(dots + 2));
    }
    if (r.hi < r.lo) fail(errc::invalid_argument, "empty delta range '" + text + "'");
    return r;
}

std::vector<FamilyKind> parse_families(const std::string& list) {
    std::vector<FamilyKind> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "E1") out.push_back(FamilyKind::e1);
        else if (item == "E2") out.push_back(FamilyKind::e2);
        else if (item == "E3") out.push_back(FamilyKind::e3);
        else fail(errc::invalid_argument, "unknown family '" + item + "'");
    }
    if (out.empty()) fail(errc::invalid_argument, "no families selected");
    return out;
}

int cmd_verify(const std::string& input, const std::string& output, bool strict,
               bool no_certificates, int jobs) {
    std::ifstream fin;
    std::ofstream fout;
    if (input != "-") {
        fin.open(input);
        if (!fin) {
            std::cerr << "cannot read " << input << "\n";
            return 2;
        }
    }
    if (output != "-") {
        fout.open(output);
        if (!fout) {
            std::cerr << "cannot write " << output << "\n";
            return 2;
        }
    }
    VerifyStreamOptions opt;
    opt.strict = strict;
    opt.jobs = jobs;
    opt.audit.certificates = !no_certificates;
    const VerifyStreamResult res = verify_stream(input == "-" ? std::cin : fin,
                                                 output == "-" ? std::cout : fout, opt);
    for (const std::string& token : res.counterexamples)
        std::cerr << "violation: " << token << "\n";
    if (res.input_errors > 0) return 2;
    return res.violations > 0 ? 1 : 0;
}

int cmd_enumerate(int n, const std::string& filter_name, const std::string& output) {
    const GraphFilter filter = parse_filter(filter_name);
    std::ofstream fout;
    if (output != "-") {
        fout.open(output);
        if (!fout) {
            std::cerr << "cannot write " << output << "\n";
            return 2;
        }
    }
    std::ostream& out = output == "-" ? std::cout : fout;
    for_each_labeled_graph(n, filter, [&](const Graph& g) { out << emit_graph6(g) << '\n'; });
    return 0;
}

int cmd_extremal(const std::string& delta_range, const std::string& family_list, bool table,
                 const std::string& output, int jobs) {
    const DeltaRange range = parse_delta_range(delta_range);
    if (range.lo < 2)
        fail(errc::delta_too_small, "families need delta >= 2, got " + std::to_string(range.lo));
    const std::vector<FamilyKind> kinds = parse_families(family_list);

    std::vector<FamilySpec> specs;
    for (int d = range.lo; d <= range.hi; ++d)
        for (FamilyKind k : kinds) specs.push_back({k, d});

    std::vector<SharpnessReport> reports(specs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : omp_get_max_threads())
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(specs.size()); ++i)
        reports[static_cast<std::size_t>(i)] =
            sharpness_audit_family(specs[static_cast<std::size_t>(i)]);

    std::ofstream fout;
    if (output != "-") {
        fout.open(output);
        if (!fout) {
            std::cerr << "cannot write " << output << "\n";
            return 2;
        }
    }
    std::ostream& out = output == "-" ? std::cout : fout;
    bool all_pass = true;
    for (const SharpnessReport& r : reports) {
        if (table)
            out << sharpness_report_table(r) << "\n";
        else
            out << sharpness_report_to_json(r).dump() << "\n";
        all_pass = all_pass && r.all_non_discrepant_pass();
    }
    return all_pass ? 0 : 1;
}

int cmd_certify(const std::string& token, bool check, const std::string& output) {
    Graph g;
    try {
        g = parse_graph6(token);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    try {
        const CycleCertificate cert = certified_long_cycle(g);
        const nlohmann::ordered_json j = certificate_to_json(cert);
        if (check) validate_certificate_json(j);
        std::ofstream fout;
        if (output != "-") {
            fout.open(output);
            if (!fout) {
                std::cerr << "cannot write " << output << "\n";
                return 2;
            }
        }
        (output == "-" ? std::cout : fout) << j.dump(2) << "\n";
        return 0;
    } catch (const Error& e) {
        if (e.code() == errc::not_two_connected) {
            std::cerr << "not 2-connected: " << e.what() << "\n";
            return 1;
        }
        std::cerr << e.what() << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"circumlab: exact verification of degree-sequence circumference bounds and "
                 "Hamiltonicity conditions on small graphs"};
    app.require_subcommand(1);
    int jobs = default_jobs();

    auto* verify = app.add_subcommand(
        "verify", "audit a graph6 stream; JSON record per line, exit 1 on violations, 2 on "
                  "input errors");
    std::string v_input = "-", v_output = "-";
    bool v_strict = false, v_nocert = false;
    verify->add_option("input", v_input, "graph6 file, '-' for stdin");
    verify->add_option("--output", v_output, "report path, '-' for stdout");
    verify->add_flag("--strict", v_strict, "stop at the first malformed token");
    verify->add_flag("--no-certificates", v_nocert, "skip the constructive prover");
    verify->add_option("--jobs", jobs, "worker threads (default: CIRCUMLAB_JOBS or all)");

    auto* enumerate =
        app.add_subcommand("enumerate", "emit every labeled graph on n vertices as graph6");
    int e_n = 0;
    std::string e_filter = "all", e_output = "-";
    enumerate->add_option("n", e_n, "order, 1..8")->required();
    enumerate->add_option("--filter", e_filter, "all | connected | two_connected");
    enumerate->add_option("--output", e_output, "path, '-' for stdout");

    auto* extremal = app.add_subcommand("extremal", "audit the sharpness families");
    std::string x_delta = "2..5", x_family = "E1,E2,E3", x_output = "-";
    bool x_table = false;
    extremal->add_option("--delta", x_delta, "delta or range A..B (delta >= 2)");
    extremal->add_option("--family", x_family, "comma list from E1,E2,E3");
    extremal->add_flag("--table", x_table, "plain-text tables instead of JSON");
    extremal->add_option("--output", x_output, "path, '-' for stdout");
    extremal->add_option("--jobs", jobs, "worker threads");

    auto* certify = app.add_subcommand("certify", "construct a long-cycle certificate for one "
                                                  "graph6 token (graph must be 2-connected)");
    std::string c_token, c_output = "-";
    bool c_check = false;
    certify->add_option("token", c_token, "graph6 token")->required();
    certify->add_flag("--check", c_check, "re-validate the certificate from adjacency alone");
    certify->add_option("--output", c_output, "path, '-' for stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(verify))
            return cmd_verify(v_input, v_output, v_strict, v_nocert, jobs);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(e_n, e_filter, e_output);
        if (app.got_subcommand(extremal))
            return cmd_extremal(x_delta, x_family, x_table, x_output, jobs);
        if (app.got_subcommand(certify)) return cmd_certify(c_token, c_check, c_output);
    } catch (const circumlab::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 2;
}
