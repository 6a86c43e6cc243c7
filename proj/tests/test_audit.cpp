#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "circumlab/audit.hpp"
#include "circumlab/enumerate.hpp"
#include "circumlab/graph6.hpp"
#include "test_support.hpp"

using namespace circumlab;

TEST_CASE("audit of K3 is clean and hamiltonian") {
    const AuditRecord r = audit_token("Bw");
    CHECK_FALSE(r.parse_error);
    CHECK(r.n == 3);
    CHECK(r.verdicts.b.holds());
    CHECK(r.hamiltonian);
    CHECK(r.achieved == 3);
    CHECK(r.violations.empty());
    const std::string line = record_to_json_line(r);
    CHECK(line.find("\"graph6\":\"Bw\"") != std::string::npos);
    CHECK(line.find("\"violations\":[]") != std::string::npos);
}

TEST_CASE("audit of E2 reports failing conditions without violations") {
    const std::string token = emit_graph6(join(complete_graph(2), empty_graph(3)));
    const AuditRecord r = audit_token(token);
    CHECK(r.n == 5);
    CHECK(r.kappa == 2);
    CHECK(r.p == 5);
    CHECK(r.c == 4);
    CHECK_FALSE(r.hamiltonian);
    CHECK(r.verdicts.t2.status == Status::fails);
    CHECK(r.targets.t1.value == 4);
    CHECK(r.achieved == 4);
    CHECK(r.violations.empty());
}

TEST_CASE("K2 sits below the hamiltonicity gate without violating anything") {
    const AuditRecord r = audit_token(emit_graph6(complete_graph(2)));
    CHECK(r.verdicts.t2.status == Status::holds); // numerically 1+1 >= 2
    CHECK_FALSE(r.hamiltonian);
    CHECK(r.violations.empty()); // the n >= 3 gate skips the implication
}

TEST_CASE("malformed tokens become error records") {
    const AuditRecord r = audit_token("@@");
    CHECK(r.parse_error);
    CHECK_FALSE(r.error.empty());
    const std::string line = record_to_json_line(r);
    CHECK(line.find("error") != std::string::npos);
}

TEST_CASE("serial reference and parallel kernel emit identical reports") {
    std::vector<std::string> tokens;
    for_each_labeled_graph(5, GraphFilter::all,
                           [&](const Graph& g) { tokens.push_back(emit_graph6(g)); });
    tokens.push_back("@@"); // one bad line mid-stream
    tokens.push_back("Bw");

    const std::vector<AuditRecord> serial = run_audits_serial(tokens);
    const std::vector<AuditRecord> par1 = run_audits_parallel(tokens, {}, 1);
    const std::vector<AuditRecord> par4 = run_audits_parallel(tokens, {}, 4);
    REQUIRE(serial.size() == par1.size());
    REQUIRE(serial.size() == par4.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(record_to_json_line(serial[i]) == record_to_json_line(par1[i]));
        CHECK(record_to_json_line(serial[i]) == record_to_json_line(par4[i]));
    }
}

TEST_CASE("verify_stream preserves order and reports counts") {
    std::ostringstream in_text;
    std::vector<std::string> tokens;
    for_each_labeled_graph(4, GraphFilter::all,
                           [&](const Graph& g) { tokens.push_back(emit_graph6(g)); });
    for (const std::string& t : tokens) in_text << t << "\n";

    std::istringstream in(in_text.str());
    std::ostringstream out;
    VerifyStreamOptions opt;
    opt.batch_size = 7; // force several batches
    const VerifyStreamResult res = verify_stream(in, out, opt);
    CHECK(res.graphs == tokens.size());
    CHECK(res.violations == 0);
    CHECK(res.input_errors == 0);

    // output order matches input order
    std::istringstream lines(out.str());
    std::string line;
    std::size_t i = 0;
    while (std::getline(lines, line)) {
        CHECK(line.find("\"graph6\":\"" + tokens[i] + "\"") != std::string::npos);
        ++i;
    }
    CHECK(i == tokens.size());
}

TEST_CASE("strict mode stops at the first malformed line") {
    std::istringstream in("Bw\n@@\nC~\n");
    std::ostringstream out;
    VerifyStreamOptions opt;
    opt.strict = true;
    const VerifyStreamResult res = verify_stream(in, out, opt);
    CHECK(res.aborted);
    CHECK(res.input_errors == 1);

    std::istringstream in2("Bw\n@@\nC~\n");
    std::ostringstream out2;
    opt.strict = false;
    const VerifyStreamResult res2 = verify_stream(in2, out2, opt);
    CHECK_FALSE(res2.aborted);
    CHECK(res2.input_errors == 1);
    CHECK(res2.graphs == 3);
}

TEST_CASE("windows line endings are tolerated") {
    const AuditRecord r = audit_token("Bw\r");
    CHECK_FALSE(r.parse_error);
    CHECK(r.n == 3);
}
