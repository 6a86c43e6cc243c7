// Compares the serial audit reference against the OpenMP kernel on an
// enumerated corpus and checks that both produce identical reports.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "circumlab/audit.hpp"
#include "circumlab/enumerate.hpp"
#include "circumlab/graph6.hpp"

using namespace circumlab;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int n = 6;
    std::string filter_name = "connected";
    if (argc > 1) n = std::atoi(argv[1]);
    if (argc > 2) filter_name = argv[2];

    std::vector<std::string> tokens;
    for_each_labeled_graph(n, parse_filter(filter_name),
                           [&](const Graph& g) { tokens.push_back(emit_graph6(g)); });
    std::cout << "corpus: " << tokens.size() << " labeled " << filter_name << " graphs on " << n
              << " vertices\n";

    AuditOptions opt;
    auto t0 = clock_type::now();
    const std::vector<AuditRecord> serial = run_audits_serial(tokens, opt);
    const double serial_ms = ms_since(t0);
    std::cout << "serial reference: " << serial_ms << " ms  ("
              << serial_ms * 1000.0 / static_cast<double>(tokens.size()) << " us/graph)\n";

#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    t0 = clock_type::now();
    const std::vector<AuditRecord> parallel = run_audits_parallel(tokens, opt);
    const double parallel_ms = ms_since(t0);
    std::cout << "openmp kernel (" << threads << " threads): " << parallel_ms << " ms  (speedup "
              << serial_ms / parallel_ms << "x)\n";

    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (record_to_json_line(serial[i]) != record_to_json_line(parallel[i])) {
            std::cout << "MISMATCH at record " << i << " (" << tokens[i] << ")\n";
            return 1;
        }
    }
    std::cout << "reports identical: yes\n";

    std::size_t violations = 0;
    for (const AuditRecord& r : serial) violations += r.violations.empty() ? 0 : 1;
    std::cout << "records with violations: " << violations << "\n";
    return violations == 0 ? 0 : 1;
}
