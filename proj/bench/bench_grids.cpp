// Times each verification suite in both executions and reports the speedup.
// The parallel path must also produce an identical report, so this doubles as
// a coarse cross-check. Speedup tracks the available cores (ACS_THREADS caps
// the worker count).

#include <chrono>
#include <iomanip>
#include <iostream>

#include "acsb/grids.hpp"

namespace {

double time_suite(grids::Suite suite, const grids::SuiteBounds& bounds, grids::Execution exec,
                  grids::VerifyReport& out) {
    auto start = std::chrono::steady_clock::now();
    out = grids::run_suite(suite, bounds, exec);
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

} // namespace

int main() {
    struct Entry {
        grids::Suite suite;
        grids::SuiteBounds bounds;
    };
    // Bounds chosen so each serial run lands in the 0.1-10 s range.
    Entry entries[] = {
        {grids::Suite::Legendre, {.p_max = 100, .n_max = 100'000}},
        {grids::Suite::DigitSumBound, {.p_max = 50, .n_max = 100'000}},
        {grids::Suite::FactorBounds, {.p_max = 13, .q_max = 60, .l_max = 6}},
        {grids::Suite::Newton, {.k_max = 12, .samples = 200}},
        {grids::Suite::ChernRanges, {.p_max = 5, .q_max = 12, .l_max = 4}},
        {grids::Suite::Dyadic, {.n_max = 10'000}},
        {grids::Suite::MainScan, {.n_max = 50, .q_span = 150}},
    };

    std::cout << "workers: " << grids::worker_count() << "\n";
    std::cout << std::left << std::setw(14) << "suite" << std::right << std::setw(12)
              << "serial ms" << std::setw(12) << "parallel ms" << std::setw(10) << "speedup"
              << std::setw(10) << "status" << "\n";

    bool all_ok = true;
    for (const auto& e : entries) {
        grids::VerifyReport serial_report, parallel_report;
        double serial_ms = time_suite(e.suite, e.bounds, grids::Execution::Serial, serial_report);
        double parallel_ms =
            time_suite(e.suite, e.bounds, grids::Execution::Parallel, parallel_report);

        bool identical = serial_report.cases == parallel_report.cases &&
                         serial_report.failure_count == parallel_report.failure_count &&
                         serial_report.failures == parallel_report.failures;
        bool ok = identical && serial_report.passed();
        all_ok = all_ok && ok;

        std::cout << std::left << std::setw(14) << grids::suite_name(e.suite) << std::right
                  << std::fixed << std::setprecision(1) << std::setw(12) << serial_ms
                  << std::setw(12) << parallel_ms << std::setprecision(2) << std::setw(10)
                  << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << std::setw(10)
                  << (ok ? "ok" : "MISMATCH") << "\n";
    }
    return all_ok ? 0 : 1;
}
