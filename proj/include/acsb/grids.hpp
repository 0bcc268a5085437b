#ifndef ACSB_GRIDS_HPP
#define ACSB_GRIDS_HPP

// Grid verification suites and the (n, q) scan. Every suite exists in two
// executions: a plain serial loop (the reference) and an OpenMP version that
// writes into preallocated per-unit slots and folds them in index order, so
// both executions produce byte-identical reports. ACS_THREADS overrides the
// worker count.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acsb/acs.hpp"

namespace grids {

enum class Execution { Serial, Parallel };

enum class Suite {
    Legendre,      // the two v_p(n!) forms agree on a (p, n) grid
    DigitSumBound, // S_p(n) <= (p-1)(floor_log_p(n)+1), equality iff n = p^(d+1)-1
    FactorBounds,  // small-range and power-range valuation bounds, plus
                   // reduction-vs-enumeration cross-checks and the boundary identity
    Newton,        // Newton identities against the subset-enumeration oracle
    ChernRanges,   // ck_divisibility_bound meets both claimed ranges
    Dyadic,        // p = 2 witness at q = dyadic_threshold(n), dual route
    MainScan       // witness exists for q in [a(n), a(n)+span], none at q in {1,3}
};

const char* suite_name(Suite s);                  // CLI spelling, e.g. "lemma-vp"
std::optional<Suite> suite_from_name(const std::string& name);
std::vector<Suite> all_suites();

// Bounds shared by all suites; each suite reads the fields it cares about and
// ignores the rest. Zero means "use the suite default".
struct SuiteBounds {
    std::int64_t p_max = 0;
    std::int64_t n_max = 0;
    std::int64_t q_max = 0;
    std::int64_t l_max = 0;
    std::int64_t k_max = 0;
    std::int64_t samples = 0;
    std::int64_t q_span = 0;
};

struct VerifyReport {
    Suite suite;
    std::string grid_description;
    std::uint64_t cases = 0;
    std::uint64_t failure_count = 0;
    std::vector<std::string> failures;   // at most kMaxStoredFailures entries
    std::vector<std::string> anomalies;  // observations that are not failures
    bool passed() const { return failure_count == 0; }
};

inline constexpr std::size_t kMaxStoredFailures = 100;

VerifyReport run_suite(Suite s, const SuiteBounds& bounds, Execution exec);

struct ScanResult {
    std::vector<acs::ScanRow> rows;      // n-major, then q, deterministic
    std::uint64_t prediction_violations = 0; // rows where expected != witness presence
};

ScanResult run_scan(std::int64_t n_max, std::int64_t q_max, Execution exec);

// Worker count the parallel execution will use: ACS_THREADS when set to a
// positive integer, otherwise the OpenMP default.
int worker_count();

} // namespace grids

#endif
