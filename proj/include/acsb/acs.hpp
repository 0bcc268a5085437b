#ifndef ACSB_ACS_HPP
#define ACSB_ACS_HPP

// Decision layer: when does the total space of a rank-(2q) sphere bundle over
// CP^n fail to admit an almost complex structure? A witness prime p certifies
// failure through one of two numeric conditions on (n, q, chi), where chi is
// the Euler number of the base (chi = n+1 for CP^n).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acsb/bigint.hpp"
#include "acsb/padic.hpp"
#include "acsb/valuation.hpp"

namespace acs {

using acsb::BigInt;
using acsb::Valuation;
using padic::Prime;

// Smallest fiber parameter a(n) for which the obstruction machinery below is
// claimed to produce a witness for every q >= a(n).
std::int64_t a_of_n(std::int64_t n);

struct BundleParams {
    std::int64_t n;        // base is CP^n, n >= 1
    std::int64_t q;        // fiber sphere S^{2q}, q >= 1
    std::int64_t chi;      // Euler number of the base
    bool section_assumed = true; // recorded in certificates, not verified
};

// chi = n+1 (the CP^n case).
BundleParams cpn(std::int64_t n, std::int64_t q);

enum class WitnessCondition { A, B };

struct WitnessCertificate {
    std::int64_t n = 0;
    std::int64_t q = 0;
    std::int64_t chi = 0;
    std::uint64_t prime = 0;
    WitnessCondition condition = WitnessCondition::A;
    // Condition B only: the exponent e = floor((q-1)/(p-1)) - v_p(chi) - delta_p.
    std::optional<std::int64_t> exponent;
    // The compared quantities: lhs is v_p((q-1)!) for A and p^e - q for B;
    // rhs is v_p(chi) + delta_p + 1 for A and n for B.
    BigInt lhs;
    std::int64_t rhs = 0;
    // B compares lhs >= rhs when strict is false, lhs > rhs when true;
    // strict iff (p-1) divides (q-1). A always uses >= and stores false.
    bool strict = false;
    std::int64_t delta_p = 0;      // v_p(2): 1 at p = 2, else 0
    bool section_assumed = true;
};

// Condition A: p > n+1 and v_p((q-1)!) >= v_p(chi) + delta_p + 1.
std::optional<WitnessCertificate> condition_a(Prime p, const BundleParams& bp);

// Condition B: e = floor((q-1)/(p-1)) - v_p(chi) - delta_p >= 0 and
// p^e - q > n (>= n suffices when (p-1) does not divide (q-1)).
std::optional<WitnessCertificate> condition_b(Prime p, const BundleParams& bp);

// Scan primes 2, 3, 5, ... <= max(q, 2) in increasing order, trying condition
// B then condition A at each, and return the first certificate found. Primes
// above that bound can never certify: for p > q both conditions are vacuous.
std::optional<WitnessCertificate> find_witness(const BundleParams& bp);
// Same, with an explicit upper bound on the primes tried.
std::optional<WitnessCertificate> find_witness(const BundleParams& bp,
                                               std::uint64_t prime_bound);

// Re-derive every field of a certificate from (n, q, chi) and check the
// claimed inequality. Used by tests and by `verify` paths; a certificate that
// fails this is a bug, not a math fact.
bool verify_certificate(const WitnessCertificate& cert);

// For n >= 1: q0 = floor(log2(odd part of n+1)) + 2 v_2(n+1) + 4, the fiber
// parameter from which the dyadic condition B witness p = 2 is guaranteed.
std::int64_t dyadic_threshold(std::int64_t n);

struct CheckResult {
    BundleParams params;
    std::optional<WitnessCertificate> witness;
    bool obstructed() const { return witness.has_value(); }
};

// The full decision for CP^n base: chi = n+1 unless overridden.
CheckResult canonical_check(std::int64_t n, std::int64_t q,
                            std::optional<std::int64_t> chi_override = std::nullopt);

struct ScanRow {
    std::int64_t n = 0;
    std::int64_t q = 0;
    std::int64_t a_n = 0;
    bool expected = false;   // q >= a(n): a witness is predicted
    std::optional<WitnessCertificate> witness;
};

ScanRow scan_pair(std::int64_t n, std::int64_t q);

} // namespace acs

#endif
