#include "acsb/acs.hpp"

#include <bit>
#include <stdexcept>

namespace acs {

std::int64_t a_of_n(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("a_of_n: n must be >= 1");
    if (n <= 2) return n + 3;
    if (n <= 5) return n + 2;
    return n;
}

BundleParams cpn(std::int64_t n, std::int64_t q) {
    if (n < 1 || q < 1) throw std::invalid_argument("cpn: n and q must be >= 1");
    return BundleParams{n, q, n + 1, true};
}

namespace {

void validate(const BundleParams& bp) {
    if (bp.n < 1 || bp.q < 1) throw std::invalid_argument("BundleParams: n and q must be >= 1");
    if (bp.chi == 0) throw std::invalid_argument("BundleParams: chi must be nonzero");
}

std::int64_t delta_of(Prime p) { return p.value() == 2 ? 1 : 0; }

std::int64_t vp_chi(Prime p, std::int64_t chi) {
    return padic::vp_int(p, BigInt(static_cast<long>(chi))).value();
}

} // namespace

std::optional<WitnessCertificate> condition_a(Prime p, const BundleParams& bp) {
    validate(bp);
    if (static_cast<std::int64_t>(p.value()) <= bp.n + 1) return std::nullopt;
    std::int64_t delta = delta_of(p);
    std::int64_t rhs = vp_chi(p, bp.chi) + delta + 1;
    BigInt lhs(padic::vp_factorial(p, BigInt(static_cast<long>(bp.q)) - 1).value());
    if (lhs < rhs) return std::nullopt;
    WitnessCertificate cert;
    cert.n = bp.n;
    cert.q = bp.q;
    cert.chi = bp.chi;
    cert.prime = p.value();
    cert.condition = WitnessCondition::A;
    cert.exponent = std::nullopt;
    cert.lhs = lhs;
    cert.rhs = rhs;
    cert.strict = false;
    cert.delta_p = delta;
    cert.section_assumed = bp.section_assumed;
    return cert;
}

std::optional<WitnessCertificate> condition_b(Prime p, const BundleParams& bp) {
    validate(bp);
    std::int64_t delta = delta_of(p);
    std::int64_t pm1 = static_cast<std::int64_t>(p.value()) - 1;
    std::int64_t e = (bp.q - 1) / pm1 - vp_chi(p, bp.chi) - delta;
    if (e < 0) return std::nullopt;
    BigInt lhs = acsb::pow_ui(BigInt(static_cast<unsigned long>(p.value())),
                              static_cast<std::uint64_t>(e)) -
                 bp.q;
    // p^e - q must clear n; when (p-1) divides (q-1) the comparison is
    // strict, otherwise reaching n is already enough.
    bool strict = ((bp.q - 1) % pm1) == 0;
    bool ok = strict ? (lhs > bp.n) : (lhs >= bp.n);
    if (!ok) return std::nullopt;
    WitnessCertificate cert;
    cert.n = bp.n;
    cert.q = bp.q;
    cert.chi = bp.chi;
    cert.prime = p.value();
    cert.condition = WitnessCondition::B;
    cert.exponent = e;
    cert.lhs = lhs;
    cert.rhs = bp.n;
    cert.strict = strict;
    cert.delta_p = delta;
    cert.section_assumed = bp.section_assumed;
    return cert;
}

std::optional<WitnessCertificate> find_witness(const BundleParams& bp,
                                               std::uint64_t prime_bound) {
    validate(bp);
    for (std::uint64_t pv : padic::primes_up_to(prime_bound)) {
        Prime p(pv);
        if (auto cert = condition_b(p, bp)) return cert;
        if (auto cert = condition_a(p, bp)) return cert;
    }
    return std::nullopt;
}

std::optional<WitnessCertificate> find_witness(const BundleParams& bp) {
    validate(bp);
    // For p > q both conditions fail: e < 0 unless q = 1, p^0 - q <= 0 < n,
    // and v_p((q-1)!) = 0 < rhs. So max(q, 2) bounds the useful primes.
    std::uint64_t bound = bp.q > 2 ? static_cast<std::uint64_t>(bp.q) : 2;
    return find_witness(bp, bound);
}

bool verify_certificate(const WitnessCertificate& cert) {
    if (!padic::is_prime(cert.prime)) return false;
    Prime p(cert.prime);
    BundleParams bp{cert.n, cert.q, cert.chi, cert.section_assumed};
    std::optional<WitnessCertificate> fresh;
    switch (cert.condition) {
        case WitnessCondition::A: fresh = condition_a(p, bp); break;
        case WitnessCondition::B: fresh = condition_b(p, bp); break;
    }
    if (!fresh) return false;
    return fresh->prime == cert.prime && fresh->exponent == cert.exponent &&
           fresh->lhs == cert.lhs && fresh->rhs == cert.rhs && fresh->strict == cert.strict &&
           fresh->delta_p == cert.delta_p;
}

std::int64_t dyadic_threshold(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("dyadic_threshold: n must be >= 1");
    auto m = static_cast<std::uint64_t>(n) + 1;
    std::int64_t nu = std::countr_zero(m);
    std::uint64_t odd = m >> nu;
    // floor(log2(odd part of n+1)) + 2 v_2(n+1) + 4
    std::int64_t log2_odd = std::bit_width(odd) - 1;
    return log2_odd + 2 * nu + 4;
}

CheckResult canonical_check(std::int64_t n, std::int64_t q,
                            std::optional<std::int64_t> chi_override) {
    BundleParams bp = cpn(n, q);
    if (chi_override) bp.chi = *chi_override;
    validate(bp);
    return CheckResult{bp, find_witness(bp)};
}

ScanRow scan_pair(std::int64_t n, std::int64_t q) {
    ScanRow row;
    row.n = n;
    row.q = q;
    row.a_n = a_of_n(n);
    row.expected = q >= row.a_n;
    row.witness = find_witness(cpn(n, q));
    return row;
}

} // namespace acs
