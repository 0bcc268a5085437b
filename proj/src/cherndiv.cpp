#include "acsb/cherndiv.hpp"

#include <stdexcept>

namespace cherndiv {

Valuation adams_factor_valuation(Prime p, std::int64_t q, const BigInt& t) {
    if (q < 1) throw std::invalid_argument("adams_factor_valuation: q must be >= 1");
    if (t < 0) throw std::invalid_argument("adams_factor_valuation: t must be >= 0");
    BigInt n = BigInt(static_cast<long>(q)) + t - 1;
    BigInt v = padic::vp_factorial_floor_form(p, n) - padic::vp_adams_phi(p, t);
    return Valuation::finite(acsb::to_i64(v));
}

bool small_range_bound_holds(Prime p, std::int64_t q) {
    if (q < 1) throw std::invalid_argument("small_range_bound_holds: q must be >= 1");
    Valuation base = padic::vp_factorial(p, BigInt(static_cast<long>(q)) - 1);
    for (std::uint64_t t = 0; t + 2 <= p.value(); ++t) {
        if (adams_factor_valuation(p, q, BigInt(static_cast<unsigned long>(t))) < base) {
            return false;
        }
    }
    return true;
}

PowerRangeWindow power_range_window(Prime p, std::int64_t q, std::int64_t l) {
    if (q < 1 || l < 1) {
        throw std::invalid_argument("power_range_window: q and l must be >= 1");
    }
    PowerRangeWindow w;
    std::int64_t pm1 = static_cast<std::int64_t>(p.value()) - 1;
    w.e = (q - 1) / pm1 - l + 1;
    if (w.e < 0) return w; // inapplicable, p_to_e left unset
    w.p_to_e = acsb::pow_ui(BigInt(static_cast<unsigned long>(p.value())),
                            static_cast<std::uint64_t>(w.e));
    w.closed = ((q - 1) % pm1) != 0;
    if (w.p_to_e <= q) return w; // window would be empty
    w.applicable = true;
    w.t_hi = w.p_to_e - q - (w.closed ? 0 : 1);
    return w;
}

// adams_factor_valuation(p,q,t) written in n = q+t-1 is
//
//   (n - S_p(n))/(p-1) - floor((n - (q-1))/(p-1))
//     = ( (q-1) + ((S_p(n) - (q-1)) mod (p-1)) - S_p(n) ) / (p-1),
//
// which depends on n only through S_p(n) and is nonincreasing in S_p(n).
// So the minimum over t in [0, t_hi] is attained at the n in [q-1, q-1+t_hi]
// with the largest digit sum, and that digit sum has a closed form.
Valuation min_adams_factor_valuation(Prime p, std::int64_t q, const BigInt& t_hi) {
    if (q < 1) throw std::invalid_argument("min_adams_factor_valuation: q must be >= 1");
    if (t_hi < 0) throw std::invalid_argument("min_adams_factor_valuation: t_hi must be >= 0");
    std::int64_t pm1 = static_cast<std::int64_t>(p.value()) - 1;
    BigInt n_lo = BigInt(static_cast<long>(q)) - 1;
    BigInt n_hi = n_lo + t_hi;
    auto s_max = static_cast<std::int64_t>(padic::max_digit_sum_in_range(p, n_lo, n_hi));
    std::int64_t n0 = q - 1;
    std::int64_t r = ((s_max - n0) % pm1 + pm1) % pm1;
    return Valuation::finite((n0 + r - s_max) / pm1);
}

std::optional<bool> power_range_bound_holds(Prime p, std::int64_t q, std::int64_t l) {
    PowerRangeWindow w = power_range_window(p, q, l);
    if (!w.applicable) return std::nullopt;
    return min_adams_factor_valuation(p, q, w.t_hi) >= l;
}

TermValuationReport term_valuation(Prime p, std::int64_t q, const PartitionVector& pv) {
    if (pv.lowest_part() != q) {
        throw std::invalid_argument("term_valuation: partition lowest_part must equal q");
    }
    TermValuationReport report{pv, Valuation::finite(0), {}, Valuation::finite(0)};
    Valuation sum = Valuation::finite(0);
    for (const auto& [part, m] : pv.nonzero_parts()) {
        Valuation fv = adams_factor_valuation(p, q, BigInt(static_cast<long>(part - q)));
        report.breakdown.push_back({part, m, fv});
        sum += static_cast<std::int64_t>(m) * fv;
    }
    report.multiset_correction =
        padic::vp_factorial(p, BigInt(static_cast<unsigned long>(pv.part_count())));
    report.valuation = sum - report.multiset_correction;
    return report;
}

namespace {

// Shared scan: minimum term valuation over partitions of k with parts >= q,
// plus the first partition attaining it.
TermValuationReport scan_partitions(Prime p, std::int64_t q, std::int64_t k) {
    if (q < 1) throw std::invalid_argument("ck_divisibility_bound: q must be >= 1");
    if (k < q) throw std::invalid_argument("ck_divisibility_bound: k must be >= q");
    std::optional<TermValuationReport> best;
    symfunc::for_each_partition(k, q, [&](const PartitionVector& pv) {
        TermValuationReport r = term_valuation(p, q, pv);
        if (!best || r.valuation < best->valuation) best = std::move(r);
    });
    // k >= q >= 1 guarantees at least the single-part partition {k}.
    return *best;
}

} // namespace

Valuation ck_divisibility_bound(Prime p, std::int64_t q, std::int64_t k) {
    return scan_partitions(p, q, k).valuation;
}

TermValuationReport ck_minimizing_term(Prime p, std::int64_t q, std::int64_t k) {
    return scan_partitions(p, q, k);
}

std::pair<DivisibilityRange, DivisibilityRange> divisibility_ranges(Prime p, std::int64_t q,
                                                                    std::int64_t l) {
    if (q < 1 || l < 1) throw std::invalid_argument("divisibility_ranges: q and l must be >= 1");
    DivisibilityRange small;
    small.empty = false;
    small.k_min = q;
    small.k_max = BigInt(static_cast<long>(q)) + static_cast<long>(p.value()) - 2;
    small.inclusive = true;
    small.exponent = padic::vp_factorial(p, BigInt(static_cast<long>(q)) - 1);

    DivisibilityRange power; // stays empty when the window is inapplicable
    PowerRangeWindow w = power_range_window(p, q, l);
    if (w.applicable) {
        power.empty = false;
        power.k_min = q;
        power.k_max = w.p_to_e;
        power.inclusive = w.closed;
        power.exponent = Valuation::finite(l);
    }
    return {small, power};
}

} // namespace cherndiv
