#ifndef ACSB_CHERNDIV_HPP
#define ACSB_CHERNDIV_HPP

// p-adic divisibility of Chern numbers c_k of a rank-q complex bundle whose
// first q-1 Chern classes vanish. Each partition term of the expansion of
// c_k contributes valuation
//
//     sum_i m_{q+t_i} * [ v_p((q+t_i-1)!) - floor(t_i/(p-1)) ]  -  v_p((sum_i m_i)!)
//
// and the divisibility exponent of c_k is the minimum over partitions of k
// with parts >= q.

#include <cstdint>
#include <optional>
#include <vector>

#include "acsb/bigint.hpp"
#include "acsb/padic.hpp"
#include "acsb/symfunc.hpp"
#include "acsb/valuation.hpp"

namespace cherndiv {

using acsb::BigInt;
using acsb::Valuation;
using padic::Prime;
using symfunc::PartitionVector;

// v_p((q+t-1)!) - v_p(phi(t)) for q >= 1, t >= 0. This is the valuation a
// single part q+t contributes per unit multiplicity.
Valuation adams_factor_valuation(Prime p, std::int64_t q, const BigInt& t);

// Whether adams_factor_valuation(p,q,t) >= v_p((q-1)!) for every t in
// [0, p-2] (the "small t" window before phi picks up its first p).
bool small_range_bound_holds(Prime p, std::int64_t q);

// The power-range hypothesis for exponent l: with e = floor((q-1)/(p-1))-l+1,
// the claimed window is t in [0, p^e - q), closed at p^e - q exactly when
// (p-1) does not divide (q-1). Inapplicable when e < 0 or p^e <= q.
struct PowerRangeWindow {
    bool applicable = false;
    std::int64_t e = 0;
    BigInt p_to_e;   // set when e >= 0
    bool closed = false;
    BigInt t_hi;     // last t in the window (inclusive), set when applicable
};
PowerRangeWindow power_range_window(Prime p, std::int64_t q, std::int64_t l);

// Minimum of adams_factor_valuation(p,q,t) over t in [0, t_hi]. Exact over
// the whole interval: the value depends on n = q+t-1 only through its base-p
// digit sum, and the digit sum is maximized in closed form, so this runs in
// polynomial time in the number of digits even for astronomically long
// windows.
Valuation min_adams_factor_valuation(Prime p, std::int64_t q, const BigInt& t_hi);

// Does adams_factor_valuation >= l hold on the whole power-range window?
// nullopt when the window is inapplicable.
std::optional<bool> power_range_bound_holds(Prime p, std::int64_t q, std::int64_t l);

// Valuation of a single partition term of c_k, with the per-part breakdown.
struct TermBreakdownEntry {
    std::int64_t part;             // q + t
    std::uint32_t multiplicity;
    Valuation factor_valuation;    // adams_factor_valuation(p, q, part - q)
};
struct TermValuationReport {
    PartitionVector partition;
    Valuation valuation;
    std::vector<TermBreakdownEntry> breakdown;
    Valuation multiset_correction; // v_p((sum m_i)!), subtracted
};
TermValuationReport term_valuation(Prime p, std::int64_t q, const PartitionVector& pv);

// min over partitions of k with parts >= q of term_valuation. Requires
// q <= k <= symfunc::kMaxPartitionWeight. +infinity never occurs (every
// partition term is finite).
Valuation ck_divisibility_bound(Prime p, std::int64_t q, std::int64_t k);
// The first partition (in enumeration order) attaining that minimum.
TermValuationReport ck_minimizing_term(Prime p, std::int64_t q, std::int64_t k);

// Guaranteed divisibility ranges of k for exponent parameters (p, q, l):
// range (i) covers k in [q, q+p-2] with exponent v_p((q-1)!); range (ii)
// covers k in [q, p^e) (closed at p^e iff (p-1) does not divide (q-1)) with
// exponent l. Range (ii) is empty when the window is inapplicable.
struct DivisibilityRange {
    bool empty = true;
    std::int64_t k_min = 0;
    BigInt k_max;        // can exceed int64 (p^e)
    bool inclusive = false;
    Valuation exponent;
};
std::pair<DivisibilityRange, DivisibilityRange> divisibility_ranges(Prime p, std::int64_t q,
                                                                    std::int64_t l);

} // namespace cherndiv

#endif
