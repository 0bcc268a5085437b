#ifndef ACSB_SYMFUNC_HPP
#define ACSB_SYMFUNC_HPP

// Newton's identities between elementary symmetric functions sigma_k and
// power sums s_k, in the truncated setting where sigma_1, ..., sigma_{q-1}
// all vanish. The expansion of sigma_k is then supported on partitions of k
// whose parts are all >= q, and its coefficients are rationals with prime
// factorizations we need exactly.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "acsb/bigint.hpp"
#include "acsb/errors.hpp"

namespace symfunc {

using acsb::BigInt;
using acsb::Rational;

// A partition of `weight()` into parts >= lowest_part, stored as the
// multiplicity vector (m_lowest, ..., m_weight) so two partitions of the same
// weight with the same lowest part always have equal-length vectors.
class PartitionVector {
  public:
    PartitionVector(std::int64_t lowest_part, std::vector<std::uint32_t> multiplicities);

    std::int64_t lowest_part() const { return lowest_; }
    const std::vector<std::uint32_t>& multiplicities() const { return mult_; }
    std::uint32_t multiplicity_of(std::int64_t part) const;

    std::int64_t weight() const;          // sum of part * multiplicity
    std::uint64_t part_count() const;     // sum of multiplicities
    std::int64_t largest_part() const;    // 0 for the empty partition

    // (part, multiplicity) pairs with multiplicity > 0, ascending part.
    std::vector<std::pair<std::int64_t, std::uint32_t>> nonzero_parts() const;

    friend bool operator==(const PartitionVector& a, const PartitionVector& b) {
        return a.lowest_ == b.lowest_ && a.mult_ == b.mult_;
    }

  private:
    std::int64_t lowest_;
    std::vector<std::uint32_t> mult_;
};

// Weight above which partition enumeration is refused (p(64) is already about
// 1.7 million partitions).
inline constexpr std::int64_t kMaxPartitionWeight = 64;

// Visit every partition of k with parts >= lowest_part, ordered by decreasing
// largest part (then recursively likewise), e.g. k=3: (3), (2,1), (1,1,1).
// Visits nothing when lowest_part > k. Throws resource_limit_error when
// k > kMaxPartitionWeight.
void for_each_partition(std::int64_t k, std::int64_t lowest_part,
                        const std::function<void(const PartitionVector&)>& visit);

// Materialized variant, same order.
std::vector<PartitionVector> enumerate_partitions(std::int64_t k, std::int64_t lowest_part);

// (sum m_i)! / prod (m_i!) for the multiplicities of pv.
BigInt multinomial(const PartitionVector& pv);

// One term of a symmetric-function expansion: coefficient times the monomial
// prod_i (s_i / i)^{m_i} over the parts of the partition.
struct SymbolicTerm {
    PartitionVector partition;
    Rational coefficient;
};

// sigma_k expressed in the basis of (s_i/i)-monomials, restricted to
// partitions with parts >= lowest_part (the sigma_1 = ... = sigma_{q-1} = 0
// specialization). Terms follow the partition enumeration order.
struct SymbolicCombination {
    std::int64_t weight;
    std::int64_t lowest_part;
    std::vector<SymbolicTerm> terms;
};

SymbolicCombination sigma_from_powersums(std::int64_t k, std::int64_t lowest_part);

// Coefficient of the raw monomial prod s_i^{m_i} (the grouped coefficient
// divided by prod i^{m_i}).
Rational raw_s_coefficient(const SymbolicTerm& term);

// s_k from sigma_1..sigma_k via the Newton recurrence
//   s_k = sigma_1 s_{k-1} - sigma_2 s_{k-2} + ... + (-1)^{k-1} k sigma_k.
// Missing trailing sigmas are treated as zero.
Rational powersums_from_sigma(std::int64_t k, std::span<const Rational> sigmas);

// Evaluate a combination at concrete power-sum values s_1..s_n (s_values[i]
// is s_{i+1}).
Rational evaluate(const SymbolicCombination& comb, std::span<const Rational> s_values);

// Ground-truth oracle: sigma_k and s_k computed from an explicit integer root
// multiset by literal subset enumeration / powering. Slow but unarguable.
struct SigmaPowerSum {
    BigInt sigma;
    BigInt power_sum;
};
SigmaPowerSum oracle_eval(const std::vector<std::int64_t>& roots, std::int64_t k);

} // namespace symfunc

#endif
