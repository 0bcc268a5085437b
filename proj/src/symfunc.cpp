#include "acsb/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace symfunc {

PartitionVector::PartitionVector(std::int64_t lowest_part,
                                 std::vector<std::uint32_t> multiplicities)
    : lowest_(lowest_part), mult_(std::move(multiplicities)) {
    if (lowest_ < 1) throw std::invalid_argument("PartitionVector: lowest_part must be >= 1");
}

std::uint32_t PartitionVector::multiplicity_of(std::int64_t part) const {
    if (part < lowest_) return 0;
    auto idx = static_cast<std::size_t>(part - lowest_);
    return idx < mult_.size() ? mult_[idx] : 0;
}

std::int64_t PartitionVector::weight() const {
    std::int64_t w = 0;
    for (std::size_t i = 0; i < mult_.size(); ++i) {
        w += (lowest_ + static_cast<std::int64_t>(i)) * mult_[i];
    }
    return w;
}

std::uint64_t PartitionVector::part_count() const {
    std::uint64_t c = 0;
    for (auto m : mult_) c += m;
    return c;
}

std::int64_t PartitionVector::largest_part() const {
    for (std::size_t i = mult_.size(); i-- > 0;) {
        if (mult_[i] > 0) return lowest_ + static_cast<std::int64_t>(i);
    }
    return 0;
}

std::vector<std::pair<std::int64_t, std::uint32_t>> PartitionVector::nonzero_parts() const {
    std::vector<std::pair<std::int64_t, std::uint32_t>> out;
    for (std::size_t i = 0; i < mult_.size(); ++i) {
        if (mult_[i] > 0) out.emplace_back(lowest_ + static_cast<std::int64_t>(i), mult_[i]);
    }
    return out;
}

namespace {

// Recursive descent, largest part chosen first, so partitions arrive in
// decreasing lexicographic order of their part lists.
void descend(std::int64_t remaining, std::int64_t max_part, std::int64_t lowest,
             std::vector<std::uint32_t>& mult,
             const std::function<void(const PartitionVector&)>& visit) {
    for (std::int64_t part = std::min(remaining, max_part); part >= lowest; --part) {
        std::int64_t rest = remaining - part;
        if (rest != 0 && rest < lowest) continue;
        ++mult[static_cast<std::size_t>(part - lowest)];
        if (rest == 0) {
            visit(PartitionVector(lowest, mult));
        } else {
            descend(rest, part, lowest, mult, visit);
        }
        --mult[static_cast<std::size_t>(part - lowest)];
    }
}

} // namespace

void for_each_partition(std::int64_t k, std::int64_t lowest_part,
                        const std::function<void(const PartitionVector&)>& visit) {
    if (k < 1) throw std::invalid_argument("for_each_partition: k must be >= 1");
    if (lowest_part < 1) throw std::invalid_argument("for_each_partition: lowest_part must be >= 1");
    if (k > kMaxPartitionWeight) {
        throw acsb::resource_limit_error("for_each_partition: weight " + std::to_string(k) +
                                         " exceeds the enumeration cap of " +
                                         std::to_string(kMaxPartitionWeight));
    }
    if (lowest_part > k) return;
    std::vector<std::uint32_t> mult(static_cast<std::size_t>(k - lowest_part + 1), 0);
    descend(k, k, lowest_part, mult, visit);
}

std::vector<PartitionVector> enumerate_partitions(std::int64_t k, std::int64_t lowest_part) {
    std::vector<PartitionVector> out;
    for_each_partition(k, lowest_part, [&](const PartitionVector& pv) { out.push_back(pv); });
    return out;
}

BigInt multinomial(const PartitionVector& pv) {
    BigInt num = acsb::factorial(pv.part_count());
    BigInt den = 1;
    for (auto m : pv.multiplicities()) den *= acsb::factorial(m);
    if (num % den != 0) throw std::logic_error("multinomial: non-integer result");
    return num / den;
}

SymbolicCombination sigma_from_powersums(std::int64_t k, std::int64_t lowest_part) {
    SymbolicCombination comb{k, lowest_part, {}};
    for_each_partition(k, lowest_part, [&](const PartitionVector& pv) {
        // Coefficient of prod (s_i/i)^{m_i} in sigma_k: (-1)^(k + sum m) / prod m_i!.
        std::int64_t sign = ((k + static_cast<std::int64_t>(pv.part_count())) % 2 == 0) ? 1 : -1;
        BigInt den = 1;
        for (auto m : pv.multiplicities()) den *= acsb::factorial(m);
        comb.terms.push_back({pv, acsb::make_rational(BigInt(sign), den)});
    });
    return comb;
}

Rational raw_s_coefficient(const SymbolicTerm& term) {
    BigInt scale = 1;
    for (const auto& [part, m] : term.partition.nonzero_parts()) {
        scale *= acsb::pow_ui(BigInt(part), m);
    }
    return acsb::make_rational(term.coefficient.get_num(), term.coefficient.get_den() * scale);
}

Rational powersums_from_sigma(std::int64_t k, std::span<const Rational> sigmas) {
    if (k < 1) throw std::invalid_argument("powersums_from_sigma: k must be >= 1");
    auto sigma = [&](std::int64_t i) -> Rational {
        return static_cast<std::size_t>(i) <= sigmas.size() ? sigmas[static_cast<std::size_t>(i - 1)]
                                                            : Rational(0);
    };
    std::vector<Rational> s(static_cast<std::size_t>(k) + 1, Rational(0));
    for (std::int64_t j = 1; j <= k; ++j) {
        Rational acc(0);
        for (std::int64_t i = 1; i < j; ++i) {
            Rational piece = sigma(i) * s[static_cast<std::size_t>(j - i)];
            if (i % 2 == 0) piece = -piece;
            acc += piece;
        }
        Rational lead = Rational(static_cast<long>(j)) * sigma(j);
        if (j % 2 == 0) lead = -lead;
        acc += lead;
        s[static_cast<std::size_t>(j)] = acc;
    }
    return s[static_cast<std::size_t>(k)];
}

Rational evaluate(const SymbolicCombination& comb, std::span<const Rational> s_values) {
    Rational total(0);
    for (const auto& term : comb.terms) {
        Rational prod = term.coefficient;
        for (const auto& [part, m] : term.partition.nonzero_parts()) {
            if (static_cast<std::size_t>(part) > s_values.size()) {
                throw std::invalid_argument("evaluate: s_values too short for part " +
                                            std::to_string(part));
            }
            Rational base = s_values[static_cast<std::size_t>(part - 1)] /
                            Rational(static_cast<long>(part));
            for (std::uint32_t i = 0; i < m; ++i) prod *= base;
        }
        total += prod;
    }
    return total;
}

SigmaPowerSum oracle_eval(const std::vector<std::int64_t>& roots, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("oracle_eval: k must be >= 1");
    auto n = static_cast<std::int64_t>(roots.size());
    SigmaPowerSum out{BigInt(0), BigInt(0)};

    // sigma_k: sum over k-element index subsets of the product of roots.
    if (k <= n) {
        std::vector<std::int64_t> idx(static_cast<std::size_t>(k));
        for (std::int64_t i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            BigInt prod = 1;
            for (auto i : idx) prod *= BigInt(static_cast<long>(roots[static_cast<std::size_t>(i)]));
            out.sigma += prod;
            // advance the combination
            std::int64_t pos = k - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (std::int64_t j = pos + 1; j < k; ++j) {
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
            }
        }
    }

    for (auto r : roots) {
        out.power_sum += acsb::pow_ui(BigInt(static_cast<long>(r)),
                                      static_cast<std::uint64_t>(k));
    }
    return out;
}

} // namespace symfunc
