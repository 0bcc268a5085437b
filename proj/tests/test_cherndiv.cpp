#include <doctest.h>

#include "acsb/cherndiv.hpp"
#include "acsb/padic.hpp"

using acsb::BigInt;
using acsb::Valuation;
using padic::Prime;
using symfunc::PartitionVector;

TEST_CASE("adams_factor_valuation hand values at p=2, q=5") {
    Prime p(2);
    CHECK(cherndiv::adams_factor_valuation(p, 5, BigInt(0)).value() == 3); // v_2(4!)
    CHECK(cherndiv::adams_factor_valuation(p, 5, BigInt(1)).value() == 2); // v_2(5!) - 1
    CHECK(cherndiv::adams_factor_valuation(p, 5, BigInt(2)).value() == 2); // v_2(6!) - 2
    CHECK_THROWS_AS(cherndiv::adams_factor_valuation(p, 0, BigInt(0)), std::invalid_argument);
    CHECK_THROWS_AS(cherndiv::adams_factor_valuation(p, 5, BigInt(-1)), std::invalid_argument);
}

TEST_CASE("adams_factor_valuation decomposes as factorial minus phi part") {
    for (std::uint64_t pv : {2ull, 3ull, 5ull}) {
        Prime p(pv);
        for (std::int64_t q = 1; q <= 30; ++q) {
            for (std::int64_t t = 0; t <= 50; ++t) {
                BigInt tt(static_cast<long>(t));
                Valuation direct = cherndiv::adams_factor_valuation(p, q, tt);
                Valuation fact = padic::vp_factorial(p, BigInt(q) + tt - 1);
                BigInt phi_part = padic::vp_adams_phi(p, tt);
                CHECK(direct == fact - Valuation::finite(acsb::to_i64(phi_part)));
            }
        }
    }
}

TEST_CASE("small_range_bound_holds on a grid (a proved fact, so always true)") {
    for (std::uint64_t pv : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        Prime p(pv);
        for (std::int64_t q = 1; q <= 40; ++q) {
            CHECK(cherndiv::small_range_bound_holds(p, q));
        }
    }
}

TEST_CASE("power_range_window shapes") {
    // p=2, q=5, l=2: e = 4-2+1 = 3, 8 > 5, (q-1) divisible by (p-1) so open.
    auto w = cherndiv::power_range_window(Prime(2), 5, 2);
    CHECK(w.applicable);
    CHECK(w.e == 3);
    CHECK(w.p_to_e == 8);
    CHECK_FALSE(w.closed);
    CHECK(w.t_hi == 2);

    // p=3, q=6, l=2: e = 1, 3^1 <= 6, inapplicable.
    auto na = cherndiv::power_range_window(Prime(3), 6, 2);
    CHECK_FALSE(na.applicable);
    CHECK_FALSE(cherndiv::power_range_bound_holds(Prime(3), 6, 2).has_value());

    // p=3, q=8, l=1: e = 3, closed since 7 % 2 != 0, t_hi = 27 - 8.
    auto cl = cherndiv::power_range_window(Prime(3), 8, 1);
    CHECK(cl.applicable);
    CHECK(cl.closed);
    CHECK(cl.t_hi == 19);
}

TEST_CASE("min_adams_factor_valuation equals direct enumeration") {
    for (std::uint64_t pv : {2ull, 3ull, 5ull, 7ull}) {
        Prime p(pv);
        for (std::int64_t q = 1; q <= 40; q += 3) {
            for (std::int64_t t_hi : {std::int64_t(0), std::int64_t(1), std::int64_t(7),
                                      std::int64_t(63), std::int64_t(400)}) {
                Valuation direct = Valuation::infinity();
                for (std::int64_t t = 0; t <= t_hi; ++t) {
                    Valuation v = cherndiv::adams_factor_valuation(p, q, BigInt(t));
                    if (v < direct) direct = v;
                }
                CHECK(cherndiv::min_adams_factor_valuation(p, q, BigInt(t_hi)) == direct);
            }
        }
    }
}

TEST_CASE("power-range bound over a window of ~2^59 values, in microseconds") {
    // p=2, q=60, l=1: the window runs to t_hi = 2^59 - 61; the digit-sum
    // reduction evaluates the true minimum without walking it.
    auto holds = cherndiv::power_range_bound_holds(Prime(2), 60, 1);
    REQUIRE(holds.has_value());
    CHECK(*holds);
    auto w = cherndiv::power_range_window(Prime(2), 60, 1);
    CHECK(w.t_hi == acsb::pow_ui(BigInt(2), 59) - 61);
    CHECK(cherndiv::min_adams_factor_valuation(Prime(2), 60, w.t_hi).value() == 1);
}

TEST_CASE("closed windows end at valuation exactly l") {
    // p=3, q=8, l=1: boundary t = 27 - 8 = 19 has valuation exactly 1.
    CHECK(cherndiv::adams_factor_valuation(Prime(3), 8, BigInt(19)).value() == 1);
    // p=5, q=7, l=1: e = floor(6/4) - 0 = 1, 5 <= 7 -> inapplicable; bump q.
    // p=5, q=11, l=1: e = floor(10/4) = 2, 25 > 11, closed since 10 % 4 != 0.
    auto w = cherndiv::power_range_window(Prime(5), 11, 1);
    REQUIRE(w.applicable);
    REQUIRE(w.closed);
    CHECK(cherndiv::adams_factor_valuation(Prime(5), 11, w.p_to_e - 11).value() == 1);
}

TEST_CASE("term_valuation with breakdown") {
    // Two parts of size 5 at p=2, q=5: 2*v_2(4!) - v_2(2!) = 6 - 1 = 5.
    auto report = cherndiv::term_valuation(Prime(2), 5, PartitionVector(5, {2}));
    CHECK(report.valuation.value() == 5);
    REQUIRE(report.breakdown.size() == 1);
    CHECK(report.breakdown[0].part == 5);
    CHECK(report.breakdown[0].multiplicity == 2);
    CHECK(report.breakdown[0].factor_valuation.value() == 3);
    CHECK(report.multiset_correction.value() == 1);

    CHECK_THROWS_AS(cherndiv::term_valuation(Prime(2), 4, PartitionVector(5, {2})),
                    std::invalid_argument);
}

TEST_CASE("ck_divisibility_bound hand values") {
    CHECK(cherndiv::ck_divisibility_bound(Prime(2), 5, 5).value() == 3);
    CHECK(cherndiv::ck_divisibility_bound(Prime(3), 1, 1).value() == 0);
    // k=10, q=5, p=2: partitions {10} (val 2) and {5,5} (val 5); min 2.
    CHECK(cherndiv::ck_divisibility_bound(Prime(2), 5, 10).value() == 2);
    auto minimizer = cherndiv::ck_minimizing_term(Prime(2), 5, 10);
    CHECK(minimizer.partition.multiplicity_of(10) == 1);
    CHECK(minimizer.valuation.value() == 2);

    CHECK_THROWS_AS(cherndiv::ck_divisibility_bound(Prime(2), 5, 4), std::invalid_argument);
}

TEST_CASE("ck_divisibility_bound equals min over explicit partitions") {
    for (std::uint64_t pv : {2ull, 3ull}) {
        Prime p(pv);
        for (std::int64_t q = 1; q <= 6; ++q) {
            for (std::int64_t k = q; k <= q + 10; ++k) {
                Valuation expect = Valuation::infinity();
                for (const auto& part : symfunc::enumerate_partitions(k, q)) {
                    Valuation v = cherndiv::term_valuation(p, q, part).valuation;
                    if (v < expect) expect = v;
                }
                CHECK(cherndiv::ck_divisibility_bound(p, q, k) == expect);
            }
        }
    }
}

TEST_CASE("divisibility_ranges") {
    // p=2, q=5, l=2: range (i) is the single k=5 with exponent v_2(4!)=3;
    // range (ii) is [5, 8) with exponent 2.
    auto [small, power] = cherndiv::divisibility_ranges(Prime(2), 5, 2);
    CHECK_FALSE(small.empty);
    CHECK(small.k_min == 5);
    CHECK(small.k_max == 5);
    CHECK(small.inclusive);
    CHECK(small.exponent.value() == 3);
    CHECK_FALSE(power.empty);
    CHECK(power.k_min == 5);
    CHECK(power.k_max == 8);
    CHECK_FALSE(power.inclusive);
    CHECK(power.exponent.value() == 2);

    // p=3, q=6, l=2: power range inapplicable, hence empty.
    auto [s2, p2] = cherndiv::divisibility_ranges(Prime(3), 6, 2);
    CHECK_FALSE(s2.empty);
    CHECK(s2.k_min == 6);
    CHECK(s2.k_max == 7);
    CHECK(s2.exponent.value() == 1); // v_3(5!)
    CHECK(p2.empty);

    // p=3, q=6, l=1: closed window [6, 9].
    auto [s3, p3] = cherndiv::divisibility_ranges(Prime(3), 6, 1);
    CHECK_FALSE(s3.empty);
    CHECK_FALSE(p3.empty);
    CHECK(p3.k_max == 9);
    CHECK(p3.inclusive);
    CHECK(p3.exponent.value() == 1);
}
