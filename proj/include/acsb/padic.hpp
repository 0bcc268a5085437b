#ifndef ACSB_PADIC_HPP
#define ACSB_PADIC_HPP

// p-adic valuations of integers, rationals and factorials, base-p digit
// machinery, and the multiplicative lower bound function
//
//     phi(t) = prod_p p^floor(t/(p-1))
//
// kept in factored form (its plain value overflows fast and is never needed).

#include <cstdint>
#include <map>
#include <vector>

#include "acsb/bigint.hpp"
#include "acsb/valuation.hpp"

namespace padic {

using acsb::BigInt;
using acsb::Rational;
using acsb::Valuation;

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

// A validated prime. Constructing one from a composite throws, so every
// downstream function can assume primality.
class Prime {
  public:
    explicit Prime(std::uint64_t p);
    std::uint64_t value() const { return p_; }
    friend bool operator==(Prime a, Prime b) { return a.p_ == b.p_; }
    friend bool operator<(Prime a, Prime b) { return a.p_ < b.p_; }

  private:
    std::uint64_t p_;
};

// Exponent of p in x; v_p(0) = +infinity.
Valuation vp_int(Prime p, const BigInt& x);
Valuation vp_rational(Prime p, const Rational& x);

// v_p(n!) for n >= 0. Computed two independent ways (floor sum over powers of
// p, and (n - S_p(n))/(p-1)) which must agree; disagreement throws.
Valuation vp_factorial(Prime p, const BigInt& n);
// The two forms individually, for callers that want to cross-check them.
BigInt vp_factorial_floor_form(Prime p, const BigInt& n);
BigInt vp_factorial_digit_form(Prime p, const BigInt& n);

// Base-p digits of n >= 0, least significant first. digits(0) is empty.
std::vector<std::uint32_t> digits(Prime p, const BigInt& n);
std::uint64_t digit_sum(Prime p, const BigInt& n);

// Largest e >= 0 with p^e <= n. Requires n >= 1.
std::uint64_t floor_log(Prime p, std::uint64_t n);

// max { S_p(m) : lo <= m <= hi }, exact, in O(digits(hi)^2) time. This is
// what makes "minimise a digit-sum expression over a huge interval" tractable
// without walking the interval.
std::uint64_t max_digit_sum_in_range(Prime p, const BigInt& lo, const BigInt& hi);

// A positive integer as a sparse map prime -> exponent (empty map = 1).
class PrimeFactorization {
  public:
    void set_exponent(std::uint64_t prime, std::uint64_t e);
    std::uint64_t exponent_of(std::uint64_t prime) const;
    const std::map<std::uint64_t, std::uint64_t>& factors() const { return f_; }
    BigInt to_bigint() const;
    friend bool operator==(const PrimeFactorization& a, const PrimeFactorization& b) {
        return a.f_ == b.f_;
    }

  private:
    std::map<std::uint64_t, std::uint64_t> f_;
};

// phi(t) in factored form; only primes with p-1 <= t contribute. t >= 0.
PrimeFactorization adams_phi(std::int64_t t);
// v_p(phi(t)) = floor(t/(p-1)), valid for any t >= 0 (also huge ones).
BigInt vp_adams_phi(Prime p, const BigInt& t);

} // namespace padic

#endif
