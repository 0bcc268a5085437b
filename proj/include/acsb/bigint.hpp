#ifndef ACSB_BIGINT_HPP
#define ACSB_BIGINT_HPP

// Arbitrary-precision integer and rational types. Everything downstream is
// exact arithmetic: no floating point anywhere in the math kernels.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace acsb {

using BigInt = mpz_class;
using Rational = mpq_class;

// Checked narrowing. Valuations and exponents are kept in int64 once they are
// known to be small; this is the single funnel where BigInt -> int64 happens.
inline std::int64_t to_i64(const BigInt& x) {
    if (!x.fits_slong_p()) {
        throw std::overflow_error("to_i64: value does not fit in a signed 64-bit integer: " +
                                  x.get_str());
    }
    return static_cast<std::int64_t>(x.get_si());
}

inline BigInt factorial(std::uint64_t n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt pow_ui(const BigInt& base, std::uint64_t e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// num/den reduced to lowest terms with den > 0.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace acsb

#endif
