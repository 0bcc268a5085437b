#include "acsb/padic.hpp"

#include <stdexcept>

#include "acsb/errors.hpp"

namespace padic {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

// Deterministic Miller-Rabin; the base set below is a proven witness set for
// all 64-bit integers.
bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                            29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                            29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    if (bound > 100'000'000ull) {
        throw acsb::resource_limit_error("primes_up_to: sieve bound too large");
    }
    std::vector<bool> composite(bound + 1, false);
    for (std::uint64_t i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
    }
    return out;
}

Prime::Prime(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) {
        throw std::invalid_argument("Prime: " + std::to_string(p) + " is not prime");
    }
}

Valuation vp_int(Prime p, const BigInt& x) {
    if (x == 0) return Valuation::infinity();
    BigInt reduced;
    BigInt pz(static_cast<unsigned long>(p.value()));
    // mpz_remove returns the multiplicity of the factor it strips.
    auto e = mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
    return Valuation::finite(static_cast<std::int64_t>(e));
}

Valuation vp_rational(Prime p, const Rational& x) {
    BigInt num(x.get_num());
    BigInt den(x.get_den());
    return vp_int(p, num) - vp_int(p, den);
}

BigInt vp_factorial_floor_form(Prime p, const BigInt& n) {
    if (n < 0) throw std::invalid_argument("vp_factorial: negative argument");
    BigInt sum = 0;
    BigInt pk(static_cast<unsigned long>(p.value()));
    while (pk <= n) {
        sum += n / pk;
        pk *= static_cast<unsigned long>(p.value());
    }
    return sum;
}

BigInt vp_factorial_digit_form(Prime p, const BigInt& n) {
    if (n < 0) throw std::invalid_argument("vp_factorial: negative argument");
    BigInt num = n - BigInt(digit_sum(p, n));
    BigInt pm1(static_cast<unsigned long>(p.value() - 1));
    if (num % pm1 != 0) {
        throw std::logic_error("vp_factorial_digit_form: n - S_p(n) not divisible by p-1");
    }
    return num / pm1;
}

Valuation vp_factorial(Prime p, const BigInt& n) {
    BigInt a = vp_factorial_floor_form(p, n);
    BigInt b = vp_factorial_digit_form(p, n);
    if (a != b) {
        throw std::logic_error("vp_factorial: the floor-sum and digit-sum forms disagree at n=" +
                               n.get_str() + ", p=" + std::to_string(p.value()));
    }
    return Valuation::finite(acsb::to_i64(a));
}

std::vector<std::uint32_t> digits(Prime p, const BigInt& n) {
    if (n < 0) throw std::invalid_argument("digits: negative argument");
    std::vector<std::uint32_t> out;
    BigInt x = n;
    auto base = static_cast<unsigned long>(p.value());
    while (x > 0) {
        unsigned long r = mpz_fdiv_q_ui(x.get_mpz_t(), x.get_mpz_t(), base);
        out.push_back(static_cast<std::uint32_t>(r));
    }
    return out;
}

std::uint64_t digit_sum(Prime p, const BigInt& n) {
    if (n < 0) throw std::invalid_argument("digit_sum: negative argument");
    std::uint64_t s = 0;
    BigInt x = n;
    auto base = static_cast<unsigned long>(p.value());
    while (x > 0) {
        s += mpz_fdiv_q_ui(x.get_mpz_t(), x.get_mpz_t(), base);
    }
    return s;
}

std::uint64_t floor_log(Prime p, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("floor_log: argument must be >= 1");
    std::uint64_t e = 0;
    std::uint64_t x = n;
    while (x >= p.value()) {
        x /= p.value();
        ++e;
    }
    return e;
}

// The maximum is attained either at hi itself or at a number of the form
// (prefix of hi, one digit lowered, then all digits p-1). Scanning each cut
// position gives every candidate of that shape; a short dominance argument
// shows one of them is optimal.
std::uint64_t max_digit_sum_in_range(Prime p, const BigInt& lo, const BigInt& hi) {
    if (lo < 0 || hi < lo) {
        throw std::invalid_argument("max_digit_sum_in_range: need 0 <= lo <= hi");
    }
    std::uint64_t best = digit_sum(p, hi);
    BigInt place = 1;
    std::uint64_t digits_below = 0;
    while (place <= hi) {
        BigInt head = hi / place;
        // head*place - 1 keeps hi's digits above this position (minus one at
        // the position itself, with borrow) and fills the rest with p-1.
        BigInt candidate = head * place - 1;
        if (candidate >= lo) {
            std::uint64_t s = digit_sum(p, head - 1) + digits_below * (p.value() - 1);
            if (s > best) best = s;
        }
        place *= static_cast<unsigned long>(p.value());
        ++digits_below;
    }
    return best;
}

void PrimeFactorization::set_exponent(std::uint64_t prime, std::uint64_t e) {
    if (!is_prime(prime)) {
        throw std::invalid_argument("PrimeFactorization: key must be prime");
    }
    if (e == 0) {
        f_.erase(prime);
    } else {
        f_[prime] = e;
    }
}

std::uint64_t PrimeFactorization::exponent_of(std::uint64_t prime) const {
    auto it = f_.find(prime);
    return it == f_.end() ? 0 : it->second;
}

BigInt PrimeFactorization::to_bigint() const {
    BigInt r = 1;
    for (const auto& [prime, e] : f_) {
        r *= acsb::pow_ui(BigInt(static_cast<unsigned long>(prime)), e);
    }
    return r;
}

PrimeFactorization adams_phi(std::int64_t t) {
    if (t < 0) throw std::invalid_argument("adams_phi: t must be >= 0");
    if (t > 10'000'000) {
        throw acsb::resource_limit_error("adams_phi: t too large for explicit factorization");
    }
    PrimeFactorization out;
    // Only primes with p - 1 <= t contribute a positive exponent.
    for (std::uint64_t prime : primes_up_to(static_cast<std::uint64_t>(t) + 1)) {
        out.set_exponent(prime, static_cast<std::uint64_t>(t) / (prime - 1));
    }
    return out;
}

BigInt vp_adams_phi(Prime p, const BigInt& t) {
    if (t < 0) throw std::invalid_argument("vp_adams_phi: t must be >= 0");
    return t / BigInt(static_cast<unsigned long>(p.value() - 1));
}

} // namespace padic
