#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace latile {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Result lies in [0, |b|) for b != 0.
inline Integer floor_mod(const Integer& a, const Integer& b) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r < 0) r += abs(b);
    return r;
}

inline Integer gcd_of(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer lcm_of(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline bool divides(const Integer& d, const Integer& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline bool is_prime(const Integer& n) {
    return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

inline bool fits_long(const Integer& n) { return n.fits_slong_p() != 0; }

// Throws std::overflow_error when n does not fit.
long to_long(const Integer& n);

// Distinct prime divisors of |n| in increasing order (n != 0).
std::vector<Integer> prime_divisors(const Integer& n);

// Product of the distinct primes dividing n; radical(1) = 1.
Integer radical(const Integer& n);

// Positive divisors of n > 0, ascending.
std::vector<Integer> divisors(const Integer& n);

// Largest divisor of n coprime to p.
Integer prime_free_part(Integer n, const Integer& p);

// If n = p^k with k >= 1 returns k, otherwise 0.
unsigned prime_power_exponent(Integer n, const Integer& p);

// Fractional part in [0, 1).
inline Rational frac(const Rational& q) {
    Integer fl = floor_div(q.get_num(), q.get_den());
    Rational r = q - Rational(fl);
    r.canonicalize();
    return r;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

}  // namespace latile
