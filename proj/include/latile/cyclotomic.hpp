#pragma once

// Exact arithmetic in Z[zeta_N], represented modulo the cyclotomic
// polynomial Phi_N so that equality with zero is decidable.

#include <map>
#include <vector>

#include "latile/integer.hpp"

namespace latile {

// Coefficients of Phi_N, lowest degree first. Cached; safe to call from
// several threads.
const std::vector<Integer>& cyclotomic_polynomial(long n);

// Euler's totient, the degree of Phi_N.
long totient(long n);

class CycInt {
public:
    // Zero of order 1.
    CycInt() : order_(1), coeffs_(1) {}
    static CycInt zero(long order);
    static CycInt integer(long order, const Integer& k);
    // zeta_N^e for any integer e.
    static CycInt root(long order, const Integer& e);

    long order() const { return order_; }
    // Length deg Phi_N, fully reduced.
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    // Same value viewed in Z[zeta_M]; requires order() | m.
    CycInt lifted(long m) const;

    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    CycInt& operator*=(const CycInt& o);
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
    friend CycInt operator-(const CycInt& a);

    // Compares after lifting both sides to the lcm of the orders.
    friend bool operator==(const CycInt& a, const CycInt& b);

private:
    friend CycInt root_power_sum(long n, const std::vector<Integer>& exponents);
    CycInt(long order, std::vector<Integer> coeffs) : order_(order), coeffs_(std::move(coeffs)) {}
    long order_;
    std::vector<Integer> coeffs_;
};

// sum_i zeta_N^{a_i}
CycInt root_power_sum(long n, const std::vector<Integer>& exponents);

class CycLaurentPoly {
public:
    explicit CycLaurentPoly(long order = 1) : order_(order) {}

    long order() const { return order_; }
    const std::map<Integer, CycInt>& terms() const { return terms_; }
    // Adds c * z^e; zero coefficients are dropped.
    void add_term(const Integer& e, const CycInt& c);

private:
    long order_;
    std::map<Integer, CycInt> terms_;
};

// True iff the polynomial vanishes identically on the unit circle.
bool is_zero_poly(const CycLaurentPoly& q);

struct PhiPrimePowerCheck {
    bool is_zero;
    bool divisibility_ok;
};

// Whether sum zeta_{p^k}^{a_i} vanishes, and if so whether p divides the
// number of terms.
PhiPrimePowerCheck phi_prime_power_check(const Integer& p, unsigned k, const std::vector<Integer>& exponents);

}  // namespace latile
