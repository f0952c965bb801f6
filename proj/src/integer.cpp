#include "latile/integer.hpp"

#include <algorithm>
#include <stdexcept>

namespace latile {

long to_long(const Integer& n) {
    if (!fits_long(n)) throw std::overflow_error("integer " + n.get_str() + " does not fit in a machine word");
    return n.get_si();
}

std::vector<Integer> prime_divisors(const Integer& n) {
    if (n == 0) throw std::domain_error("prime_divisors: zero has no finite factorization");
    std::vector<Integer> out;
    Integer m = abs(n);
    for (Integer q = 2; q * q <= m; ++q) {
        if (divides(q, m)) {
            out.push_back(q);
            while (divides(q, m)) m /= q;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

Integer radical(const Integer& n) {
    Integer r = 1;
    for (const auto& q : prime_divisors(n)) r *= q;
    return r;
}

std::vector<Integer> divisors(const Integer& n) {
    if (n <= 0) throw std::domain_error("divisors: argument must be positive");
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (divides(d, n)) {
            small.push_back(d);
            Integer e = n / d;
            if (e != d) large.push_back(e);
        }
    }
    std::reverse(large.begin(), large.end());
    small.insert(small.end(), large.begin(), large.end());
    return small;
}

Integer prime_free_part(Integer n, const Integer& p) {
    n = abs(n);
    while (n != 0 && divides(p, n)) n /= p;
    return n;
}

unsigned prime_power_exponent(Integer n, const Integer& p) {
    if (n < p) return 0;
    unsigned k = 0;
    while (divides(p, n)) {
        n /= p;
        ++k;
    }
    return n == 1 ? k : 0;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace latile
