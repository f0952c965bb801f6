#include "latile/cyclotomic.hpp"

#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace latile {

namespace {

using Poly = std::vector<Integer>;

void check_order(long n) {
    if (n < 1) throw std::domain_error("cyclotomic: order must be positive");
}

// Exact quotient of a by a monic b.
Poly divide_exact(Poly a, const Poly& b) {
    const std::size_t db = b.size() - 1;
    Poly q(a.size() - db);
    for (std::size_t i = a.size(); i-- > db;) {
        Integer c = a[i];
        q[i - db] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    return q;
}

// Remainder of p modulo monic m, padded to deg m coefficients.
Poly reduce_mod(Poly p, const Poly& m) {
    const std::size_t dm = m.size() - 1;
    for (std::size_t i = p.size(); i-- > dm;) {
        Integer c = p[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dm; ++j) p[i - dm + j] -= c * m[j];
    }
    p.resize(dm);
    return p;
}

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

std::unordered_map<long, std::unique_ptr<const Poly>>& phi_cache() {
    static std::unordered_map<long, std::unique_ptr<const Poly>> cache;
    return cache;
}

using PowerTable = std::vector<Poly>;

constexpr long kPowerTableLimit = 2048;

std::unordered_map<long, std::unique_ptr<const PowerTable>>& power_cache() {
    static std::unordered_map<long, std::unique_ptr<const PowerTable>> cache;
    return cache;
}

// x^e mod Phi_N for 0 <= e < N.
const PowerTable& power_table(long n) {
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = power_cache().find(n);
        if (it != power_cache().end()) return *it->second;
    }
    const Poly& phi = cyclotomic_polynomial(n);
    const std::size_t deg = phi.size() - 1;
    auto table = std::make_unique<PowerTable>();
    table->reserve(static_cast<std::size_t>(n));
    Poly cur(deg);
    cur[0] = 1;
    if (deg == 0) cur.clear();
    for (long e = 0; e < n; ++e) {
        table->push_back(cur);
        Poly shifted(deg + 1);
        for (std::size_t i = 0; i < deg; ++i) shifted[i + 1] = cur[i];
        cur = reduce_mod(std::move(shifted), phi);
    }
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto [it, fresh] = power_cache().try_emplace(n, std::move(table));
    return *it->second;
}

// Residue histogram sum_e counts[e] x^e reduced mod Phi_N.
Poly reduce_histogram(long n, const std::vector<Integer>& counts) {
    const Poly& phi = cyclotomic_polynomial(n);
    if (n <= kPowerTableLimit) {
        const PowerTable& table = power_table(n);
        Poly out(phi.size() - 1);
        for (long e = 0; e < n; ++e) {
            const Integer& c = counts[static_cast<std::size_t>(e)];
            if (c == 0) continue;
            const Poly& xe = table[static_cast<std::size_t>(e)];
            for (std::size_t i = 0; i < out.size(); ++i)
                if (xe[i] != 0) out[i] += c * xe[i];
        }
        return out;
    }
    return reduce_mod(counts, phi);
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(long n) {
    check_order(n);
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = phi_cache().find(n);
        if (it != phi_cache().end()) return *it->second;
    }
    Poly p(static_cast<std::size_t>(n) + 1);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (long d = 1; d < n; ++d)
        if (n % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto [it, fresh] = phi_cache().try_emplace(n, std::make_unique<const Poly>(std::move(p)));
    return *it->second;
}

long totient(long n) {
    check_order(n);
    long result = n, m = n;
    for (long q = 2; q * q <= m; ++q) {
        if (m % q != 0) continue;
        while (m % q == 0) m /= q;
        result -= result / q;
    }
    if (m > 1) result -= result / m;
    return result;
}

CycInt CycInt::zero(long order) {
    check_order(order);
    return CycInt(order, Poly(static_cast<std::size_t>(totient(order))));
}

CycInt CycInt::integer(long order, const Integer& k) {
    CycInt out = zero(order);
    out.coeffs_[0] = k;
    return out;
}

CycInt CycInt::root(long order, const Integer& e) {
    check_order(order);
    std::vector<Integer> counts(static_cast<std::size_t>(order));
    counts[floor_mod(e, order).get_ui()] = 1;
    return CycInt(order, reduce_histogram(order, counts));
}

bool CycInt::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

CycInt CycInt::lifted(long m) const {
    check_order(m);
    if (m % order_ != 0) throw std::domain_error("CycInt::lifted: target order is not a multiple");
    if (m == order_) return *this;
    const long step = m / order_;
    std::vector<Integer> counts(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) counts[i * static_cast<std::size_t>(step)] = coeffs_[i];
    return CycInt(m, reduce_histogram(m, counts));
}

namespace {

long common_order(long a, long b) { return std::lcm(a, b); }

}  // namespace

CycInt& CycInt::operator+=(const CycInt& o) {
    const long m = common_order(order_, o.order_);
    *this = lifted(m);
    CycInt rhs = o.lifted(m);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) { return *this += -o; }

CycInt& CycInt::operator*=(const CycInt& o) {
    const long m = common_order(order_, o.order_);
    CycInt a = lifted(m), b = o.lifted(m);
    Poly prod(a.coeffs_.size() + b.coeffs_.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    *this = CycInt(m, reduce_mod(std::move(prod), cyclotomic_polynomial(m)));
    return *this;
}

CycInt operator-(const CycInt& a) {
    CycInt out = a;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

bool operator==(const CycInt& a, const CycInt& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    const long m = std::lcm(a.order_, b.order_);
    return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

CycInt root_power_sum(long n, const std::vector<Integer>& exponents) {
    check_order(n);
    std::vector<Integer> counts(static_cast<std::size_t>(n));
    for (const auto& e : exponents) counts[floor_mod(e, n).get_ui()] += 1;
    return CycInt(n, reduce_histogram(n, counts));
}

void CycLaurentPoly::add_term(const Integer& e, const CycInt& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

bool is_zero_poly(const CycLaurentPoly& q) {
    for (const auto& [e, c] : q.terms())
        if (!c.is_zero()) return false;
    return true;
}

PhiPrimePowerCheck phi_prime_power_check(const Integer& p, unsigned k, const std::vector<Integer>& exponents) {
    if (!is_prime(p)) throw std::domain_error("phi_prime_power_check: p is not prime");
    if (k < 1) throw std::domain_error("phi_prime_power_check: k must be positive");
    Integer n;
    mpz_pow_ui(n.get_mpz_t(), p.get_mpz_t(), k);
    const bool zero = root_power_sum(to_long(n), exponents).is_zero();
    const bool div = !zero || divides(p, Integer(static_cast<unsigned long>(exponents.size())));
    return {zero, div};
}

}  // namespace latile
