#include "latile/spectral.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace latile {

RationalTorusPoint::RationalTorusPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    for (auto& c : coords_) {
        c.canonicalize();
        c = frac(c);
    }
}

RationalTorusPoint RationalTorusPoint::along(const Rational& t, const IntVec& v) const {
    if (v.dim() != dim()) throw std::domain_error("RationalTorusPoint::along: dimension mismatch");
    std::vector<Rational> out = coords_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += t * Rational(v[i]);
    return RationalTorusPoint(std::move(out));
}

Integer RationalTorusPoint::denominator() const {
    Integer d = 1;
    for (const auto& c : coords_) d = lcm_of(d, c.get_den());
    return d;
}

std::ostream& operator<<(std::ostream& os, const RationalTorusPoint& p) {
    os << '(';
    for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? "," : "") << to_string(p[i]);
    return os << ')';
}

Rational pairing(const IntVec& g, const RationalTorusPoint& rho) {
    if (g.dim() != rho.dim()) throw std::domain_error("pairing: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < g.dim(); ++i) s += Rational(g[i]) * rho[i];
    s.canonicalize();
    return s;
}

LineKeyer::LineKeyer(const IntVec& v) {
    if (v.is_zero()) throw std::domain_error("LineKeyer: zero direction");
    t_inv_ = complete_to_basis(primitive_part(v)).inverse().matrix();
}

// Fractional parts of the first n-1 coordinates of T^-1 w, where T e_n = v.
std::vector<Rational> LineKeyer::operator()(const RationalTorusPoint& w) const {
    const std::size_t n = w.dim();
    std::vector<Rational> key(n - 1);
    for (std::size_t r = 0; r + 1 < n; ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < n; ++c) s += Rational(t_inv_(r, c)) * w[c];
        s.canonicalize();
        key[r] = frac(s);
    }
    return key;
}

bool on_line(const RationalTorusPoint& w, const RationalTorusPoint& rho, const IntVec& v) {
    const LineKeyer key(v);
    return key(w) == key(rho);
}

RationalLineFamily::RationalLineFamily(std::vector<TorusLine> lines, Integer modulus) : modulus_(std::move(modulus)) {
    for (auto& l : lines) {
        if (l.v.is_zero()) throw std::domain_error("RationalLineFamily: zero direction");
        l.v = canonical_direction(l.v);
    }
    std::sort(lines.begin(), lines.end());
    std::map<IntVec, LineKeyer> keyers;
    for (auto& l : lines) {
        auto it = keyers.try_emplace(l.v, l.v).first;
        if (index_[l.v].insert(it->second(l.rho)).second) lines_.push_back(std::move(l));
    }
}

std::vector<RationalTorusPoint> RationalLineFamily::points() const {
    std::vector<RationalTorusPoint> out;
    for (const auto& l : lines_) out.push_back(l.rho);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<IntVec> RationalLineFamily::directions() const {
    std::vector<IntVec> out;
    for (const auto& [v, keys] : index_) out.push_back(v);
    return out;
}

bool RationalLineFamily::contains(const RationalTorusPoint& w) const {
    for (const auto& [v, keys] : index_)
        if (keys.count(LineKeyer(v)(w))) return true;
    return false;
}

RationalLineFamily merge_families(const std::vector<RationalLineFamily>& families) {
    std::vector<TorusLine> lines;
    Integer modulus = 1;
    for (const auto& f : families) {
        lines.insert(lines.end(), f.lines().begin(), f.lines().end());
        modulus = lcm_of(modulus, f.modulus());
    }
    return RationalLineFamily(std::move(lines), modulus);
}

Integer character_order(const Cluster& f, const RationalTorusPoint& rho) {
    Integer d = 1;
    for (const auto& g : f.points()) d = lcm_of(d, pairing(g, rho).get_den());
    return d;
}

bool residue_realizable(const Integer& r, const Integer& d, const Integer& n) {
    if (d <= 0 || n <= 0) throw std::domain_error("residue_realizable: moduli must be positive");
    for (const auto& q : prime_divisors(gcd_of(n, d)))
        if (divides(q, r)) return false;
    return true;
}

namespace {

void require_origin(const Cluster& f, const char* who) {
    if (!f.contains_origin()) throw std::domain_error(std::string(who) + ": cluster must contain the origin");
}

// The frequency-alpha mask sum only depends on gcd(alpha, D) up to a Galois
// conjugation, and alpha = d itself realizes gcd d whenever d is coprime to
// |F|. These d are exactly the classes that need checking.
std::vector<Integer> realizable_gcds(const Integer& d, const Integer& order) {
    std::vector<Integer> out;
    for (const auto& e : divisors(d))
        if (gcd_of(e, order) == 1) out.push_back(e);
    return out;
}

std::vector<Integer> scaled_numerators(const Cluster& f, const RationalTorusPoint& rho, const Integer& d) {
    std::vector<Integer> out;
    out.reserve(f.size());
    for (const auto& g : f.points()) {
        Rational s = pairing(g, rho) * Rational(d);
        s.canonicalize();
        out.push_back(s.get_num());
    }
    return out;
}

Integer cluster_size(const Cluster& f) { return Integer(static_cast<unsigned long>(f.size())); }

}  // namespace

bool z_membership(const Cluster& f, const RationalTorusPoint& rho) {
    require_origin(f, "z_membership");
    if (rho.dim() != f.dim()) throw std::domain_error("z_membership: dimension mismatch");
    const Integer d = character_order(f, rho);
    if (d == 1) return false;
    const long order = to_long(d);
    const auto numerators = scaled_numerators(f, rho, d);
    for (const auto& e : realizable_gcds(d, cluster_size(f))) {
        std::vector<Integer> exps;
        exps.reserve(numerators.size());
        for (const auto& c : numerators) exps.push_back(e * c);
        if (!root_power_sum(order, exps).is_zero()) return false;
    }
    return true;
}

DeltaSet compute_delta(const Cluster& f) {
    require_origin(f, "compute_delta");
    if (f.size() < 2) throw std::domain_error("compute_delta: cluster must have at least two points");
    const Integer n = radical(cluster_size(f));
    std::map<IntVec, Integer> scale;
    for (const auto& g : f.points()) {
        if (g.is_zero()) continue;
        auto [it, fresh] = scale.try_emplace(canonical_direction(g), Integer(1));
        it->second = lcm_of(it->second, n * content(g));
    }
    DeltaSet out;
    for (const auto& [dir, s] : scale) out.vectors.push_back(s * dir);
    std::sort(out.vectors.begin(), out.vectors.end());
    return out;
}

RationalLineFamily kernel_intersection_lines(const IntVec& g, const IntVec& h) {
    if (g.dim() != 3 || h.dim() != 3) throw std::domain_error("kernel_intersection_lines: vectors must be three-dimensional");
    if (cross(g, h).is_zero()) throw std::domain_error("kernel_intersection_lines: g and h are linearly dependent");
    const SmithForm snf = smith_normal_form(IntMatrix::from_rows({g, h}, 3));
    IntVec v = canonical_direction(snf.V * unit_vector(3, 2));

    Integer n = 1;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t r = 0; r < 2; ++r) {
            const Integer& d = snf.D(r, r);
            n = lcm_of(n, d / gcd_of(d, snf.U(r, i)));
        }

    // Lines through the grid are indexed by the first two coordinates of
    // T^-1 rho in ((1/n)Z/Z)^2, where T e_3 = v. Since v is orthogonal to g
    // and h, a line lies in both kernels as soon as its base point does.
    const UnimodularMatrix t = complete_to_basis(v);
    const long m = to_long(n);
    std::vector<TorusLine> lines;
    for (long i = 0; i < m; ++i)
        for (long j = 0; j < m; ++j) {
            std::vector<Rational> rho(3);
            for (std::size_t r = 0; r < 3; ++r) rho[r] = Rational(t(r, 0) * i + t(r, 1) * j, m);
            RationalTorusPoint point(std::move(rho));
            if (in_kernel(g, point) && in_kernel(h, point)) lines.push_back({std::move(point), v});
        }
    return RationalLineFamily(std::move(lines), n);
}

CycLaurentPoly line_restriction_poly(const Cluster& f, const RationalTorusPoint& rho, const IntVec& v,
                                     const Integer& alpha) {
    if (rho.dim() != f.dim() || v.dim() != f.dim()) throw std::domain_error("line_restriction_poly: dimension mismatch");
    if (v.is_zero()) throw std::domain_error("line_restriction_poly: zero direction");
    if (alpha <= 0 || gcd_of(alpha, cluster_size(f)) != 1)
        throw std::domain_error("line_restriction_poly: alpha must be positive and coprime to |F|");
    const Integer d = character_order(f, rho);
    const long order = to_long(d);
    const auto numerators = scaled_numerators(f, rho, d);
    CycLaurentPoly q(order);
    for (std::size_t i = 0; i < f.size(); ++i)
        q.add_term(alpha * dot(f.points()[i], v), CycInt::root(order, alpha * numerators[i]));
    return q;
}

bool line_in_Z(const Cluster& f, const RationalTorusPoint& rho, const IntVec& v) {
    require_origin(f, "line_in_Z");
    if (v.is_zero()) throw std::domain_error("line_in_Z: zero direction");
    const Integer d = character_order(f, rho);
    for (const auto& e : realizable_gcds(d, cluster_size(f)))
        if (!is_zero_poly(line_restriction_poly(f, rho, v, e))) return false;
    return true;
}

bool precursor_conclusion_check(const Cluster& f, const Integer& p, const RationalTorusPoint& rho, const IntVec& v) {
    if (!is_prime(p)) throw std::domain_error("precursor_conclusion_check: p is not prime");
    if (!divides(p, cluster_size(f))) throw std::domain_error("precursor_conclusion_check: p does not divide |F|");
    if (!line_in_Z(f, rho, v)) throw std::domain_error("precursor_conclusion_check: line is not contained in Z");
    return all_fibers_divisible(normal_fibers(f, v), p);
}

DichotomyResult support_dichotomy(const Cluster& f, const Integer& p, const IntVec& h) {
    require_origin(f, "support_dichotomy");
    if (f.dim() != 3) throw std::domain_error("support_dichotomy: cluster must be three-dimensional");
    if (h.dim() != 3 || h.is_zero()) throw std::domain_error("support_dichotomy: h must be a nonzero 3-vector");
    if (!is_prime(p) || prime_power_exponent(cluster_size(f), p) == 0)
        throw std::domain_error("support_dichotomy: |F| is not a power of p");

    if (all_fibers_divisible(line_fibers(f, h), p)) return LinesDivisible{};

    const Integer m = content(h);
    const UnimodularMatrix t = complete_to_basis(primitive_part(h));
    const Cluster flat = f.transformed(t.inverse());
    const FiberPartition classes = line_fibers(flat, unit_vector(3, 2));
    const Integer n = radical(cluster_size(f));

    std::set<Integer> betas;
    for (const auto& d : divisors(m)) betas.insert(prime_free_part(d, p));

    std::vector<RationalLineFamily> families;
    std::set<IntVec> seen;
    for (const auto& e : classes.fibers)
        for (const auto& e2 : classes.fibers) {
            if (&e == &e2) continue;
            for (const auto& beta : betas) {
                IntVec local{0, 0, 1};
                local[0] = e.front()[0] - e2.front()[0];
                local[1] = e.front()[1] - e2.front()[1];
                IntVec u = t * ((m * n * beta) * local);
                if (!seen.insert(u).second) continue;
                families.push_back(kernel_intersection_lines(h, u));
            }
        }
    return merge_families(families);
}

}  // namespace latile
