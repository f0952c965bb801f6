#pragma once

// Rational points of the torus R^n/Z^n and the common zero set Z of the
// mask sums sum_{g in F} chi_{alpha g}, alpha coprime to |F|.

#include <map>
#include <set>
#include <variant>
#include <vector>

#include "latile/cluster.hpp"
#include "latile/cyclotomic.hpp"

namespace latile {

class RationalTorusPoint {
public:
    RationalTorusPoint() = default;
    // Coordinates are reduced into [0, 1).
    explicit RationalTorusPoint(std::vector<Rational> coords);
    static RationalTorusPoint origin(std::size_t dim) { return RationalTorusPoint(std::vector<Rational>(dim)); }

    std::size_t dim() const { return coords_.size(); }
    const std::vector<Rational>& coords() const { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }

    // this + t v
    RationalTorusPoint along(const Rational& t, const IntVec& v) const;
    // lcm of the coordinate denominators.
    Integer denominator() const;

    friend bool operator==(const RationalTorusPoint& a, const RationalTorusPoint& b) { return a.coords_ == b.coords_; }
    friend bool operator<(const RationalTorusPoint& a, const RationalTorusPoint& b) { return a.coords_ < b.coords_; }

private:
    std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const RationalTorusPoint& p);

// <g, rho> as an exact rational (not reduced mod 1).
Rational pairing(const IntVec& g, const RationalTorusPoint& rho);

// rho lies in ker chi_g iff <g, rho> is an integer.
inline bool in_kernel(const IntVec& g, const RationalTorusPoint& rho) { return is_integral(pairing(g, rho)); }

// Identifies the line through a point along a fixed direction v: two points
// get equal keys iff they lie on a common line rho + R v.
class LineKeyer {
public:
    explicit LineKeyer(const IntVec& v);
    std::vector<Rational> operator()(const RationalTorusPoint& w) const;

private:
    IntMatrix t_inv_;
};

// Whether w lies on the line rho + R v.
bool on_line(const RationalTorusPoint& w, const RationalTorusPoint& rho, const IntVec& v);

// The line rho + R v in the torus.
struct TorusLine {
    RationalTorusPoint rho;
    IntVec v;

    friend bool operator==(const TorusLine& a, const TorusLine& b) { return a.v == b.v && a.rho == b.rho; }
    friend bool operator<(const TorusLine& a, const TorusLine& b) {
        if (!(a.v == b.v)) return a.v < b.v;
        return a.rho < b.rho;
    }
};

// Finite union of rational lines. Each line is stored once, with canonical
// direction and the smallest point of the line among those supplied.
class RationalLineFamily {
public:
    RationalLineFamily() = default;
    RationalLineFamily(std::vector<TorusLine> lines, Integer modulus);

    const std::vector<TorusLine>& lines() const { return lines_; }
    // Modulus n of the kernel grids (1/n)Z^3 the lines pass through.
    const Integer& modulus() const { return modulus_; }
    bool empty() const { return lines_.empty(); }

    // Distinct base points and distinct directions.
    std::vector<RationalTorusPoint> points() const;
    std::vector<IntVec> directions() const;

    bool contains(const RationalTorusPoint& w) const;

private:
    std::vector<TorusLine> lines_;
    Integer modulus_ = 1;
    std::map<IntVec, std::set<std::vector<Rational>>> index_;  // direction -> line keys
};

// Union of the lines; modulus is the lcm.
RationalLineFamily merge_families(const std::vector<RationalLineFamily>& families);

struct DeltaSet {
    std::vector<IntVec> vectors;  // sorted
};

struct LinesDivisible {};

using DichotomyResult = std::variant<LinesDivisible, RationalLineFamily>;

// lcm of the denominators of <g, rho> over g in F.
Integer character_order(const Cluster& f, const RationalTorusPoint& rho);

// Some alpha = r mod d with gcd(alpha, n) = 1 exists.
bool residue_realizable(const Integer& r, const Integer& d, const Integer& n);

// rho in Z: the mask sum vanishes at rho for every alpha coprime to |F|.
// Requires 0 in F.
bool z_membership(const Cluster& f, const RationalTorusPoint& rho);

// Pairwise independent vectors whose kernels cover Z. Requires 0 in F and
// |F| >= 2.
DeltaSet compute_delta(const Cluster& f);

// Lines through the grid (1/n)Z^3 along the common null direction of g and
// h, covering ker chi_g & ker chi_h.
RationalLineFamily kernel_intersection_lines(const IntVec& g, const IntVec& h);

// q(z) = sum_g zeta_D^{alpha c_g} z^{alpha <g, v>}; q(e^{2 pi i t}) is the
// frequency-alpha mask sum at rho + t v.
CycLaurentPoly line_restriction_poly(const Cluster& f, const RationalTorusPoint& rho, const IntVec& v,
                                     const Integer& alpha);

// Whether the whole line rho + R v lies in Z (equivalently infinitely many
// of its points do). Requires 0 in F.
bool line_in_Z(const Cluster& f, const RationalTorusPoint& rho, const IntVec& v);

// Given a line inside Z, whether every plane with normal v meets F in a
// multiple of p points.
bool precursor_conclusion_check(const Cluster& f, const Integer& p, const RationalTorusPoint& rho, const IntVec& v);

// Either every line along h meets F in a multiple of p points, or a finite
// line family covering ker chi_h & Z. Requires |F| a power of p, 0 in F,
// dim 3.
DichotomyResult support_dichotomy(const Cluster& f, const Integer& p, const IntVec& h);

}  // namespace latile
