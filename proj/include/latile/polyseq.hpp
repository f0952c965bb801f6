#pragma once

// Sequences in R/Z with rational values that are polynomial on each residue
// class mod m, acted on by Laurent polynomials in the shift u.

#include <initializer_list>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "latile/integer.hpp"

namespace latile {

// sum_n c_n u^n with (u^n s)_i = s_{i+n}.
class LaurentOperator {
public:
    LaurentOperator() = default;
    // (exponent, coefficient) pairs; repeated exponents add up.
    LaurentOperator(std::initializer_list<std::pair<long, long>> terms);

    static LaurentOperator shift(const Integer& n);
    // u - 1
    static LaurentOperator difference();
    // (u^m - 1)^k
    static LaurentOperator unipotent(const Integer& m, unsigned k);

    const std::map<Integer, Integer>& terms() const { return terms_; }
    void add_term(const Integer& exponent, const Integer& coeff);

    friend LaurentOperator operator*(const LaurentOperator& a, const LaurentOperator& b);
    friend bool operator==(const LaurentOperator& a, const LaurentOperator& b) { return a.terms_ == b.terms_; }

private:
    std::map<Integer, Integer> terms_;  // no zero coefficients
};

// Coefficients a_0..a_d of j -> a_0 + a_1 j + ... + a_d j^d mod 1.
using PolyPiece = std::vector<Rational>;

// Canonical form of a piece: coefficients in [0, 1), trailing zeros removed,
// and two pieces are equal iff they define the same sequence mod 1.
PolyPiece canonical_piece(const PolyPiece& piece);

// Value of the piece at j, in [0, 1).
Rational eval_piece(const PolyPiece& piece, const Integer& j);

class PiecewisePolySeq {
public:
    // s_{c + m j} = pieces[c](j). Pieces are canonicalized.
    PiecewisePolySeq(const Integer& modulus, std::vector<PolyPiece> pieces);

    const Integer& modulus() const { return m_; }
    const std::vector<PolyPiece>& pieces() const { return pieces_; }
    bool is_zero() const;
    // s_i in [0, 1).
    Rational operator[](const Integer& i) const;

    friend bool operator==(const PiecewisePolySeq& a, const PiecewisePolySeq& b) {
        return a.m_ == b.m_ && a.pieces_ == b.pieces_;
    }

private:
    Integer m_;
    std::vector<PolyPiece> pieces_;
};

PiecewisePolySeq act(const LaurentOperator& op, const PiecewisePolySeq& s);

bool is_annihilated(const PiecewisePolySeq& s, const LaurentOperator& op);

// The sequence killed by (u^m - 1)^k with s_0..s_{mk-1} = initial.
PiecewisePolySeq solve_unipotent(const Integer& m, unsigned k, const std::vector<Rational>& initial);

// (lcm m_i, l): the product of the (u^{m_i} - 1) divides (u^m - 1)^l. The
// divisibility is checked by exact polynomial division.
std::pair<Integer, unsigned> reduce_annihilator(const std::vector<Integer>& moduli);

struct Periodic {
    Integer n;
};
// Not produced for rational coefficients.
struct Equidistributed {};

using WeylClass = std::variant<Periodic, Equidistributed>;

// Minimal period of a polynomial sequence with rational coefficients.
WeylClass classify_weyl(const PolyPiece& piece);

}  // namespace latile
