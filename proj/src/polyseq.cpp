#include "latile/polyseq.hpp"

#include <stdexcept>

namespace latile {

LaurentOperator::LaurentOperator(std::initializer_list<std::pair<long, long>> terms) {
    for (const auto& [e, c] : terms) add_term(Integer(e), Integer(c));
}

LaurentOperator LaurentOperator::shift(const Integer& n) {
    LaurentOperator op;
    op.add_term(n, 1);
    return op;
}

LaurentOperator LaurentOperator::difference() { return LaurentOperator{{1, 1}, {0, -1}}; }

LaurentOperator LaurentOperator::unipotent(const Integer& m, unsigned k) {
    LaurentOperator base;
    base.add_term(m, 1);
    base.add_term(0, -1);
    LaurentOperator out = shift(0);
    for (unsigned i = 0; i < k; ++i) out = out * base;
    return out;
}

void LaurentOperator::add_term(const Integer& exponent, const Integer& coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = terms_.try_emplace(exponent, coeff);
    if (fresh) return;
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

LaurentOperator operator*(const LaurentOperator& a, const LaurentOperator& b) {
    LaurentOperator out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

namespace {

Rational exact_eval(const PolyPiece& piece, const Integer& j) {
    Rational acc = 0;
    for (std::size_t k = piece.size(); k-- > 0;) acc = acc * Rational(j) + piece[k];
    acc.canonicalize();
    return acc;
}

// Monomial coefficients of sum_i b_i C(j, i).
PolyPiece from_newton(const std::vector<Rational>& b) {
    PolyPiece out(b.size());
    PolyPiece falling{Rational(1)};  // j (j-1) ... (j-i+1) / i!
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t r = 0; r < falling.size(); ++r) out[r] += b[i] * falling[r];
        PolyPiece next(falling.size() + 1);
        const Rational shift(static_cast<long>(i));
        const Rational scale(1, static_cast<long>(i + 1));
        for (std::size_t r = 0; r < falling.size(); ++r) {
            next[r + 1] += falling[r] * scale;
            next[r] -= falling[r] * shift * scale;
        }
        falling = std::move(next);
    }
    for (auto& c : out) c.canonicalize();
    return out;
}

// Forward differences at 0 of the given values.
std::vector<Rational> newton_coefficients(std::vector<Rational> values) {
    std::vector<Rational> b;
    b.reserve(values.size());
    while (!values.empty()) {
        b.push_back(values.front());
        for (std::size_t i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
        values.pop_back();
    }
    return b;
}

PolyPiece canonical_from_newton(std::vector<Rational> b) {
    for (auto& c : b) c = frac(c);
    PolyPiece out = from_newton(b);
    for (auto& c : out) c = frac(c);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// piece(j + q)
PolyPiece taylor_shift(const PolyPiece& piece, const Integer& q) {
    PolyPiece out(piece.size());
    for (std::size_t k = 0; k < piece.size(); ++k) {
        Integer binom = 1, power = 1;
        // C(k, r) q^(k-r) for r = k, k-1, ..., 0
        for (std::size_t r = k + 1; r-- > 0;) {
            out[r] += piece[k] * Rational(binom * power);
            binom = binom * Integer(static_cast<unsigned long>(r)) / Integer(static_cast<unsigned long>(k - r + 1));
            power *= q;
        }
    }
    for (auto& c : out) c.canonicalize();
    return out;
}

}  // namespace

PolyPiece canonical_piece(const PolyPiece& piece) {
    if (piece.empty()) return {};
    std::vector<Rational> values;
    for (std::size_t j = 0; j < piece.size(); ++j) values.push_back(exact_eval(piece, Integer(static_cast<unsigned long>(j))));
    return canonical_from_newton(newton_coefficients(std::move(values)));
}

Rational eval_piece(const PolyPiece& piece, const Integer& j) { return frac(exact_eval(piece, j)); }

PiecewisePolySeq::PiecewisePolySeq(const Integer& modulus, std::vector<PolyPiece> pieces)
    : m_(modulus), pieces_(std::move(pieces)) {
    if (m_ < 1) throw std::domain_error("PiecewisePolySeq: modulus must be positive");
    if (Integer(static_cast<unsigned long>(pieces_.size())) != m_)
        throw std::domain_error("PiecewisePolySeq: need one piece per residue class");
    for (auto& p : pieces_) p = canonical_piece(p);
}

bool PiecewisePolySeq::is_zero() const {
    for (const auto& p : pieces_)
        if (!p.empty()) return false;
    return true;
}

Rational PiecewisePolySeq::operator[](const Integer& i) const {
    const Integer c = floor_mod(i, m_);
    return eval_piece(pieces_[c.get_ui()], (i - c) / m_);
}

PiecewisePolySeq act(const LaurentOperator& op, const PiecewisePolySeq& s) {
    const Integer& m = s.modulus();
    std::vector<PolyPiece> out(s.pieces().size());
    for (const auto& [n, coeff] : op.terms())
        for (std::size_t c = 0; c < out.size(); ++c) {
            const Integer shifted = Integer(static_cast<unsigned long>(c)) + n;
            const Integer target = floor_mod(shifted, m);
            const PolyPiece moved = taylor_shift(s.pieces()[target.get_ui()], floor_div(shifted, m));
            if (out[c].size() < moved.size()) out[c].resize(moved.size());
            for (std::size_t k = 0; k < moved.size(); ++k) out[c][k] += Rational(coeff) * moved[k];
        }
    return PiecewisePolySeq(m, std::move(out));
}

bool is_annihilated(const PiecewisePolySeq& s, const LaurentOperator& op) { return act(op, s).is_zero(); }

PiecewisePolySeq solve_unipotent(const Integer& m, unsigned k, const std::vector<Rational>& initial) {
    if (m < 1 || k < 1) throw std::domain_error("solve_unipotent: m and k must be positive");
    const std::size_t mm = to_long(m);
    if (initial.size() != mm * k) throw std::domain_error("solve_unipotent: need exactly m*k initial values");
    std::vector<PolyPiece> pieces(mm);
    for (std::size_t c = 0; c < mm; ++c) {
        std::vector<Rational> values;
        for (std::size_t j = 0; j < k; ++j) values.push_back(initial[c + mm * j]);
        pieces[c] = from_newton(newton_coefficients(std::move(values)));
    }
    return PiecewisePolySeq(m, std::move(pieces));
}

namespace {

using IntPoly = std::vector<Integer>;  // lowest degree first

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
    IntPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

IntPoly cyclic_minus_one(const Integer& m) {
    IntPoly p(m.get_ui() + 1);
    p.front() = -1;
    p.back() = 1;
    return p;
}

// Remainder of a modulo the monic b.
IntPoly remainder(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    for (std::size_t i = a.size(); i-- > db;) {
        const Integer c = a[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    a.resize(std::min(a.size(), db));
    return a;
}

}  // namespace

std::pair<Integer, unsigned> reduce_annihilator(const std::vector<Integer>& moduli) {
    Integer m = 1;
    for (const auto& mi : moduli) {
        if (mi < 1) throw std::domain_error("reduce_annihilator: moduli must be positive");
        m = lcm_of(m, mi);
    }
    const unsigned k = static_cast<unsigned>(moduli.size());
    IntPoly product{Integer(1)}, target{Integer(1)};
    for (const auto& mi : moduli) product = multiply(product, cyclic_minus_one(mi));
    for (unsigned i = 0; i < k; ++i) target = multiply(target, cyclic_minus_one(m));
    for (const auto& c : remainder(target, product))
        if (c != 0) throw std::logic_error("reduce_annihilator: divisibility contract violated");
    return {m, k};
}

WeylClass classify_weyl(const PolyPiece& piece) {
    const PolyPiece p = canonical_piece(piece);
    Integer l = 1;
    for (std::size_t k = 1; k < p.size(); ++k) l = lcm_of(l, p[k].get_den());
    for (const auto& n : divisors(l)) {
        PolyPiece diff = taylor_shift(p, n);
        for (std::size_t k = 0; k < p.size(); ++k) diff[k] -= p[k];
        if (canonical_piece(diff).empty()) return Periodic{n};
    }
    throw std::logic_error("classify_weyl: no period divides the coefficient denominator lcm");
}

}  // namespace latile
