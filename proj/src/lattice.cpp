#include "latile/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace latile {

IntVec::IntVec(std::initializer_list<long> coords) {
    coords_.reserve(coords.size());
    for (long c : coords) coords_.emplace_back(c);
}

bool IntVec::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

IntVec& IntVec::operator+=(const IntVec& o) {
    if (o.dim() != dim()) throw std::domain_error("IntVec: dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

IntVec& IntVec::operator-=(const IntVec& o) {
    if (o.dim() != dim()) throw std::domain_error("IntVec: dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

IntVec& IntVec::operator*=(const Integer& k) {
    for (auto& c : coords_) c *= k;
    return *this;
}

bool operator<(const IntVec& a, const IntVec& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        int c = cmp(a.coords_[i], b.coords_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::ostream& operator<<(std::ostream& os, const IntVec& v) {
    os << '(';
    for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i];
    return os << ')';
}

IntVec unit_vector(std::size_t dim, std::size_t i) {
    IntVec e(dim);
    e[i] = 1;
    return e;
}

Integer dot(const IntVec& a, const IntVec& b) {
    if (a.dim() != b.dim()) throw std::domain_error("dot: dimension mismatch");
    Integer s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

IntVec cross(const IntVec& a, const IntVec& b) {
    if (a.dim() != 3 || b.dim() != 3) throw std::domain_error("cross: requires dimension 3");
    return IntVec(std::vector<Integer>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]});
}

Integer content(const IntVec& v) {
    Integer g = 0;
    for (const auto& c : v.coords()) g = gcd_of(g, c);
    return g;
}

IntVec primitive_part(const IntVec& v) {
    Integer g = content(v);
    if (g == 0) throw std::domain_error("primitive_part: zero vector");
    IntVec out = v;
    for (std::size_t i = 0; i < out.dim(); ++i) out[i] /= g;
    return out;
}

IntVec canonical_direction(const IntVec& v) {
    IntVec out = primitive_part(v);
    for (std::size_t i = 0; i < out.dim(); ++i) {
        if (out[i] != 0) {
            if (out[i] < 0) out *= Integer(-1);
            break;
        }
    }
    return out;
}

bool parallel(const IntVec& a, const IntVec& b) {
    if (a.dim() != b.dim()) throw std::domain_error("parallel: dimension mismatch");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

bool is_primitive(const IntVec& v) {
    if (v.is_zero()) throw std::domain_error("is_primitive: zero vector");
    return content(v) == 1;
}

// ---------------------------------------------------------------------------

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::domain_error("IntMatrix: ragged initializer");
        for (long x : r) data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& columns, std::size_t dim) {
    IntMatrix m(dim, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].dim() != dim) throw std::domain_error("from_columns: dimension mismatch");
        for (std::size_t r = 0; r < dim; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t dim) {
    return from_columns(rows, dim).transpose();
}

IntVec IntMatrix::column(std::size_t c) const {
    IntVec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

IntVec IntMatrix::row(std::size_t r) const {
    IntVec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
    return v;
}

std::vector<IntVec> IntMatrix::columns() const {
    std::vector<IntVec> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

// Bareiss fraction-free elimination.
Integer IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::domain_error("determinant: matrix not square");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            a.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::domain_error("matrix product: shape mismatch");
    IntMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
        }
    return p;
}

IntVec operator*(const IntMatrix& a, const IntVec& v) {
    if (a.cols_ != v.dim()) throw std::domain_error("matrix-vector product: shape mismatch");
    IntVec out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) os << (r ? "," : "") << m.row(r);
    return os << ']';
}

// ---------------------------------------------------------------------------

UnimodularMatrix::UnimodularMatrix(IntMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw std::domain_error("UnimodularMatrix: not square");
    if (abs(m_.determinant()) != 1) throw std::domain_error("UnimodularMatrix: determinant is not +-1");
}

UnimodularMatrix UnimodularMatrix::inverse() const {
    const std::size_t n = dim();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m_(i, j));
        a[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (a[piv][col] == 0) ++piv;
        std::swap(a[piv], a[col]);
        Rational inv = 1 / a[col][col];
        for (auto& x : a[col]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a[i][n + j].canonicalize();
            out(i, j) = a[i][n + j].get_num();
        }
    return UnimodularMatrix(std::move(out));
}

// ---------------------------------------------------------------------------

SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);

    auto row_op = [&](std::size_t dst, std::size_t src, const Integer& k) {
        a.add_row_multiple(dst, src, k);
        u.add_row_multiple(dst, src, k);
    };
    auto col_op = [&](std::size_t dst, std::size_t src, const Integer& k) {
        a.add_col_multiple(dst, src, k);
        v.add_col_multiple(dst, src, k);
    };

    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a(i, j) != 0 && (pr == rows || abs(a(i, j)) < abs(a(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows) break;
            a.swap_rows(t, pr);
            u.swap_rows(t, pr);
            a.swap_cols(t, pc);
            v.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                Integer q = a(i, t) / a(t, t);
                row_op(i, t, -q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                Integer q = a(t, j) / a(t, t);
                col_op(j, t, -q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!divides(a(t, t), a(i, j))) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            row_op(t, bad, Integer(1));
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    return SmithForm{UnimodularMatrix(std::move(u)), std::move(a), UnimodularMatrix(std::move(v))};
}

IntMatrix hermite_normal_form(const IntMatrix& generators) {
    IntMatrix a = generators;
    const std::size_t n = a.rows(), m = a.cols();
    std::size_t k = 0;
    for (std::size_t i = 0; i < n && k < m; ++i) {
        for (;;) {
            std::size_t best = m;
            for (std::size_t j = k; j < m; ++j)
                if (a(i, j) != 0 && (best == m || abs(a(i, j)) < abs(a(i, best)))) best = j;
            if (best == m) break;
            a.swap_cols(k, best);
            bool done = true;
            for (std::size_t j = k + 1; j < m; ++j) {
                if (a(i, j) == 0) continue;
                a.add_col_multiple(j, k, -(a(i, j) / a(i, k)));
                if (a(i, j) != 0) done = false;
            }
            if (done) break;
        }
        if (a(i, k) == 0) continue;
        if (a(i, k) < 0) a.negate_col(k);
        for (std::size_t j = 0; j < k; ++j) a.add_col_multiple(j, k, -floor_div(a(i, j), a(i, k)));
        ++k;
    }
    IntMatrix h(n, k);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < k; ++c) h(r, c) = a(r, c);
    return h;
}

std::vector<IntVec> integer_kernel(const IntMatrix& m) {
    SmithForm s = smith_normal_form(m);
    std::size_t rank = 0;
    while (rank < std::min(m.rows(), m.cols()) && s.D(rank, rank) != 0) ++rank;
    std::vector<IntVec> out;
    for (std::size_t c = rank; c < m.cols(); ++c) out.push_back(s.V.matrix().column(c));
    return out;
}

// ---------------------------------------------------------------------------

Sublattice::Sublattice(std::size_t ambient_dim, const std::vector<IntVec>& generators) : dim_(ambient_dim) {
    basis_ = hermite_normal_form(IntMatrix::from_columns(generators, ambient_dim));
}

Sublattice Sublattice::full(std::size_t ambient_dim) {
    return from_matrix(IntMatrix::identity(ambient_dim));
}

Sublattice Sublattice::diagonal(const std::vector<long>& diag) {
    IntMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return from_matrix(m);
}

Sublattice Sublattice::from_matrix(const IntMatrix& generators) {
    Sublattice l;
    l.dim_ = generators.rows();
    l.basis_ = hermite_normal_form(generators);
    return l;
}

Integer Sublattice::index() const {
    if (!is_full_rank()) throw std::domain_error("Sublattice::index: lattice is not full rank");
    Integer idx = 1;
    for (std::size_t i = 0; i < dim_; ++i) idx *= basis_(i, i);
    return idx;
}

bool Sublattice::contains(const IntVec& v) const {
    if (v.dim() != dim_) throw std::domain_error("Sublattice::contains: dimension mismatch");
    IntVec w = v;
    std::size_t row = 0;
    for (std::size_t j = 0; j < rank(); ++j) {
        while (basis_(row, j) == 0) {
            if (w[row] != 0) return false;
            ++row;
        }
        if (!divides(basis_(row, j), w[row])) return false;
        Integer q = w[row] / basis_(row, j);
        for (std::size_t r = row; r < dim_; ++r) w[r] -= q * basis_(r, j);
        ++row;
    }
    return w.is_zero();
}

std::ostream& operator<<(std::ostream& os, const Sublattice& l) {
    os << "span{";
    for (std::size_t j = 0; j < l.rank(); ++j) os << (j ? "," : "") << l.generator(j);
    return os << '}';
}

IntVec reduce_mod_lattice(const IntVec& v, const Sublattice& l) {
    if (!l.is_full_rank()) throw std::domain_error("reduce_mod_lattice: lattice is not full rank");
    if (v.dim() != l.ambient_dim()) throw std::domain_error("reduce_mod_lattice: dimension mismatch");
    IntVec w = v;
    const IntMatrix& h = l.basis();
    for (std::size_t j = 0; j < l.ambient_dim(); ++j) {
        Integer q = floor_div(w[j], h(j, j));
        if (q == 0) continue;
        for (std::size_t r = j; r < l.ambient_dim(); ++r) w[r] -= q * h(r, j);
    }
    return w;
}

UnimodularMatrix complete_to_basis(const IntVec& a) {
    if (!is_primitive(a)) throw std::domain_error("complete_to_basis: vector is not primitive");
    const std::size_t n = a.dim();
    if (a == unit_vector(n, n - 1)) return UnimodularMatrix::identity(n);

    // U a V = e_1 (a primitive), so a = V(0,0) * U^{-1} e_1.
    SmithForm s = smith_normal_form(IntMatrix::from_columns({a}, n));
    IntMatrix w = s.U.inverse().matrix();
    const Integer sign = s.V(0, 0);
    IntMatrix t(n, n);
    for (std::size_t c = 1; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) t(r, c - 1) = w(r, c);
    for (std::size_t r = 0; r < n; ++r) t(r, n - 1) = sign * w(r, 0);
    return UnimodularMatrix(std::move(t));
}

UnimodularMatrix flatten_subgroup(const Sublattice& l) {
    const std::size_t k = l.rank(), n = l.ambient_dim();
    if (k == 0) throw std::domain_error("flatten_subgroup: rank-0 subgroup");
    bool flat = true;
    for (std::size_t r = k; r < n && flat; ++r)
        for (std::size_t c = 0; c < k; ++c)
            if (l.basis()(r, c) != 0) {
                flat = false;
                break;
            }
    if (flat) return UnimodularMatrix::identity(n);
    // U B V = D has zero rows below k, hence so does U B.
    return smith_normal_form(l.basis()).U;
}

Sublattice orthogonal_lattice(const IntVec& normal) {
    if (normal.is_zero()) throw std::domain_error("orthogonal_lattice: zero normal");
    return Sublattice(normal.dim(), integer_kernel(IntMatrix::from_rows({normal}, normal.dim())));
}

}  // namespace latile
