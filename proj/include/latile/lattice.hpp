#pragma once

// Exact integer linear algebra over Z^n: vectors, matrices, Smith and
// Hermite normal forms, sublattices and the unimodular changes of basis
// used to straighten directions and planes.

#include <initializer_list>
#include <ostream>
#include <vector>

#include "latile/integer.hpp"

namespace latile {

class IntVec {
public:
    IntVec() = default;
    explicit IntVec(std::size_t dim) : coords_(dim) {}
    explicit IntVec(std::vector<Integer> coords) : coords_(std::move(coords)) {}
    IntVec(std::initializer_list<long> coords);

    std::size_t dim() const { return coords_.size(); }
    const Integer& operator[](std::size_t i) const { return coords_[i]; }
    Integer& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Integer>& coords() const { return coords_; }

    bool is_zero() const;

    IntVec& operator+=(const IntVec& o);
    IntVec& operator-=(const IntVec& o);
    IntVec& operator*=(const Integer& k);

    friend IntVec operator+(IntVec a, const IntVec& b) { return a += b; }
    friend IntVec operator-(IntVec a, const IntVec& b) { return a -= b; }
    friend IntVec operator-(IntVec a) { return a *= Integer(-1); }
    friend IntVec operator*(const Integer& k, IntVec a) { return a *= k; }

    friend bool operator==(const IntVec& a, const IntVec& b) { return a.coords_ == b.coords_; }
    // Lexicographic; shorter vectors first.
    friend bool operator<(const IntVec& a, const IntVec& b);

private:
    std::vector<Integer> coords_;
};

std::ostream& operator<<(std::ostream& os, const IntVec& v);

IntVec unit_vector(std::size_t dim, std::size_t i);
Integer dot(const IntVec& a, const IntVec& b);
IntVec cross(const IntVec& a, const IntVec& b);
// gcd of the coordinates (0 for the zero vector).
Integer content(const IntVec& v);
// v / content(v), sign preserved.
IntVec primitive_part(const IntVec& v);
// Primitive vector spanning the same line, first nonzero coordinate positive.
IntVec canonical_direction(const IntVec& v);
bool parallel(const IntVec& a, const IntVec& b);

// Throws std::domain_error on the zero vector.
bool is_primitive(const IntVec& v);

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_columns(const std::vector<IntVec>& columns, std::size_t dim);
    static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t dim);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVec column(std::size_t c) const;
    IntVec row(std::size_t r) const;
    std::vector<IntVec> columns() const;
    IntMatrix transpose() const;
    Integer determinant() const;
    bool is_zero() const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row dst += k * row src
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);
    // col dst += k * col src
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntVec operator*(const IntMatrix& a, const IntVec& v);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// Square integer matrix with determinant +1 or -1.
class UnimodularMatrix {
public:
    // Throws std::domain_error if m is not square or |det m| != 1.
    explicit UnimodularMatrix(IntMatrix m);
    static UnimodularMatrix identity(std::size_t n) { return UnimodularMatrix(IntMatrix::identity(n)); }

    std::size_t dim() const { return m_.rows(); }
    const IntMatrix& matrix() const { return m_; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
    UnimodularMatrix inverse() const;

    friend IntVec operator*(const UnimodularMatrix& a, const IntVec& v) { return a.m_ * v; }
    friend UnimodularMatrix operator*(const UnimodularMatrix& a, const UnimodularMatrix& b) {
        return UnimodularMatrix(a.m_ * b.m_);
    }
    friend bool operator==(const UnimodularMatrix& a, const UnimodularMatrix& b) { return a.m_ == b.m_; }

private:
    IntMatrix m_;
};

struct SmithForm {
    UnimodularMatrix U;
    IntMatrix D;
    UnimodularMatrix V;
};

// D = U * M * V with D diagonal, d_i >= 0 and d_i | d_{i+1}.
SmithForm smith_normal_form(const IntMatrix& m);

// Column-style Hermite form of the lattice spanned by the columns of
// `generators`: lower triangular with strictly increasing pivot rows,
// positive pivots, and entries left of a pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& generators);

// Saturated basis (as columns) of {x in Z^cols : m x = 0}.
std::vector<IntVec> integer_kernel(const IntMatrix& m);

class Sublattice {
public:
    Sublattice() = default;
    Sublattice(std::size_t ambient_dim, const std::vector<IntVec>& generators);
    static Sublattice full(std::size_t ambient_dim);
    static Sublattice diagonal(const std::vector<long>& diag);
    // Accepts any generating matrix (columns); result is in Hermite form.
    static Sublattice from_matrix(const IntMatrix& generators);

    std::size_t ambient_dim() const { return dim_; }
    std::size_t rank() const { return basis_.cols(); }
    bool is_full_rank() const { return rank() == dim_; }
    const IntMatrix& basis() const { return basis_; }
    IntVec generator(std::size_t j) const { return basis_.column(j); }

    // Group index in Z^n; requires full rank.
    Integer index() const;
    bool contains(const IntVec& v) const;

    friend bool operator==(const Sublattice& a, const Sublattice& b) {
        return a.dim_ == b.dim_ && a.basis_ == b.basis_;
    }

private:
    std::size_t dim_ = 0;
    IntMatrix basis_;
};

std::ostream& operator<<(std::ostream& os, const Sublattice& l);

// Canonical representative of v + L inside the box spanned by the
// diagonal of L's Hermite form. Requires L full rank.
IntVec reduce_mod_lattice(const IntVec& v, const Sublattice& l);

// Unimodular T with T e_n = a. Requires a primitive.
UnimodularMatrix complete_to_basis(const IntVec& a);

// Unimodular T mapping every vector of L (rank k) into Z^k x {0}.
UnimodularMatrix flatten_subgroup(const Sublattice& l);

// The saturated rank-(n-1) lattice {x : <x, normal> = 0}.
Sublattice orthogonal_lattice(const IntVec& normal);

}  // namespace latile
