#include <doctest.h>

#include <random>

#include "latile/lattice.hpp"

using namespace latile;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long spread) {
    std::uniform_int_distribution<long> d(-spread, spread);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
    return m;
}

bool is_unimodular(const IntMatrix& m) {
    const Integer det = m.determinant();
    return det == 1 || det == -1;
}

}  // namespace

TEST_CASE("integer helpers") {
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_mod(-7, 2) == 1);
    CHECK(floor_mod(7, -3) == 1);
    CHECK(divisors(12) == std::vector<Integer>{1, 2, 3, 4, 6, 12});
    CHECK(prime_divisors(-60) == std::vector<Integer>{2, 3, 5});
    CHECK(radical(72) == 6);
    CHECK(radical(1) == 1);
    CHECK(prime_free_part(72, 2) == 9);
    CHECK(prime_power_exponent(27, 3) == 3);
    CHECK(prime_power_exponent(12, 2) == 0);
    CHECK(frac(Rational(-1, 3)) == Rational(2, 3));
    CHECK(to_long(Integer(-5)) == -5);
    Integer huge;
    huge.set_str("100000000000000000000000", 10);
    CHECK_THROWS_AS(to_long(huge), std::overflow_error);
}

TEST_CASE("primitive vectors") {
    CHECK(is_primitive(IntVec{6, 10, 15}));
    CHECK_FALSE(is_primitive(IntVec{2, 4, 6}));
    CHECK(is_primitive(IntVec{0, 0, 1}));
    CHECK_THROWS_AS(is_primitive(IntVec{0, 0, 0}), std::domain_error);
    CHECK(canonical_direction(IntVec{0, -2, 4}) == IntVec{0, 1, -2});
}

TEST_CASE("complete_to_basis examples") {
    CHECK(complete_to_basis(IntVec{0, 0, 1}).matrix() == IntMatrix::identity(3));
    for (const IntVec& a : {IntVec{2, 3}, IntVec{6, 10, 15}}) {
        const UnimodularMatrix t = complete_to_basis(a);
        CHECK(t.matrix().column(a.dim() - 1) == a);
        CHECK(is_unimodular(t.matrix()));
    }
    CHECK_THROWS_AS(complete_to_basis(IntVec{2, 4, 6}), std::domain_error);
}

TEST_CASE("complete_to_basis on every primitive vector with entries up to 10") {
    long checked = 0;
    for (long x = -10; x <= 10; ++x)
        for (long y = -10; y <= 10; ++y)
            for (long z = -10; z <= 10; ++z) {
                const IntVec a{x, y, z};
                if (a.is_zero() || !is_primitive(a)) continue;
                const UnimodularMatrix t = complete_to_basis(a);
                REQUIRE(t.matrix().column(2) == a);
                REQUIRE(is_unimodular(t.matrix()));
                ++checked;
            }
    CHECK(checked > 7000);
}

TEST_CASE("flatten_subgroup") {
    CHECK(flatten_subgroup(Sublattice(3, {IntVec{2, 0, 0}, IntVec{0, 3, 0}})).matrix() == IntMatrix::identity(3));

    const Sublattice line(3, {IntVec{0, 0, 5}});
    const UnimodularMatrix t = flatten_subgroup(line);
    const IntVec image = t * IntVec{0, 0, 5};
    CHECK(image[1] == 0);
    CHECK(image[2] == 0);
    // a coordinate permutation up to sign
    for (std::size_t r = 0; r < 3; ++r) {
        int nonzero = 0;
        for (std::size_t c = 0; c < 3; ++c) nonzero += t(r, c) != 0;
        CHECK(nonzero == 1);
    }

    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t k = 1 + trial % 2;
        const IntMatrix g = random_matrix(rng, 3, k, 6);
        const Sublattice l = Sublattice::from_matrix(g);
        if (l.rank() != k) continue;
        const UnimodularMatrix u = flatten_subgroup(l);
        REQUIRE(is_unimodular(u.matrix()));
        for (std::size_t j = 0; j < k; ++j) {
            const IntVec w = u * g.column(j);
            for (std::size_t i = k; i < 3; ++i) REQUIRE(w[i] == 0);
        }
    }
    const Sublattice mixed(3, {IntVec{1, 1, 1}, IntVec{0, 2, 0}});
    const UnimodularMatrix m = flatten_subgroup(mixed);
    CHECK(is_unimodular(m.matrix()));
    CHECK((m * IntVec{1, 1, 1})[2] == 0);
    CHECK((m * IntVec{0, 2, 0})[2] == 0);
}

TEST_CASE("smith normal form") {
    const SmithForm id = smith_normal_form(IntMatrix::identity(3));
    CHECK(id.D == IntMatrix::identity(3));

    const SmithForm s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
    CHECK(s.D == IntMatrix{{1, 0}, {0, 6}});
    CHECK(s.U.matrix() * IntMatrix{{2, 0}, {0, 3}} * s.V.matrix() == s.D);

    CHECK(smith_normal_form(IntMatrix{{1, 0}, {0, 0}}).D == IntMatrix{{1, 0}, {0, 0}});

    std::mt19937 rng(5);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t rows = 1 + trial % 3, cols = 1 + (trial / 3) % 3;
        const IntMatrix m = random_matrix(rng, rows, cols, 9);
        const SmithForm f = smith_normal_form(m);
        REQUIRE(f.U.matrix() * m * f.V.matrix() == f.D);
        const std::size_t n = std::min(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (i != j) REQUIRE(f.D(i, j) == 0);
        for (std::size_t i = 0; i < n; ++i) REQUIRE(f.D(i, i) >= 0);
        for (std::size_t i = 0; i + 1 < n; ++i) REQUIRE(divides(f.D(i, i), f.D(i + 1, i + 1)));
        if (rows == cols) {
            Integer prod = 1;
            for (std::size_t i = 0; i < n; ++i) prod *= f.D(i, i);
            REQUIRE(prod == abs(m.determinant()));
        }
    }
}

TEST_CASE("hermite form is canonical") {
    const Sublattice a(3, {IntVec{2, 0, 0}, IntVec{1, 3, 0}, IntVec{0, 0, 2}});
    const Sublattice b(3, {IntVec{3, 3, 0}, IntVec{1, 3, 0}, IntVec{1, 3, 2}, IntVec{4, 6, 2}});
    CHECK(a == b);
    CHECK(a.index() == 12);
    const IntMatrix& h = a.basis();
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = r + 1; c < 3; ++c) CHECK(h(r, c) == 0);

    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const IntMatrix g = random_matrix(rng, 3, 3, 5);
        if (g.determinant() == 0) continue;
        const IntMatrix u = random_matrix(rng, 3, 3, 2);
        if (!is_unimodular(u)) continue;
        REQUIRE(Sublattice::from_matrix(g) == Sublattice::from_matrix(g * u));
    }
}

TEST_CASE("reduce_mod_lattice") {
    CHECK(reduce_mod_lattice(IntVec{5, 0, 0}, Sublattice::diagonal({2, 1, 1})) == IntVec{1, 0, 0});
    CHECK(reduce_mod_lattice(IntVec{0, 0, 0}, Sublattice::diagonal({3, 5, 7})) == IntVec{0, 0, 0});

    const Sublattice l(3, {IntVec{2, 0, 0}, IntVec{1, 3, 0}, IntVec{0, 0, 2}});
    const IntVec v{3, 4, 5};
    const IntVec r = reduce_mod_lattice(v, l);
    CHECK(l.contains(v - r));
    CHECK(reduce_mod_lattice(r, l) == r);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(r[i] >= 0);
        CHECK(r[i] < l.basis()(i, i));
    }

    std::mt19937 rng(9);
    std::uniform_int_distribution<long> coef(-7, 7);
    for (int trial = 0; trial < 300; ++trial) {
        const IntVec x{coef(rng), coef(rng), coef(rng)};
        IntVec w(3);
        for (std::size_t j = 0; j < 3; ++j) w += Integer(coef(rng)) * l.generator(j);
        REQUIRE(reduce_mod_lattice(x + w, l) == reduce_mod_lattice(x, l));
    }
}

TEST_CASE("kernels and orthogonal lattices") {
    const auto k = integer_kernel(IntMatrix{{1, 1, 1}});
    CHECK(k.size() == 2);
    for (const auto& v : k) CHECK(dot(v, IntVec{1, 1, 1}) == 0);
    const Sublattice o = orthogonal_lattice(IntVec{2, 4, 6});
    CHECK(o.rank() == 2);
    CHECK(o.contains(IntVec{1, 1, -1}));
    CHECK(o.contains(IntVec{2, -1, 0}));
    CHECK_FALSE(o.contains(IntVec{1, 0, 0}));
    CHECK_THROWS_AS(UnimodularMatrix(IntMatrix{{2, 0}, {0, 1}}), std::domain_error);
    const UnimodularMatrix u(IntMatrix{{2, 1}, {1, 1}});
    CHECK(u * u.inverse() == UnimodularMatrix::identity(2));
}
