#include <doctest.h>

#include <random>
#include <stdexcept>

#include "milrec/errors.hpp"
#include "milrec/matrix.hpp"
#include "milrec/subspace.hpp"

using namespace milrec;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m.at(i, j) = Rational(static_cast<long>(rng() % 9) - 4);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("rref of identity is identity") {
    auto r = rref(Matrix::identity(3));
    CHECK(r.reduced == Matrix::identity(3));
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});
    CHECK(r.rank() == 3);
}

TEST_CASE("rref collapses dependent rows") {
    Matrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    auto r = rref(m);
    Matrix expected(2, 2);
    expected.at(0, 0) = 1;
    expected.at(0, 1) = 2;
    CHECK(r.reduced == expected);
    CHECK(r.rank() == 1);
}

TEST_CASE("rref is idempotent") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix m = random_matrix(1 + rng() % 5, 1 + rng() % 5, rng);
        auto once = rref(m);
        auto twice = rref(once.reduced);
        CHECK(once.reduced == twice.reduced);
        CHECK(once.pivots == twice.pivots);
    }
}

TEST_CASE("rank plus kernel dimension equals column count") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix m = random_matrix(1 + rng() % 5, 1 + rng() % 5, rng);
        CHECK(rank(m) + kernel_basis(m).dim() == m.cols());
    }
}

TEST_CASE("solve returns exact solutions") {
    Vec b{Rational(3), Rational(-1, 2), Rational(7)};
    auto x = solve(Matrix::identity(3), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    Matrix inconsistent(1, 1);
    CHECK(!solve(inconsistent, Vec{Rational(1)}).has_value());

    // Underdetermined system: free variables are pinned to zero.
    Matrix wide(1, 2);
    wide.at(0, 0) = 1;
    wide.at(0, 1) = 1;
    auto y = solve(wide, Vec{Rational(5)});
    REQUIRE(y.has_value());
    CHECK(*y == Vec{Rational(5), Rational(0)});
}

TEST_CASE("solve verifies on random systems") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t rows = 1 + rng() % 4;
        std::size_t cols = 1 + rng() % 4;
        Matrix m = random_matrix(rows, cols, rng);
        Vec x0(cols);
        for (auto& e : x0) e = Rational(static_cast<long>(rng() % 7) - 3);
        Vec b = m * x0;
        auto x = solve(m, b);
        REQUIRE(x.has_value());
        CHECK(m * *x == b);
    }
}

TEST_CASE("kernel_basis") {
    CHECK(kernel_basis(Matrix::identity(4)).dim() == 0);

    Matrix row(1, 2);
    row.at(0, 0) = 1;
    row.at(0, 1) = 1;
    Subspace k = kernel_basis(row);
    CHECK(k.dim() == 1);
    CHECK(k.contains(Vec{Rational(1), Rational(-1)}));
}

TEST_CASE("determinant") {
    Matrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 3;
    m.at(1, 1) = 4;
    CHECK(determinant(m) == Rational(-2));
    CHECK(determinant(Matrix::identity(5)) == Rational(1));

    Matrix singular(2, 2);
    singular.at(0, 0) = 1;
    singular.at(0, 1) = 2;
    singular.at(1, 0) = 2;
    singular.at(1, 1) = 4;
    CHECK(determinant(singular) == Rational(0));

    // Row swaps flip the sign.
    Matrix swapped(2, 2);
    swapped.at(0, 1) = 1;
    swapped.at(1, 0) = 1;
    CHECK(determinant(swapped) == Rational(-1));
}

TEST_CASE("trace") {
    Matrix m(2, 2);
    m.at(0, 0) = Rational(1, 2);
    m.at(1, 1) = Rational(1, 3);
    CHECK(trace(m) == Rational(5, 6));
}

TEST_CASE("nilpotency_check") {
    CHECK(nilpotency_check(Matrix(3, 3)));
    CHECK(!nilpotency_check(Matrix::identity(3)));

    Matrix shift(3, 3);
    shift.at(0, 1) = 1;
    shift.at(1, 2) = 1;
    CHECK(nilpotency_check(shift));

    // Invertible plus nilpotent part: rank never reaches zero.
    Matrix mixed(2, 2);
    mixed.at(0, 0) = 1;
    mixed.at(0, 1) = 1;
    CHECK(!nilpotency_check(mixed));
}

TEST_CASE("subspace equality is representation independent") {
    std::vector<Vec> gen1{{Rational(1), Rational(1), Rational(0)},
                          {Rational(0), Rational(1), Rational(1)}};
    std::vector<Vec> gen2{{Rational(1), Rational(2), Rational(1)},
                          {Rational(2), Rational(1), Rational(-1)}};
    // gen2 rows are gen1[0]+gen1[1] and 2*gen1[0]-gen1[1].
    CHECK(Subspace::span(3, gen1) == Subspace::span(3, gen2));
    CHECK(Subspace::span(3, gen1) != Subspace::full(3));
}

TEST_CASE("subspace reduce and contains") {
    Subspace s = Subspace::span(3, {{Rational(1), Rational(0), Rational(1)}});
    CHECK(s.contains(Vec{Rational(2), Rational(0), Rational(2)}));
    CHECK(!s.contains(Vec{Rational(1), Rational(1), Rational(0)}));
    CHECK(is_zero_vec(s.reduce(Vec{Rational(-3), Rational(0), Rational(-3)})));
    CHECK(Subspace::full(3).contains(s));
    CHECK(s.contains(Subspace::zero(3)));
}

TEST_CASE("subspace intersection") {
    Subspace a = Subspace::span(3, {{Rational(1), Rational(0), Rational(0)},
                                    {Rational(0), Rational(1), Rational(0)}});
    Subspace b = Subspace::span(3, {{Rational(0), Rational(1), Rational(0)},
                                    {Rational(0), Rational(0), Rational(1)}});
    Subspace expected = Subspace::span(3, {{Rational(0), Rational(1), Rational(0)}});
    CHECK(a.intersect(b) == expected);
    CHECK(a.intersect(Subspace::full(3)) == a);
    CHECK(a.intersect(Subspace::zero(3)) == Subspace::zero(3));
}

TEST_CASE("complement_basis greedy scan") {
    Subspace outer = Subspace::span(3, {{Rational(1), Rational(0), Rational(0)},
                                        {Rational(0), Rational(1), Rational(0)},
                                        {Rational(0), Rational(0), Rational(1)}});
    Subspace inner = Subspace::span(3, {{Rational(0), Rational(0), Rational(1)}});
    auto comp = complement_basis(inner, outer);
    REQUIRE(comp.size() == 2);
    CHECK(comp[0] == Vec{Rational(1), Rational(0), Rational(0)});
    CHECK(comp[1] == Vec{Rational(0), Rational(1), Rational(0)});

    CHECK(complement_basis(outer, outer).empty());

    Subspace one = Subspace::span(3, {{Rational(0), Rational(0), Rational(1)}});
    auto single = complement_basis(Subspace::zero(3), one);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == Vec{Rational(0), Rational(0), Rational(1)});

    CHECK_THROWS_AS(complement_basis(Subspace::full(3), one), std::invalid_argument);
}

TEST_CASE("project_coords splits a direct sum") {
    std::vector<Vec> s_basis{{Rational(1), Rational(0), Rational(0)},
                             {Rational(0), Rational(1), Rational(0)}};
    Subspace kernel = Subspace::span(3, {{Rational(0), Rational(0), Rational(1)}});

    Vec x{Rational(2), Rational(-3), Rational(7)};
    CHECK(project_coords(x, s_basis, kernel) == Vec{Rational(2), Rational(-3)});

    Vec in_kernel{Rational(0), Rational(0), Rational(5)};
    CHECK(project_coords(in_kernel, s_basis, kernel) == Vec{Rational(0), Rational(0)});

    // Not a direct sum: s_basis overlaps the kernel.
    std::vector<Vec> overlapping{{Rational(0), Rational(0), Rational(1)}};
    CHECK_THROWS_AS(project_coords(x, overlapping, kernel), std::invalid_argument);

    // x outside the sum.
    std::vector<Vec> small{{Rational(1), Rational(0), Rational(0)}};
    Subspace zero = Subspace::zero(3);
    CHECK_THROWS_AS(project_coords(x, small, zero), RejectError);
    try {
        project_coords(x, small, zero);
    } catch (const RejectError& e) {
        CHECK(e.reason() == Reject::NotInSpan);
    }
}
