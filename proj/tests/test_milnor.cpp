#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "milrec/errors.hpp"
#include "milrec/milnor.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace milrec;

namespace {

Polynomial zpow(std::size_t n, std::size_t var, unsigned e) {
    std::vector<unsigned> exps(n, 0);
    exps[var] = e;
    return Polynomial::term(Monomial(exps), Rational(1));
}

Polynomial fermat(std::size_t n, unsigned d) {
    Polynomial q(n);
    for (std::size_t i = 0; i < n; ++i) q += zpow(n, i, d);
    return q;
}

}  // namespace

TEST_CASE("hesse_cubic") {
    Polynomial q = hesse_cubic(Rational(6));
    CHECK(q.coeff(Monomial({3, 0, 0})) == Rational(1));
    CHECK(q.coeff(Monomial({1, 1, 1})) == Rational(6));
    CHECK(q.is_homogeneous());
    CHECK(hesse_cubic(Rational(0)) == fermat(3, 3));
}

TEST_CASE("gradient_map") {
    PolyMap g6 = gradient_map(hesse_cubic(Rational(6)));
    REQUIRE(g6.components.size() == 3);
    Polynomial expected0(3);
    expected0.add_term(Monomial({2, 0, 0}), Rational(3));
    expected0.add_term(Monomial({0, 1, 1}), Rational(6));
    CHECK(g6.components[0] == expected0);

    PolyMap g = gradient_map(fermat(2, 3));
    CHECK(g.components[0] == Rational(3) * zpow(2, 0, 2));
    CHECK(g.components[1] == Rational(3) * zpow(2, 1, 2));

    // Degenerate but well-defined gradient.
    Polynomial degen(2);
    degen.add_term(Monomial({2, 1}), Rational(1));
    degen.add_term(Monomial({1, 2}), Rational(1));
    PolyMap gd = gradient_map(degen);
    Polynomial d0(2), d1(2);
    d0.add_term(Monomial({1, 1}), Rational(2));
    d0.add_term(Monomial({0, 2}), Rational(1));
    d1.add_term(Monomial({2, 0}), Rational(1));
    d1.add_term(Monomial({1, 1}), Rational(2));
    CHECK(gd.components[0] == d0);
    CHECK(gd.components[1] == d1);

    Polynomial inhomogeneous = zpow(2, 0, 3) + zpow(2, 0, 2);
    CHECK_THROWS_AS(gradient_map(inhomogeneous), RejectError);
}

TEST_CASE("graded_ideal_piece") {
    PolyMap squares{2, {zpow(2, 0, 2), zpow(2, 1, 2)}};
    CHECK(graded_ideal_piece(squares, 3) == Subspace::full(4));
    CHECK(graded_ideal_piece(squares, 1) == Subspace::zero(2));

    PolyMap g = gradient_map(fermat(3, 3));
    Subspace piece = graded_ideal_piece(g, 2);
    CHECK(piece.dim() == 3);
    CHECK(piece == Subspace::span(6, {coeff_vector(zpow(3, 0, 2), 2),
                                      coeff_vector(zpow(3, 1, 2), 2),
                                      coeff_vector(zpow(3, 2, 2), 2)}));

    CHECK(graded_ideal_piece(gradient_map(hesse_cubic(Rational(6))), 2).dim() == 3);
}

TEST_CASE("is_finite_at_origin") {
    PolyMap squares{2, {zpow(2, 0, 2), zpow(2, 1, 2)}};
    CHECK(is_finite_at_origin(squares));

    Polynomial z1z2 = Polynomial::term(Monomial({1, 1}), Rational(1));
    PolyMap shared_line{2, {zpow(2, 0, 2), z1z2}};
    CHECK(!is_finite_at_origin(shared_line));

    CHECK(is_finite_at_origin(gradient_map(hesse_cubic(Rational(6)))));
    // The pencil degenerates exactly at t^3 = -27.
    CHECK(!is_finite_at_origin(gradient_map(hesse_cubic(Rational(-3)))));

    // z1^2 z2 + z1 z2^2 factors as z1 z2 (z1 + z2): the partials share no
    // projective root, so the gradient map is finite.
    Polynomial degen(2);
    degen.add_term(Monomial({2, 1}), Rational(1));
    degen.add_term(Monomial({1, 2}), Rational(1));
    CHECK(is_finite_at_origin(gradient_map(degen)));
}

TEST_CASE("finiteness matches the resultant oracle on binary forms") {
    std::mt19937_64 rng(311);
    int finite_seen = 0, infinite_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        unsigned d = 2 + rng() % 2;
        Polynomial p = oracles::random_form(2, d, rng);
        Polynomial q = oracles::random_form(2, d, rng);
        PolyMap map{2, {p, q}};
        bool expected = oracles::binary_forms_coprime(p, q, d, d);
        CHECK(is_finite_at_origin(map) == expected);
        (expected ? finite_seen : infinite_seen)++;
    }
    // The sweep must exercise both outcomes.
    CHECK(finite_seen > 0);
    CHECK(infinite_seen > 0);
}

TEST_CASE("graded quotient of the fermat cubic") {
    GradedQuotient q = GradedQuotient::build(gradient_map(fermat(3, 3)));
    CHECK(q.gen_degree == 2);
    CHECK(q.top_degree == 3);
    CHECK(q.dimension == 8);

    // Quotient basis: the eight squarefree monomials.
    std::set<std::vector<unsigned>> basis;
    for (const auto& degree_block : q.quotient_bases) {
        for (const auto& m : degree_block) basis.insert(m.exps());
    }
    std::set<std::vector<unsigned>> expected{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                                             {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
    CHECK(basis == expected);

    // Normal forms: z1^2 reduces to zero, z1 z2 is its own class.
    CHECK(is_zero_vec(q.normal_form(zpow(3, 0, 2))));
    Polynomial z1z2 = Polynomial::term(Monomial({1, 1, 0}), Rational(1));
    Vec nf = q.normal_form(z1z2);
    CHECK(!is_zero_vec(nf));
    // Degrees above the top reduce to zero.
    CHECK(is_zero_vec(q.normal_form(zpow(3, 0, 4))));
}

TEST_CASE("GradedQuotient rejects infinite quotients") {
    Polynomial z1z2 = Polynomial::term(Monomial({1, 1}), Rational(1));
    PolyMap bad{2, {zpow(2, 0, 2), z1z2}};
    CHECK_THROWS_AS(GradedQuotient::build(bad), RejectError);
    try {
        GradedQuotient::build(bad);
    } catch (const RejectError& e) {
        CHECK(e.reason() == Reject::NotFinite);
    }
}

TEST_CASE("build_milnor_table canonical basis") {
    GradedTable g = build_milnor_table(gradient_map(fermat(3, 3)));
    CHECK(g.table.dim() == 8);
    CHECK(g.degree_of == std::vector<unsigned>{0, 1, 1, 1, 2, 2, 2, 3});
    CHECK(g.basis_in_canonical == Matrix::identity(8));
    CHECK(validate_table(g.table).ok());
    CHECK(unit(g.table) == Vec{Rational(1), Rational(0), Rational(0), Rational(0),
                               Rational(0), Rational(0), Rational(0), Rational(0)});

    // Classes multiply like monomials where no reduction happens:
    // z1 * z2 = z1 z2. Basis order in degree 1 is z1, z2, z3 and in
    // degree 2 it is z1 z2, z1 z3, z2 z3.
    CHECK(to_dense(g.table.product(1, 2), 8) ==
          Vec{Rational(0), Rational(0), Rational(0), Rational(0), Rational(1),
              Rational(0), Rational(0), Rational(0)});
    // z1 * z1 = z1^2 reduces to zero.
    CHECK(g.table.product(1, 1).empty());

    GradedTable squares = build_milnor_table(PolyMap{2, {zpow(2, 0, 2), zpow(2, 1, 2)}});
    CHECK(squares.table.dim() == 4);
    CHECK(squares.degree_of == std::vector<unsigned>{0, 1, 1, 2});
}

TEST_CASE("build_milnor_table rejects infinite quotients") {
    Polynomial z1z2 = Polynomial::term(Monomial({1, 1}), Rational(1));
    PolyMap bad{2, {zpow(2, 0, 2), z1z2}};
    CHECK_THROWS_AS(build_milnor_table(bad), RejectError);
}

TEST_CASE("explicit basis reproduces the family table") {
    for (long tv : {6L, 0L, 1L, -2L}) {
        Rational t(tv);
        GradedTable g = build_milnor_table(gradient_map(hesse_cubic(t)), fixtures::e6_basis());
        CHECK(g.table == fixtures::e6_table(t));
        CHECK(g.degree_of == std::vector<unsigned>{0, 1, 2, 1, 1, 3, 2, 1});
        CHECK(validate_table(g.table).ok());
    }
}

TEST_CASE("explicit basis validates degree tags and independence") {
    auto basis = fixtures::e6_basis();
    PolyMap g = gradient_map(hesse_cubic(Rational(6)));

    // Wrong filtration degree on one element.
    auto bad_degree = basis;
    bad_degree[7].degree = 2;
    CHECK_THROWS_AS(build_milnor_table(g, bad_degree), std::invalid_argument);

    // Dependent set: one element repeated.
    auto dependent = basis;
    dependent[2] = dependent[6];
    CHECK_THROWS_AS(build_milnor_table(g, dependent), std::invalid_argument);

    // First element must represent the unit.
    auto no_unit = basis;
    no_unit[0].poly = Rational(2) * no_unit[0].poly;
    CHECK_THROWS_AS(build_milnor_table(g, no_unit), std::invalid_argument);

    // Wrong element count.
    auto short_basis = basis;
    short_basis.pop_back();
    CHECK_THROWS_AS(build_milnor_table(g, short_basis), std::invalid_argument);
}

TEST_CASE("hilbert_function") {
    CHECK(hilbert_function(gradient_map(hesse_cubic(Rational(6)))) ==
          std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(hilbert_function(PolyMap{2, {zpow(2, 0, 2), zpow(2, 1, 2)}}) ==
          std::vector<std::size_t>{1, 2, 1});
    CHECK(hilbert_function(gradient_map(fermat(2, 4))) ==
          std::vector<std::size_t>{1, 2, 3, 2, 1});
}

TEST_CASE("hilbert function equals the power series oracle") {
    // Fermat-type generators sweep every (n, m) with n <= 3, m <= 4.
    for (std::size_t n = 2; n <= 3; ++n) {
        for (unsigned m = 2; m <= 4; ++m) {
            PolyMap p{n, {}};
            for (std::size_t i = 0; i < n; ++i) p.components.push_back(zpow(n, i, m));
            CHECK(hilbert_function(p) == oracles::hilbert_series_oracle(n, m));
        }
    }
    // Non-diagonal examples with the same Hilbert function.
    CHECK(hilbert_function(gradient_map(hesse_cubic(Rational(2)))) ==
          oracles::hilbert_series_oracle(3, 2));
    Polynomial degen(2);
    degen.add_term(Monomial({2, 1}), Rational(1));
    degen.add_term(Monomial({1, 2}), Rational(1));
    CHECK(hilbert_function(gradient_map(degen)) == oracles::hilbert_series_oracle(2, 2));
}

TEST_CASE("loewy dimensions agree with the grading") {
    std::mt19937_64 rng(401);
    int built = 0;
    while (built < 8) {
        Polynomial q = oracles::random_form(2, 3 + rng() % 2, rng);
        PolyMap g = gradient_map(q);
        if (!is_finite_at_origin(g)) continue;
        GradedTable table = build_milnor_table(g);
        CHECK(loewy_dims(table.table) == hilbert_function(g));
        ++built;
    }
}

TEST_CASE("socle_jacobian_check") {
    PolyMap squares{2, {zpow(2, 0, 2), zpow(2, 1, 2)}};
    CHECK(socle_jacobian_check(squares, build_milnor_table(squares)));

    PolyMap fermat3 = gradient_map(fermat(3, 3));
    CHECK(socle_jacobian_check(fermat3, build_milnor_table(fermat3)));

    PolyMap g6 = gradient_map(hesse_cubic(Rational(6)));
    CHECK(socle_jacobian_check(g6, build_milnor_table(g6)));
    CHECK(socle_jacobian_check(g6, build_milnor_table(g6, fixtures::e6_basis())));
}

TEST_CASE("scramble_table") {
    AlgebraTable t = fixtures::e6_table(Rational(6));

    // Seed 0 is the identity change of basis.
    CHECK(scramble_table(t, 0) == t);

    AlgebraTable s1 = scramble_table(t, 1);
    AlgebraTable s1_again = scramble_table(t, 1);
    CHECK(s1 == s1_again);

    AlgebraTable s2 = scramble_table(t, 2);
    CHECK(!(s1 == s2));
    CHECK(!(s1 == t));

    for (const AlgebraTable& s : {s1, s2}) {
        CHECK(validate_table(s).ok());
        CHECK(s.dim() == t.dim());
        CHECK(nil_index(s, maximal_ideal(s)) == 3);
        CHECK(loewy_dims(s) == std::vector<std::size_t>{1, 3, 3, 1});
        CHECK(is_gorenstein(s));
    }
}
