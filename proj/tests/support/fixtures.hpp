#pragma once

// Shared fixture builders for the test binaries. The elliptic-family table
// is written out coefficient by coefficient so that the library's own
// builders can be checked against an independent transcription.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "milrec/algebra_table.hpp"
#include "milrec/milnor.hpp"
#include "milrec/polynomial.hpp"
#include "milrec/rational.hpp"

namespace fixtures {

using milrec::AlgebraTable;
using milrec::BasisElement;
using milrec::Monomial;
using milrec::Polynomial;
using milrec::Rational;
using milrec::SparseVec;

// Dimension-8 local Gorenstein table of the elliptic cubic family
// z1^3 + z2^3 + z3^3 + t z1 z2 z3, on the basis e_0, ..., e_7 (e_0 the
// unit). Valid for every rational t; the algebra is a Milnor table only
// when t^3 != -27.
inline AlgebraTable e6_table(const Rational& t) {
    const Rational a = t / Rational(3);  // t/3
    AlgebraTable tab(8);
    for (std::size_t j = 0; j < 8; ++j) tab.set_product(0, j, {{j, Rational(1)}});
    tab.set_product(1, 1, {{2, -a}, {5, Rational(2) * a}});
    tab.set_product(1, 2, {{5, Rational(1)}});
    tab.set_product(1, 3, {{4, Rational(1)}, {5, Rational(-1)}, {7, Rational(-1)}});
    tab.set_product(1, 4, {{6, Rational(1)}});
    tab.set_product(1, 7, {{6, Rational(1)}});
    tab.set_product(3, 3, {{6, -a}});
    tab.set_product(3, 4, {{2, Rational(1)}, {5, Rational(-2)}});
    tab.set_product(3, 6, {{5, Rational(1)}});
    tab.set_product(3, 7, {{2, Rational(1)}, {5, Rational(-2)}});
    tab.set_product(4, 4, {{4, -a}, {5, Rational(2) + t}, {7, a}});
    tab.set_product(4, 7, {{4, -a}, {5, Rational(1) + t}, {7, a}});
    tab.set_product(7, 7, {{4, -a}, {5, t}, {7, a}});
    return tab;
}

// Quotient basis realizing e6_table on the actual Milnor quotient: degree
// tags with polynomial representatives in the classes Z_i.
inline std::vector<BasisElement> e6_basis() {
    auto mono = [](unsigned a, unsigned b, unsigned c) { return Monomial({a, b, c}); };
    auto poly = [&](std::vector<std::pair<Monomial, Rational>> terms) {
        Polynomial p(3);
        for (const auto& [m, coef] : terms) p.add_term(m, coef);
        return p;
    };
    std::vector<BasisElement> basis;
    basis.push_back({0, poly({{mono(0, 0, 0), 1}})});
    basis.push_back({1, poly({{mono(1, 0, 0), 1}, {mono(1, 0, 1), 1}})});
    basis.push_back({2, poly({{mono(0, 1, 1), 1}, {mono(1, 1, 1), 2}})});
    basis.push_back({1, poly({{mono(0, 1, 0), 1}, {mono(0, 1, 1), 1}})});
    basis.push_back({1, poly({{mono(0, 0, 1), 1}, {mono(1, 1, 0), 1}, {mono(1, 1, 1), 3}})});
    basis.push_back({3, poly({{mono(1, 1, 1), 1}})});
    basis.push_back({2, poly({{mono(1, 0, 1), 1}})});
    basis.push_back({1, poly({{mono(0, 0, 1), 1}})});
    return basis;
}

// Monomial complete intersection Q[x_1..x_k]/(x_1^{d_1}, ..., x_k^{d_k}).
// Basis: all exponent tuples below the caps, ordered by total degree and
// then decreasing lexicographic order, so index 0 is the unit.
inline AlgebraTable monomial_ci_table(const std::vector<unsigned>& caps) {
    std::vector<std::vector<unsigned>> tuples{{}};
    for (unsigned cap : caps) {
        std::vector<std::vector<unsigned>> next;
        for (const auto& prefix : tuples) {
            for (unsigned e = 0; e < cap; ++e) {
                auto extended = prefix;
                extended.push_back(e);
                next.push_back(std::move(extended));
            }
        }
        tuples = std::move(next);
    }
    std::sort(tuples.begin(), tuples.end(), [](const auto& x, const auto& y) {
        unsigned dx = 0, dy = 0;
        for (unsigned e : x) dx += e;
        for (unsigned e : y) dy += e;
        if (dx != dy) return dx < dy;
        return x > y;  // decreasing lexicographic within a degree
    });
    auto index_of = [&](const std::vector<unsigned>& t) -> std::size_t {
        for (std::size_t i = 0; i < tuples.size(); ++i) {
            if (tuples[i] == t) return i;
        }
        return tuples.size();
    };
    AlgebraTable tab(tuples.size());
    for (std::size_t a = 0; a < tuples.size(); ++a) {
        for (std::size_t b = a; b < tuples.size(); ++b) {
            std::vector<unsigned> sum(caps.size());
            bool vanished = false;
            for (std::size_t i = 0; i < caps.size(); ++i) {
                sum[i] = tuples[a][i] + tuples[b][i];
                if (sum[i] >= caps[i]) vanished = true;
            }
            if (!vanished) tab.set_product(a, b, {{index_of(sum), Rational(1)}});
        }
    }
    return tab;
}

// Q x Q with componentwise product: has a unit but two maximal ideals.
inline AlgebraTable qq_table() {
    AlgebraTable tab(2);
    tab.set_product(0, 0, {{0, Rational(1)}});
    tab.set_product(1, 1, {{1, Rational(1)}});
    return tab;
}

// Q[x]/(x^2) on the basis {1 + x, x}, where the unit has coordinates
// (1, -1).
inline AlgebraTable shifted_dual_numbers_table() {
    AlgebraTable tab(2);
    tab.set_product(0, 0, {{0, Rational(1)}, {1, Rational(1)}});
    tab.set_product(0, 1, {{1, Rational(1)}});
    return tab;
}

// Commutative but non-associative: (e0 e1) e1 = 0 while e0 (e1 e1) = e0.
inline AlgebraTable broken_associativity_table() {
    AlgebraTable tab(2);
    tab.set_product(0, 0, {{0, Rational(1)}});
    tab.set_product(1, 1, {{0, Rational(1)}});
    return tab;
}

}  // namespace fixtures
