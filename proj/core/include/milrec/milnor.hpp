#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "milrec/algebra_table.hpp"
#include "milrec/polynomial.hpp"
#include "milrec/subspace.hpp"

namespace milrec {

// Graded data of the quotient of the polynomial ring by the ideal generated
// by a finite square map P of degree-m forms. The quotient vanishes above
// top_degree = n(m-1), and each graded piece carries the canonical monomial
// basis: the non-pivot monomials of the RREF of the ideal piece.
struct GradedQuotient {
    PolyMap generators;
    unsigned gen_degree = 0;
    unsigned top_degree = 0;
    std::vector<Subspace> ideal_pieces;                 // index 0..top_degree
    std::vector<std::vector<Monomial>> quotient_bases;  // index 0..top_degree
    std::size_t dimension = 0;
    std::vector<std::size_t> offsets;  // global index of the first degree-i basis vector

    // Throws RejectError(NotFinite) when the quotient is infinite
    // dimensional, std::invalid_argument when P is not a square map of
    // equal-degree forms.
    static GradedQuotient build(const PolyMap& p);

    // Coordinates of the class of q in the global quotient basis. Degrees
    // above top_degree reduce to zero.
    Vec normal_form(const Polynomial& q) const;
};

// One element of a user-supplied quotient basis: a polynomial
// representative together with its filtration degree (the i with class in
// m^i but not m^{i+1}).
struct BasisElement {
    unsigned degree = 0;
    Polynomial poly{1};
};

// Multiplication table of a graded quotient on a chosen basis. Basis
// vector 0 is always the unit. In canonical mode monomial_of lists the
// defining quotient monomials and basis_in_canonical is the identity; for a
// user basis monomial_of is empty and basis_in_canonical's column j holds
// the canonical class coordinates of basis vector j.
struct GradedTable {
    AlgebraTable table{1};
    std::vector<unsigned> degree_of;
    std::vector<Monomial> monomial_of;
    Matrix basis_in_canonical;
};

// Gradient of a form of degree at least 3. A form of lower degree is a
// precondition violation; an inhomogeneous input throws
// RejectError(NotHomogeneous).
PolyMap gradient_map(const Polynomial& q);

// Degree-i piece of the ideal generated by the components of p, as a
// subspace of the degree-i coefficient space.
Subspace graded_ideal_piece(const PolyMap& p, unsigned i);

// Finiteness of the quotient, equivalently P^{-1}(0) = {0}: the ideal must
// fill the entire coefficient space in degree n(m-1)+1.
bool is_finite_at_origin(const PolyMap& p);

GradedTable build_milnor_table(const PolyMap& p);
GradedTable build_milnor_table(const PolyMap& p, const std::vector<BasisElement>& basis);

// Dimensions of the graded pieces, degree 0 through n(m-1). Throws
// RejectError(NotFinite) on an infinite quotient.
std::vector<std::size_t> hilbert_function(const PolyMap& p);

// True iff the class of the Jacobian determinant of p is nonzero in the
// quotient and spans the annihilator of the maximal ideal of g's table.
bool socle_jacobian_check(const PolyMap& p, const GradedTable& g);

// Deterministic change of basis by a seeded random invertible integer
// matrix with entries in [-3, 3]. Seed 0 is reserved for the identity; any
// other seed draws matrices from mt19937_64 until one is invertible.
AlgebraTable scramble_table(const AlgebraTable& t, std::uint64_t seed);

// z1^3 + z2^3 + z3^3 + t z1 z2 z3.
Polynomial hesse_cubic(const Rational& t);

}  // namespace milrec
